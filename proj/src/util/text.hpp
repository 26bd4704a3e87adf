#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace trialkit::text {

/// Unicode NFC composition (UTF-8 in, UTF-8 out). Invalid byte sequences are
/// replaced with U+FFFD rather than rejected.
std::string nfc(std::string_view utf8);

/// Collapse every run of whitespace (ASCII ws plus U+00A0) to a single space
/// and trim the ends.
std::string collapse_ws(std::string_view s);

/// Canonical text normalization applied at parse time: NFC then whitespace
/// collapse. Dedup and metrics assume their inputs went through this.
std::string normalize_text(std::string_view s);

std::string lower_ascii(std::string_view s);

bool is_blank(std::string_view s);

/// The documented metric tokenizer: ASCII-lowercase, split on any
/// non-alphanumeric byte. Non-ASCII bytes act as separators.
std::vector<std::string> tokenize(std::string_view s);

/// Term normalization for query categories and index terms: NFC, whitespace
/// collapse, ASCII lowercase, strip terminal punctuation (.,;:!?).
std::string normalize_term(std::string_view s);

/// Case-insensitive (ASCII) substring search; npos when absent.
size_t ifind(std::string_view haystack, std::string_view needle, size_t from = 0);

std::string trim(std::string_view s);

std::vector<std::string> split_lines(std::string_view s);

/// Join with a fixed separator.
std::string join(const std::vector<std::string>& parts, std::string_view sep);

/// Order-preserving removal of duplicates (exact string equality).
std::vector<std::string> unique_stable(const std::vector<std::string>& items);

size_t count_words(std::string_view s);

bool starts_with_ci(std::string_view s, std::string_view prefix);

} // namespace trialkit::text
