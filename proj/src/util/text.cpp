#include "util/text.hpp"

#include <unicode/normalizer2.h>
#include <unicode/unistr.h>

#include <algorithm>
#include <cctype>

namespace trialkit::text {

std::string nfc(std::string_view utf8) {
  UErrorCode ec = U_ZERO_ERROR;
  const icu::Normalizer2* norm = icu::Normalizer2::getNFCInstance(ec);
  if (U_FAILURE(ec) || norm == nullptr) return std::string(utf8);
  icu::UnicodeString in = icu::UnicodeString::fromUTF8(
      icu::StringPiece(utf8.data(), static_cast<int32_t>(utf8.size())));
  ec = U_ZERO_ERROR;
  icu::UnicodeString out = norm->normalize(in, ec);
  if (U_FAILURE(ec)) return std::string(utf8);
  std::string result;
  out.toUTF8String(result);
  return result;
}

namespace {

// ASCII whitespace plus NBSP (U+00A0, UTF-8 C2 A0).
bool ws_at(std::string_view s, size_t i, size_t& len) {
  unsigned char c = static_cast<unsigned char>(s[i]);
  if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v') {
    len = 1;
    return true;
  }
  if (c == 0xC2 && i + 1 < s.size() && static_cast<unsigned char>(s[i + 1]) == 0xA0) {
    len = 2;
    return true;
  }
  return false;
}

} // namespace

std::string collapse_ws(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  bool pending_space = false;
  size_t i = 0;
  while (i < s.size()) {
    size_t wlen = 0;
    if (ws_at(s, i, wlen)) {
      pending_space = !out.empty();
      i += wlen;
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    out.push_back(s[i]);
    ++i;
  }
  return out;
}

std::string normalize_text(std::string_view s) { return collapse_ws(nfc(s)); }

std::string lower_ascii(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return out;
}

bool is_blank(std::string_view s) {
  size_t i = 0;
  while (i < s.size()) {
    size_t wlen = 0;
    if (!ws_at(s, i, wlen)) return false;
    i += wlen;
  }
  return true;
}

std::vector<std::string> tokenize(std::string_view s) {
  std::vector<std::string> tokens;
  std::string cur;
  for (char ch : s) {
    unsigned char c = static_cast<unsigned char>(ch);
    if (std::isalnum(c)) {
      cur.push_back(static_cast<char>(std::tolower(c)));
    } else if (!cur.empty()) {
      tokens.push_back(std::move(cur));
      cur.clear();
    }
  }
  if (!cur.empty()) tokens.push_back(std::move(cur));
  return tokens;
}

std::string normalize_term(std::string_view s) {
  std::string t = lower_ascii(collapse_ws(nfc(s)));
  while (!t.empty()) {
    char c = t.back();
    if (c == '.' || c == ',' || c == ';' || c == ':' || c == '!' || c == '?') {
      t.pop_back();
    } else {
      break;
    }
  }
  // stripping punctuation can expose trailing whitespace
  while (!t.empty() && t.back() == ' ') t.pop_back();
  return t;
}

size_t ifind(std::string_view haystack, std::string_view needle, size_t from) {
  if (needle.empty() || haystack.size() < needle.size()) return std::string_view::npos;
  auto lower = [](unsigned char c) { return std::tolower(c); };
  for (size_t i = from; i + needle.size() <= haystack.size(); ++i) {
    size_t j = 0;
    while (j < needle.size() &&
           lower(static_cast<unsigned char>(haystack[i + j])) ==
               lower(static_cast<unsigned char>(needle[j]))) {
      ++j;
    }
    if (j == needle.size()) return i;
  }
  return std::string_view::npos;
}

std::string trim(std::string_view s) {
  size_t b = 0;
  size_t e = s.size();
  size_t wlen = 0;
  while (b < e && ws_at(s, b, wlen)) b += wlen;
  while (e > b) {
    // walk back one byte at a time; multi-byte NBSP handled by re-probing
    size_t back = e - 1;
    if (ws_at(s, back, wlen) && wlen == 1) {
      e = back;
    } else if (back >= 1 && ws_at(s, back - 1, wlen) && wlen == 2) {
      e = back - 1;
    } else {
      break;
    }
  }
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_lines(std::string_view s) {
  std::vector<std::string> lines;
  size_t start = 0;
  for (size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == '\n') {
      std::string_view line = s.substr(start, i - start);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      lines.emplace_back(line);
      start = i + 1;
    }
  }
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out.append(sep);
    out.append(parts[i]);
  }
  return out;
}

std::vector<std::string> unique_stable(const std::vector<std::string>& items) {
  std::vector<std::string> out;
  for (const auto& item : items) {
    if (std::find(out.begin(), out.end(), item) == out.end()) out.push_back(item);
  }
  return out;
}

size_t count_words(std::string_view s) {
  size_t n = 0;
  bool in_word = false;
  for (char ch : s) {
    bool space = std::isspace(static_cast<unsigned char>(ch)) != 0;
    if (!space && !in_word) ++n;
    in_word = !space;
  }
  return n;
}

bool starts_with_ci(std::string_view s, std::string_view prefix) {
  return s.size() >= prefix.size() && ifind(s.substr(0, prefix.size()), prefix) == 0;
}

} // namespace trialkit::text
