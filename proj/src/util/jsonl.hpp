#pragma once

#include <nlohmann/json.hpp>

#include <filesystem>
#include <functional>
#include <string>
#include <vector>

namespace trialkit {

using json = nlohmann::ordered_json;

/// Read newline-delimited JSON. Blank lines are skipped. A malformed line
/// raises ParseError carrying the 1-based line number and byte offset.
std::vector<json> read_jsonl(const std::filesystem::path& path);

void for_each_jsonl(const std::filesystem::path& path,
                    const std::function<void(json&&, size_t line_no)>& fn);

/// Write one compact JSON document per line, LF endings, trailing newline.
void write_jsonl(const std::filesystem::path& path, const std::vector<json>& records);

std::string read_file(const std::filesystem::path& path);

/// Atomic text write: temp file in the same directory, then rename.
void write_file(const std::filesystem::path& path, std::string_view content);

} // namespace trialkit
