#include "util/jsonl.hpp"

#include "util/errors.hpp"

#include <fstream>
#include <sstream>

namespace trialkit {

void for_each_jsonl(const std::filesystem::path& path,
                    const std::function<void(json&&, size_t line_no)>& fn) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  std::string line;
  size_t line_no = 0;
  long offset = 0;
  while (std::getline(in, line)) {
    ++line_no;
    long line_start = offset;
    offset += static_cast<long>(line.size()) + 1;
    if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json doc = json::parse(line, nullptr, false);
    if (doc.is_discarded()) {
      throw ParseError("malformed JSON at " + path.string() + ":" + std::to_string(line_no),
                       path.string(), line_start);
    }
    fn(std::move(doc), line_no);
  }
}

std::vector<json> read_jsonl(const std::filesystem::path& path) {
  std::vector<json> out;
  for_each_jsonl(path, [&](json&& doc, size_t) { out.push_back(std::move(doc)); });
  return out;
}

void write_jsonl(const std::filesystem::path& path, const std::vector<json>& records) {
  std::ostringstream buf;
  for (const auto& rec : records) buf << rec.dump() << '\n';
  write_file(path, buf.str());
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  namespace fs = std::filesystem;
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw IoError("short write to " + tmp.string());
  }
  fs::rename(tmp, path);
}

} // namespace trialkit
