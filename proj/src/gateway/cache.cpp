#include "gateway/cache.hpp"

#include "util/digest.hpp"
#include "util/errors.hpp"
#include "util/jsonl.hpp"

#include <chrono>

namespace trialkit::gateway {

ResponseCache::ResponseCache(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::filesystem::create_directories(dir_);
}

std::string ResponseCache::key_for(const std::string& material) { return sha256_hex(material); }

std::filesystem::path ResponseCache::path_for(const std::string& key) const {
  return dir_ / key.substr(0, 2) / (key + ".json");
}

std::optional<std::string> ResponseCache::get(const std::string& key) const {
  std::filesystem::path p = path_for(key);
  std::error_code ec;
  if (!std::filesystem::exists(p, ec)) return std::nullopt;
  json entry = json::parse(read_file(p), nullptr, false);
  if (entry.is_discarded() || !entry.contains("response")) return std::nullopt;
  return entry.at("response").get<std::string>();
}

void ResponseCache::put(const std::string& key, const std::string& model_id,
                        const std::string& response) {
  json entry{{"key", key},
             {"model_id", model_id},
             {"response", response},
             {"created_unix", std::chrono::duration_cast<std::chrono::seconds>(
                                  std::chrono::system_clock::now().time_since_epoch())
                                  .count()}};
  write_file(path_for(key), entry.dump() + "\n");
}

} // namespace trialkit::gateway
