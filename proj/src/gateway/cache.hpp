#pragma once

#include <filesystem>
#include <mutex>
#include <optional>
#include <string>

namespace trialkit::gateway {

/// Content-addressed on-disk response store. Keys are SHA-256 digests of the
/// request material; entries are written atomically so concurrent workers can
/// share one directory.
class ResponseCache {
public:
  explicit ResponseCache(std::filesystem::path dir);

  static std::string key_for(const std::string& material);

  std::optional<std::string> get(const std::string& key) const;
  void put(const std::string& key, const std::string& model_id, const std::string& response);

  const std::filesystem::path& dir() const { return dir_; }

private:
  std::filesystem::path path_for(const std::string& key) const;
  std::filesystem::path dir_;
};

} // namespace trialkit::gateway
