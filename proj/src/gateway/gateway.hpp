#pragma once

#include "gateway/backend.hpp"
#include "gateway/cache.hpp"
#include "gateway/rate_limit.hpp"

#include <atomic>
#include <filesystem>
#include <optional>

namespace trialkit::gateway {

struct GatewayOptions {
  int max_attempts = 4;
  double backoff_base_seconds = 0.25; // doubles per retry
  size_t requests_per_second = 0;     // 0 = unlimited
  size_t max_in_flight = 8;
};

/// The single entry point modules use to talk to a chat model: response cache
/// in front, then rate/in-flight limits, then bounded retries with
/// exponential backoff. Shareable across worker threads.
class ChatGateway {
public:
  ChatGateway(BackendPtr backend, GatewayOptions options = {},
              std::optional<std::filesystem::path> cache_dir = std::nullopt,
              std::shared_ptr<Clock> clock = nullptr);

  std::string complete_chat(const ChatRequest& req);

  const std::string& backend_id() const { return backend_id_; }

  struct Stats {
    size_t cache_hits = 0;
    size_t backend_calls = 0;
    size_t retries = 0;
  };
  Stats stats() const;

private:
  BackendPtr backend_;
  std::string backend_id_;
  GatewayOptions options_;
  std::optional<ResponseCache> cache_;
  RateLimiter rate_limiter_;
  InflightLimiter inflight_;
  std::shared_ptr<Clock> clock_;
  std::atomic<size_t> cache_hits_{0};
  std::atomic<size_t> backend_calls_{0};
  std::atomic<size_t> retries_{0};
};

using GatewayPtr = std::shared_ptr<ChatGateway>;

} // namespace trialkit::gateway
