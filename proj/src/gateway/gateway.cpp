#include "gateway/gateway.hpp"

#include "util/errors.hpp"

#include <chrono>
#include <cmath>

namespace trialkit::gateway {

ChatGateway::ChatGateway(BackendPtr backend, GatewayOptions options,
                         std::optional<std::filesystem::path> cache_dir,
                         std::shared_ptr<Clock> clock)
    : backend_(std::move(backend)), options_(options),
      rate_limiter_(options.requests_per_second, clock),
      inflight_(options.max_in_flight),
      clock_(clock ? std::move(clock) : std::make_shared<SteadyClock>()) {
  if (!backend_) throw ConfigError("gateway requires a backend");
  backend_id_ = backend_->id();
  if (cache_dir) cache_.emplace(*cache_dir);
}

std::string ChatGateway::complete_chat(const ChatRequest& req) {
  req.validate();
  std::string key;
  if (cache_) {
    key = ResponseCache::key_for(req.cache_key_material());
    if (auto hit = cache_->get(key)) {
      cache_hits_.fetch_add(1);
      return *hit;
    }
  }

  std::vector<std::string> attempt_log;
  for (int attempt = 1; attempt <= options_.max_attempts; ++attempt) {
    try {
      rate_limiter_.acquire();
      auto token = inflight_.enter();
      backend_calls_.fetch_add(1);
      std::string response = backend_->complete(req);
      if (cache_) cache_->put(key, req.params.model_id, response);
      return response;
    } catch (const TransportError& e) {
      attempt_log.push_back("attempt " + std::to_string(attempt) + ": " + e.what());
      if (!e.retryable || attempt == options_.max_attempts) {
        throw TransportError("chat completion failed after " + std::to_string(attempt) +
                                 " attempt(s): " + e.what(),
                             attempt_log, false);
      }
      retries_.fetch_add(1);
      double delay = options_.backoff_base_seconds * std::pow(2.0, attempt - 1);
      clock_->sleep_until(clock_->now() +
                          std::chrono::milliseconds(static_cast<long>(delay * 1000)));
    }
  }
  throw TransportError("chat completion failed", attempt_log, false);
}

ChatGateway::Stats ChatGateway::stats() const {
  return {cache_hits_.load(), backend_calls_.load(), retries_.load()};
}

} // namespace trialkit::gateway
