#pragma once

#include "gateway/backend.hpp"
#include "util/errors.hpp"

#include <optional>

namespace trialkit::gateway {

struct HttpBackendConfig {
  std::string endpoint;                        // e.g. "http://127.0.0.1:8089"
  std::string path = "/v1/chat/completions";   // OpenAI-style chat completion route
  std::string model_id;
  std::string credential_env;                  // empty: no Authorization header
  int timeout_seconds = 60;
};

/// OpenAI-style chat-completion client: messages array in, choices array out.
/// Throws ConfigError when the named credential variable is unset, and
/// TransportError (retryable for 429/5xx/connection failures) otherwise.
class HttpBackend : public ChatBackend {
public:
  explicit HttpBackend(HttpBackendConfig config);

  std::string complete(const ChatRequest& req) override;
  std::string id() const override { return config_.model_id; }

private:
  HttpBackendConfig config_;
  std::optional<std::string> credential_;
};

bool is_retryable_transport(const std::exception& e);

} // namespace trialkit::gateway
