#include "gateway/http_backend.hpp"

#include "util/errors.hpp"

#include <httplib.h>

#include <cstdlib>

namespace trialkit::gateway {

HttpBackend::HttpBackend(HttpBackendConfig config) : config_(std::move(config)) {
  if (config_.endpoint.empty()) throw ConfigError("backend endpoint is empty");
  if (!config_.credential_env.empty()) {
    const char* value = std::getenv(config_.credential_env.c_str());
    if (value == nullptr || *value == '\0') {
      throw ConfigError("credential environment variable " + config_.credential_env +
                        " is not set");
    }
    credential_ = value;
  }
}

std::string HttpBackend::complete(const ChatRequest& req) {
  json body{{"model", config_.model_id.empty() ? req.params.model_id : config_.model_id},
            {"messages", req.messages_json()},
            {"temperature", req.params.temperature},
            {"max_tokens", req.params.max_tokens}};

  httplib::Client client(config_.endpoint);
  client.set_connection_timeout(config_.timeout_seconds);
  client.set_read_timeout(config_.timeout_seconds);
  httplib::Headers headers;
  if (credential_) headers.emplace("Authorization", "Bearer " + *credential_);

  auto res = client.Post(config_.path, headers, body.dump(), "application/json");
  if (!res) {
    throw TransportError("connection to " + config_.endpoint + " failed: " +
                         httplib::to_string(res.error()));
  }
  if (res->status == 429 || res->status >= 500) {
    throw TransportError("backend returned HTTP " + std::to_string(res->status), {}, true);
  }
  if (res->status != 200) {
    throw TransportError("backend returned HTTP " + std::to_string(res->status) + ": " +
                             res->body.substr(0, 200),
                         {}, false);
  }
  json reply = json::parse(res->body, nullptr, false);
  if (reply.is_discarded() || !reply.contains("choices") || reply.at("choices").empty()) {
    throw TransportError("backend response is not a chat completion", {}, false);
  }
  const json& choice = reply.at("choices").at(0);
  if (!choice.contains("message") || !choice.at("message").contains("content")) {
    throw TransportError("backend response has no message content", {}, false);
  }
  return choice.at("message").at("content").get<std::string>();
}

bool is_retryable_transport(const std::exception& e) {
  if (const auto* te = dynamic_cast<const TransportError*>(&e)) return te->retryable;
  return false;
}

} // namespace trialkit::gateway
