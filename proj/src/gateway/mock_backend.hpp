#pragma once

#include "gateway/backend.hpp"

#include <mutex>
#include <optional>
#include <regex>
#include <vector>

namespace trialkit::gateway {

/// One scripted rule: when `pattern` matches anywhere in the last user
/// message, reply with `response` ($1..$9 expand to capture groups).
struct StubRule {
  std::string pattern;
  std::string response;
};

struct StubConfig {
  std::string name = "stub";
  std::vector<StubRule> rules;
  // responses consumed strictly in order; takes precedence over rules
  std::vector<std::string> sequence;
  // every response becomes "<prefix>_<digest(request)>"; overrides everything
  std::string sentinel_prefix;
  // fall back to built-in behaviors that understand the shipped prompt
  // templates (term extraction, expansion, design conversations, judging)
  bool cooperative = true;
  std::string fallback = "OK.";

  static StubConfig from_json(const json& j);
};

/// Deterministic offline stand-in for a chat model. Rule and cooperative
/// modes are stateless, so responses do not depend on request order or
/// worker count.
class StubBackend : public ChatBackend {
public:
  explicit StubBackend(StubConfig config);

  std::string complete(const ChatRequest& req) override;
  std::string id() const override { return config_.name; }

  /// All requests seen, in arrival order (test inspection).
  std::vector<ChatRequest> recorded() const;
  size_t calls() const;

private:
  std::string respond(const ChatRequest& req);

  StubConfig config_;
  std::vector<std::pair<std::regex, std::string>> compiled_;
  mutable std::mutex mu_;
  size_t sequence_pos_ = 0;
  std::vector<ChatRequest> recorded_;
};

/// Built-in cooperative behaviors, exposed for targeted tests.
std::optional<std::string> cooperative_response(const ChatRequest& req);

} // namespace trialkit::gateway
