#pragma once

#include "gateway/message.hpp"

#include <memory>
#include <string>

namespace trialkit::gateway {

/// One chat-completion provider. Implementations: OpenAI-style HTTP servers,
/// scripted test doubles, and in-test lambdas.
class ChatBackend {
public:
  virtual ~ChatBackend() = default;

  /// Returns the assistant text for one request. Throws TransportError on
  /// unrecoverable transport problems (retry policy lives in the gateway).
  virtual std::string complete(const ChatRequest& req) = 0;

  /// Stable identifier recorded in reports (model id or stub name).
  virtual std::string id() const = 0;
};

using BackendPtr = std::shared_ptr<ChatBackend>;

/// Adapter for test lambdas.
class FnBackend : public ChatBackend {
public:
  using Fn = std::function<std::string(const ChatRequest&)>;
  FnBackend(std::string id, Fn fn) : id_(std::move(id)), fn_(std::move(fn)) {}
  std::string complete(const ChatRequest& req) override { return fn_(req); }
  std::string id() const override { return id_; }

private:
  std::string id_;
  Fn fn_;
};

} // namespace trialkit::gateway
