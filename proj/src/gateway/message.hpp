#pragma once

#include "util/jsonl.hpp"

#include <string>
#include <vector>

namespace trialkit::gateway {

enum class Role { system, user, assistant };

std::string role_name(Role r);
Role role_from(const std::string& name);

struct ChatMessage {
  Role role;
  std::string content;
  bool operator==(const ChatMessage&) const = default;
};

struct ChatParams {
  double temperature = 0.0; // evaluation default; determinism matters more than variety
  int max_tokens = 2048;
  std::string model_id;
  bool operator==(const ChatParams&) const = default;
};

struct ChatRequest {
  std::vector<ChatMessage> messages;
  ChatParams params;

  /// Rejects empty transcripts, empty content, a system message after the
  /// head, and two consecutive assistant messages.
  void validate() const;

  json messages_json() const;

  /// Digest input for the response cache: model id, params, full transcript.
  std::string cache_key_material() const;
};

/// Append keeping user runs merged so roles stay sensible.
void append_user(std::vector<ChatMessage>& transcript, const std::string& content);

} // namespace trialkit::gateway
