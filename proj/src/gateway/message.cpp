#include "gateway/message.hpp"

#include "util/errors.hpp"

namespace trialkit::gateway {

std::string role_name(Role r) {
  switch (r) {
  case Role::system: return "system";
  case Role::user: return "user";
  case Role::assistant: return "assistant";
  }
  return "user";
}

Role role_from(const std::string& name) {
  if (name == "system") return Role::system;
  if (name == "user") return Role::user;
  if (name == "assistant") return Role::assistant;
  throw ValidationError("unknown chat role: " + name);
}

void ChatRequest::validate() const {
  if (messages.empty()) throw ValidationError("chat request has no messages");
  for (size_t i = 0; i < messages.size(); ++i) {
    if (messages[i].content.empty()) {
      throw ValidationError("chat message " + std::to_string(i) + " has empty content");
    }
    if (messages[i].role == Role::system && i != 0) {
      throw ValidationError("system message allowed only at the head of the transcript");
    }
    if (i > 0 && messages[i].role == Role::assistant &&
        messages[i - 1].role == Role::assistant) {
      throw ValidationError("two consecutive assistant messages at " + std::to_string(i));
    }
  }
}

json ChatRequest::messages_json() const {
  json arr = json::array();
  for (const auto& m : messages) {
    arr.push_back({{"role", role_name(m.role)}, {"content", m.content}});
  }
  return arr;
}

std::string ChatRequest::cache_key_material() const {
  json j{{"model_id", params.model_id},
         {"temperature", params.temperature},
         {"max_tokens", params.max_tokens},
         {"messages", messages_json()}};
  return j.dump();
}

void append_user(std::vector<ChatMessage>& transcript, const std::string& content) {
  if (!transcript.empty() && transcript.back().role == Role::user) {
    transcript.back().content += "\n\n" + content;
  } else {
    transcript.push_back({Role::user, content});
  }
}

} // namespace trialkit::gateway
