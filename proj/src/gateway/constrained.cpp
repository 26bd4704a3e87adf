#include "gateway/constrained.hpp"

#include "util/errors.hpp"

namespace trialkit::gateway {

std::optional<json> parse_json_array(const std::string& answer) {
  size_t pos = 0;
  while ((pos = answer.find('[', pos)) != std::string::npos) {
    // scan for the matching bracket, quote-aware
    int depth = 0;
    bool in_string = false;
    bool escaped = false;
    for (size_t i = pos; i < answer.size(); ++i) {
      char c = answer[i];
      if (in_string) {
        if (escaped) {
          escaped = false;
        } else if (c == '\\') {
          escaped = true;
        } else if (c == '"') {
          in_string = false;
        }
        continue;
      }
      if (c == '"') {
        in_string = true;
      } else if (c == '[') {
        ++depth;
      } else if (c == ']') {
        --depth;
        if (depth == 0) {
          json candidate = json::parse(answer.substr(pos, i - pos + 1), nullptr, false);
          if (!candidate.is_discarded() && candidate.is_array()) return candidate;
          break;
        }
      }
    }
    ++pos;
  }
  return std::nullopt;
}

std::optional<json> parse_string_array(const std::string& answer) {
  auto arr = parse_json_array(answer);
  if (!arr) return std::nullopt;
  for (const auto& item : *arr) {
    if (!item.is_string()) return std::nullopt;
  }
  return arr;
}

FillResult constrained_fill(ChatGateway& gateway, const std::vector<FillKey>& schema,
                            std::vector<ChatMessage> preamble, const ChatParams& params,
                            int max_attempts) {
  if (schema.empty()) throw ValidationError("constrained fill schema is empty");
  FillResult result;
  std::vector<ChatMessage> transcript = std::move(preamble);

  for (const auto& key : schema) {
    append_user(transcript, key.prompt);
    std::optional<json> value;
    for (int attempt = 1; attempt <= max_attempts; ++attempt) {
      ChatRequest req{transcript, params};
      std::string answer = gateway.complete_chat(req);
      transcript.push_back({Role::assistant, answer});
      value = key.parse(answer);
      if (value) {
        result.attempt_log.push_back(key.key + ": accepted on attempt " +
                                     std::to_string(attempt));
        break;
      }
      result.attempt_log.push_back(key.key + ": constraint violation on attempt " +
                                   std::to_string(attempt));
      if (attempt < max_attempts) {
        append_user(transcript,
                    "Your previous answer was not in the required format. " + key.prompt);
      }
    }
    if (!value) {
      result.flagged_keys.push_back(key.key);
      result.values.emplace_back(key.key, key.fallback);
    } else {
      result.values.emplace_back(key.key, *value);
    }
  }
  return result;
}

} // namespace trialkit::gateway
