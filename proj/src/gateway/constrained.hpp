#pragma once

#include "gateway/gateway.hpp"

#include <functional>
#include <map>
#include <optional>

namespace trialkit::gateway {

/// One key of a sequential fill schema. `parse` returns the accepted value or
/// nullopt when the backend answer violates the constraint.
struct FillKey {
  std::string key;
  std::string prompt;
  std::function<std::optional<json>(const std::string&)> parse;
  json fallback = json::array();
};

struct FillResult {
  std::vector<std::pair<std::string, json>> values; // schema order
  std::vector<std::string> flagged_keys;            // fallback applied
  std::vector<std::string> attempt_log;
};

/// Fill keys strictly in schema order over one growing conversation. Each
/// constraint violation triggers a corrective re-ask; after `max_attempts`
/// the key takes its fallback value and is flagged. Transport errors
/// propagate.
FillResult constrained_fill(ChatGateway& gateway, const std::vector<FillKey>& schema,
                            std::vector<ChatMessage> preamble, const ChatParams& params,
                            int max_attempts = 3);

/// Constraint helper: the first balanced JSON array of strings found in the
/// text (models often wrap answers in prose).
std::optional<json> parse_string_array(const std::string& answer);

/// First balanced JSON array of any shape.
std::optional<json> parse_json_array(const std::string& answer);

} // namespace trialkit::gateway
