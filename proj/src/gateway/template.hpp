#pragma once

#include "util/jsonl.hpp"

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace trialkit::gateway {

/// Prompt body with named {slot} placeholders. Every required slot must
/// appear in the body exactly once.
struct PromptTemplate {
  std::string name;
  std::string body;
  std::vector<std::string> required_slots;

  /// Throws ValidationError when a required slot is absent or repeated.
  void validate() const;

  static PromptTemplate from_json(const json& j);
};

/// Substitutes every required slot. A missing slot raises ValidationError
/// naming the slot; slots supplied but unused are reported through
/// `warnings` and otherwise ignored.
std::string render_template(const PromptTemplate& t,
                            const std::map<std::string, std::string>& slots,
                            std::vector<std::string>* warnings = nullptr);

/// Directory of *.json template files, loaded once. Templates ship with the
/// repository and are freely swappable.
class TemplateStore {
public:
  explicit TemplateStore(const std::filesystem::path& dir);

  const PromptTemplate& get(const std::string& name) const;
  bool has(const std::string& name) const;
  std::vector<std::string> names() const;

private:
  std::map<std::string, PromptTemplate> templates_;
};

} // namespace trialkit::gateway
