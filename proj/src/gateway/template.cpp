#include "gateway/template.hpp"

#include "util/errors.hpp"

#include <algorithm>

namespace trialkit::gateway {

namespace {

size_t count_occurrences(const std::string& body, const std::string& needle) {
  size_t n = 0;
  size_t pos = 0;
  while ((pos = body.find(needle, pos)) != std::string::npos) {
    ++n;
    pos += needle.size();
  }
  return n;
}

} // namespace

void PromptTemplate::validate() const {
  for (const auto& slot : required_slots) {
    size_t n = count_occurrences(body, "{" + slot + "}");
    if (n == 0) {
      throw ValidationError("template '" + name + "' is missing slot {" + slot + "}");
    }
    if (n > 1) {
      throw ValidationError("template '" + name + "' repeats slot {" + slot + "}");
    }
  }
}

PromptTemplate PromptTemplate::from_json(const json& j) {
  PromptTemplate t;
  t.name = j.at("name").get<std::string>();
  t.body = j.at("body").get<std::string>();
  for (const auto& s : j.at("required_slots")) t.required_slots.push_back(s.get<std::string>());
  t.validate();
  return t;
}

std::string render_template(const PromptTemplate& t,
                            const std::map<std::string, std::string>& slots,
                            std::vector<std::string>* warnings) {
  std::string out = t.body;
  for (const auto& slot : t.required_slots) {
    auto it = slots.find(slot);
    if (it == slots.end()) {
      throw ValidationError("template '" + t.name + "' requires slot '" + slot + "'");
    }
    std::string marker = "{" + slot + "}";
    size_t pos = out.find(marker);
    out.replace(pos, marker.size(), it->second);
  }
  for (const auto& [key, _] : slots) {
    if (std::find(t.required_slots.begin(), t.required_slots.end(), key) ==
        t.required_slots.end()) {
      if (warnings) warnings->push_back("template '" + t.name + "': unused slot '" + key + "'");
    }
  }
  // a required marker surviving substitution means the slot value itself was
  // never spliced in; guard against template drift
  for (const auto& slot : t.required_slots) {
    std::string marker = "{" + slot + "}";
    auto it = slots.find(slot);
    if (out.find(marker) != std::string::npos && it->second.find(marker) == std::string::npos) {
      throw ValidationError("placeholder " + marker + " survived rendering of '" + t.name + "'");
    }
  }
  return out;
}

TemplateStore::TemplateStore(const std::filesystem::path& dir) {
  if (!std::filesystem::exists(dir)) {
    throw ConfigError("template directory does not exist: " + dir.string());
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  for (const auto& file : files) {
    json j = json::parse(read_file(file), nullptr, false);
    if (j.is_discarded()) throw ConfigError("malformed template file: " + file.string());
    PromptTemplate t = PromptTemplate::from_json(j);
    templates_[t.name] = std::move(t);
  }
}

const PromptTemplate& TemplateStore::get(const std::string& name) const {
  auto it = templates_.find(name);
  if (it == templates_.end()) throw ConfigError("unknown prompt template: " + name);
  return it->second;
}

bool TemplateStore::has(const std::string& name) const { return templates_.count(name) > 0; }

std::vector<std::string> TemplateStore::names() const {
  std::vector<std::string> out;
  for (const auto& [name, _] : templates_) out.push_back(name);
  return out;
}

} // namespace trialkit::gateway
