#include "search/query.hpp"

#include "util/errors.hpp"
#include "util/text.hpp"

#include <algorithm>

namespace trialkit::search {

std::string category_name(Category c) {
  switch (c) {
  case Category::diseases: return "diseases";
  case Category::interventions: return "interventions";
  case Category::phases: return "phases";
  case Category::statuses: return "statuses";
  case Category::study_types: return "study_types";
  }
  return "diseases";
}

Category category_from(const std::string& name) {
  for (Category c : kCategoryOrder) {
    if (category_name(c) == name) return c;
  }
  throw ValidationError("unknown query category: " + name);
}

Vocabulary Vocabulary::defaults() {
  Vocabulary v;
  v.phases = {"early phase 1", "phase 1", "phase 2", "phase 3", "phase 4"};
  v.statuses = {"not yet recruiting", "recruiting",  "enrolling by invitation",
                "active, not recruiting", "suspended", "terminated",
                "completed", "withdrawn", "unknown"};
  v.study_types = {"interventional", "observational", "expanded access"};
  return v;
}

Vocabulary Vocabulary::from_json(const json& j) {
  Vocabulary v = defaults();
  auto load = [&](const char* key, std::vector<std::string>& into) {
    if (!j.contains(key)) return;
    into.clear();
    for (const auto& t : j.at(key)) into.push_back(text::normalize_term(t.get<std::string>()));
  };
  load("phases", v.phases);
  load("statuses", v.statuses);
  load("study_types", v.study_types);
  return v;
}

json Vocabulary::to_json() const {
  return json{{"phases", phases}, {"statuses", statuses}, {"study_types", study_types}};
}

bool Vocabulary::allows(Category c, const std::string& t) const {
  const std::vector<std::string>* list = nullptr;
  switch (c) {
  case Category::phases: list = &phases; break;
  case Category::statuses: list = &statuses; break;
  case Category::study_types: list = &study_types; break;
  default: return true; // open-class
  }
  return std::find(list->begin(), list->end(), t) != list->end();
}

const std::vector<std::string>& StructuredQuery::terms(Category c) const {
  switch (c) {
  case Category::diseases: return diseases;
  case Category::interventions: return interventions;
  case Category::phases: return phases;
  case Category::statuses: return statuses;
  case Category::study_types: return study_types;
  }
  return diseases;
}

std::vector<std::string>& StructuredQuery::terms(Category c) {
  switch (c) {
  case Category::diseases: return diseases;
  case Category::interventions: return interventions;
  case Category::phases: return phases;
  case Category::statuses: return statuses;
  case Category::study_types: return study_types;
  }
  return diseases;
}

bool StructuredQuery::all_empty() const {
  for (Category c : kCategoryOrder) {
    if (!terms(c).empty()) return false;
  }
  return true;
}

json StructuredQuery::to_json() const {
  json j = json::object();
  for (Category c : kCategoryOrder) j[category_name(c)] = terms(c);
  return j;
}

StructuredQuery StructuredQuery::from_json(const json& j, const Vocabulary& vocab, bool strict) {
  StructuredQuery q;
  for (Category c : kCategoryOrder) {
    const std::string key = category_name(c);
    if (!j.contains(key) || !j.at(key).is_array()) continue;
    std::vector<std::string> terms;
    for (const auto& t : j.at(key)) {
      std::string norm = text::normalize_term(t.get<std::string>());
      if (norm.empty()) continue;
      if (!vocab.allows(c, norm)) {
        if (strict) {
          throw ValidationError("term '" + norm + "' is outside the " + key + " vocabulary");
        }
        continue;
      }
      terms.push_back(std::move(norm));
    }
    q.terms(c) = text::unique_stable(terms);
  }
  return q;
}

StructuredQuery StructuredQuery::sanitize(const StructuredQuery& raw, const Vocabulary& vocab) {
  StructuredQuery q;
  for (Category c : kCategoryOrder) {
    std::vector<std::string> terms;
    for (const auto& t : raw.terms(c)) {
      std::string norm = text::normalize_term(t);
      if (!norm.empty() && vocab.allows(c, norm)) terms.push_back(std::move(norm));
    }
    q.terms(c) = text::unique_stable(terms);
  }
  return q;
}

std::string canonical_registry_label(const std::string& registry_value) {
  static const std::vector<std::pair<std::string, std::string>> enum_map = {
      {"EARLY_PHASE1", "early phase 1"},
      {"PHASE1", "phase 1"},
      {"PHASE2", "phase 2"},
      {"PHASE3", "phase 3"},
      {"PHASE4", "phase 4"},
      {"NA", ""},
      {"ACTIVE_NOT_RECRUITING", "active, not recruiting"},
      {"NOT_YET_RECRUITING", "not yet recruiting"},
      {"ENROLLING_BY_INVITATION", "enrolling by invitation"},
      {"RECRUITING", "recruiting"},
      {"COMPLETED", "completed"},
      {"SUSPENDED", "suspended"},
      {"TERMINATED", "terminated"},
      {"WITHDRAWN", "withdrawn"},
      {"UNKNOWN", "unknown"},
      {"INTERVENTIONAL", "interventional"},
      {"OBSERVATIONAL", "observational"},
      {"EXPANDED_ACCESS", "expanded access"},
  };
  std::string token = text::trim(registry_value);
  for (const auto& [from, to] : enum_map) {
    if (token == from) return to;
  }
  return text::normalize_term(registry_value);
}

} // namespace trialkit::search
