#include "corpus/registry_parse.hpp"

#include "util/errors.hpp"
#include "util/text.hpp"

#include <algorithm>
#include <set>

namespace trialkit::corpus {

namespace {

using text::normalize_text;

std::string norm_field(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return {};
  return normalize_text(j.at(key).get<std::string>());
}

std::vector<std::string> norm_list(const json& j, const char* key) {
  std::vector<std::string> out;
  if (!j.contains(key) || !j.at(key).is_array()) return out;
  for (const auto& item : j.at(key)) {
    std::string v = normalize_text(item.get<std::string>());
    if (!v.empty()) out.push_back(std::move(v));
  }
  return text::unique_stable(out);
}

std::optional<Date> parse_date_field(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return Date::parse(j.at(key).get<std::string>());
}

const json* dig(const json& j, std::initializer_list<const char*> path) {
  const json* cur = &j;
  for (const char* key : path) {
    if (!cur->is_object() || !cur->contains(key)) return nullptr;
    cur = &cur->at(key);
  }
  return cur;
}

std::string strip_bullet(std::string_view line) {
  std::string s = text::trim(line);
  if (s.empty()) return s;
  if (s[0] == '-' || s[0] == '*' || s[0] == '+') return text::trim(s.substr(1));
  // UTF-8 bullet U+2022
  if (s.size() >= 3 && static_cast<unsigned char>(s[0]) == 0xE2 &&
      static_cast<unsigned char>(s[1]) == 0x80 && static_cast<unsigned char>(s[2]) == 0xA2) {
    return text::trim(s.substr(3));
  }
  // "1." / "12)" enumerations
  size_t i = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i > 0 && i < s.size() && (s[i] == '.' || s[i] == ')')) return text::trim(s.substr(i + 1));
  return s;
}

std::vector<std::string> segment_criteria(std::string_view block) {
  std::vector<std::string> items;
  for (const auto& line : text::split_lines(block)) {
    std::string item = normalize_text(strip_bullet(line));
    if (!item.empty()) items.push_back(std::move(item));
  }
  return text::unique_stable(items);
}

// Fields that concern contact persons never make it into the canonical form;
// parse keeps them only inside `raw` (scrub_pii drops them from there too).

TrialDocument parse_ctgov(const json& raw) {
  TrialDocument d;
  d.source = "ClinicalTrials.gov";
  const json* ident = dig(raw, {"protocolSection", "identificationModule"});
  if (ident == nullptr || !ident->contains("nctId") || ident->at("nctId").is_null() ||
      ident->at("nctId").get<std::string>().empty()) {
    throw ParseError("record is missing its id (protocolSection.identificationModule.nctId)",
                     d.source);
  }
  d.id = ident->at("nctId").get<std::string>();
  d.public_title = norm_field(*ident, "briefTitle");
  d.scientific_title = norm_field(*ident, "officialTitle");

  if (const json* st = dig(raw, {"protocolSection", "statusModule"})) {
    d.status = norm_field(*st, "overallStatus");
    d.registration_date = parse_date_field(*st, "studyFirstSubmitDate");
    if (!d.registration_date) {
      if (const json* ps = dig(*st, {"studyFirstPostDateStruct"})) {
        d.registration_date = parse_date_field(*ps, "date");
      }
    }
  }
  if (const json* desc = dig(raw, {"protocolSection", "descriptionModule"})) {
    d.brief_summary = norm_field(*desc, "briefSummary");
    d.detailed_description = norm_field(*desc, "detailedDescription");
  }
  if (const json* cond = dig(raw, {"protocolSection", "conditionsModule"})) {
    d.conditions = norm_list(*cond, "conditions");
  }
  if (const json* design = dig(raw, {"protocolSection", "designModule"})) {
    d.study_type = norm_field(*design, "studyType");
    if (design->contains("phases") && design->at("phases").is_array()) {
      std::vector<std::string> phases;
      for (const auto& p : design->at("phases")) {
        phases.push_back(normalize_text(p.get<std::string>()));
      }
      d.phase = text::join(text::unique_stable(phases), ", ");
    }
  }
  if (const json* ai = dig(raw, {"protocolSection", "armsInterventionsModule"})) {
    if (ai->contains("armGroups")) {
      for (const auto& g : ai->at("armGroups")) {
        Arm a{norm_field(g, "label"), norm_field(g, "description")};
        if (!a.label.empty() || !a.description.empty()) d.arms.push_back(std::move(a));
      }
    }
    if (ai->contains("interventions")) {
      std::vector<std::string> names;
      for (const auto& iv : ai->at("interventions")) {
        std::string name = norm_field(iv, "name");
        if (!name.empty()) names.push_back(std::move(name));
      }
      d.interventions = text::unique_stable(names);
    }
  }
  if (const json* out = dig(raw, {"protocolSection", "outcomesModule"})) {
    auto measures = [](const json& arr) {
      std::vector<std::string> out;
      for (const auto& m : arr) {
        std::string v = norm_field(m, "measure");
        if (!v.empty()) out.push_back(std::move(v));
      }
      return text::unique_stable(out);
    };
    if (out->contains("primaryOutcomes")) {
      d.outcome_measures.primary = measures(out->at("primaryOutcomes"));
    }
    if (out->contains("secondaryOutcomes")) {
      d.outcome_measures.secondary = measures(out->at("secondaryOutcomes"));
    }
  }
  if (const json* elig = dig(raw, {"protocolSection", "eligibilityModule"})) {
    if (elig->contains("eligibilityCriteria") && !elig->at("eligibilityCriteria").is_null()) {
      d.eligibility = split_criteria_text(elig->at("eligibilityCriteria").get<std::string>());
    }
    d.eligibility.min_age = norm_field(*elig, "minimumAge");
    d.eligibility.max_age = norm_field(*elig, "maximumAge");
    d.eligibility.sexes = norm_field(*elig, "sex");
    if (elig->contains("healthyVolunteers") && elig->at("healthyVolunteers").is_boolean()) {
      d.eligibility.accepts_healthy_volunteers = elig->at("healthyVolunteers").get<bool>();
    }
  }
  std::vector<std::string> mesh;
  for (auto path : {std::initializer_list<const char*>{"derivedSection", "conditionBrowseModule"},
                    std::initializer_list<const char*>{"derivedSection",
                                                       "interventionBrowseModule"}}) {
    if (const json* mod = dig(raw, path)) {
      if (mod->contains("meshes")) {
        for (const auto& m : mod->at("meshes")) {
          std::string term = norm_field(m, "term");
          if (!term.empty()) mesh.push_back(std::move(term));
        }
      }
    }
  }
  d.mesh_terms = text::unique_stable(mesh);
  d.raw = raw;
  return d;
}

TrialDocument parse_generic(const json& raw, const std::string& source) {
  TrialDocument d;
  d.source = source;
  if (!raw.contains("id") || raw.at("id").is_null() || raw.at("id").get<std::string>().empty()) {
    throw ParseError("record is missing its id", source);
  }
  d.id = raw.at("id").get<std::string>();
  d.public_title = norm_field(raw, "public_title");
  d.scientific_title = norm_field(raw, "scientific_title");
  d.brief_summary = norm_field(raw, "brief_summary");
  d.detailed_description = norm_field(raw, "detailed_description");
  d.conditions = norm_list(raw, "conditions");
  d.interventions = norm_list(raw, "interventions");
  d.phase = norm_field(raw, "phase");
  d.status = norm_field(raw, "status");
  d.study_type = norm_field(raw, "study_type");
  d.registration_date = parse_date_field(raw, "registration_date");

  if (raw.contains("inclusion_criteria") || raw.contains("exclusion_criteria")) {
    d.eligibility.inclusion = norm_list(raw, "inclusion_criteria");
    d.eligibility.exclusion = norm_list(raw, "exclusion_criteria");
  } else if (raw.contains("eligibility_text") && !raw.at("eligibility_text").is_null()) {
    d.eligibility = split_criteria_text(raw.at("eligibility_text").get<std::string>());
  }
  d.eligibility.min_age = norm_field(raw, "min_age");
  d.eligibility.max_age = norm_field(raw, "max_age");
  d.eligibility.sexes = norm_field(raw, "sexes");
  if (raw.contains("healthy_volunteers") && raw.at("healthy_volunteers").is_boolean()) {
    d.eligibility.accepts_healthy_volunteers = raw.at("healthy_volunteers").get<bool>();
  }
  if (raw.contains("arms") && raw.at("arms").is_array()) {
    for (const auto& a : raw.at("arms")) {
      Arm arm{norm_field(a, "label"), norm_field(a, "description")};
      if (!arm.label.empty() || !arm.description.empty()) d.arms.push_back(std::move(arm));
    }
  }
  d.outcome_measures.primary = norm_list(raw, "primary_outcomes");
  d.outcome_measures.secondary = norm_list(raw, "secondary_outcomes");
  d.mesh_terms = norm_list(raw, "mesh_terms");
  d.raw = raw;
  return d;
}

void enforce_criteria_disjoint(EligibilityBlock& e) {
  std::set<std::string> seen(e.inclusion.begin(), e.inclusion.end());
  std::erase_if(e.exclusion, [&](const std::string& s) { return seen.count(s) > 0; });
}

} // namespace

EligibilityBlock split_criteria_text(const std::string& raw_text) {
  EligibilityBlock block;
  std::string t = text::nfc(raw_text);
  size_t inc_pos = text::ifind(t, "inclusion criteria");
  size_t exc_pos = text::ifind(t, "exclusion criteria");

  auto skip_header = [&](size_t pos, std::string_view header) {
    size_t p = pos + header.size();
    while (p < t.size() && (t[p] == ':' || t[p] == ' ' || t[p] == '\n' || t[p] == '\r')) ++p;
    return p;
  };

  if (inc_pos == std::string::npos && exc_pos == std::string::npos) {
    std::string whole = normalize_text(t);
    if (!whole.empty()) {
      block.inclusion.push_back(whole);
      block.unsplit = true;
    }
    return block;
  }

  if (inc_pos != std::string::npos) {
    size_t start = skip_header(inc_pos, "inclusion criteria");
    size_t end = (exc_pos != std::string::npos && exc_pos > inc_pos) ? exc_pos : t.size();
    block.inclusion = segment_criteria(std::string_view(t).substr(start, end - start));
  }
  if (exc_pos != std::string::npos) {
    size_t start = skip_header(exc_pos, "exclusion criteria");
    size_t end = (inc_pos != std::string::npos && inc_pos > exc_pos) ? inc_pos : t.size();
    block.exclusion = segment_criteria(std::string_view(t).substr(start, end - start));
  }
  enforce_criteria_disjoint(block);
  return block;
}

TrialDocument parse_registry_record(const json& raw, const std::string& source) {
  if (!is_known_source(source)) throw ConfigError("unknown registry source: " + source);
  if (!raw.is_object()) throw ParseError("record payload must be a JSON object", source);
  TrialDocument d =
      source == "ClinicalTrials.gov" ? parse_ctgov(raw) : parse_generic(raw, source);
  enforce_criteria_disjoint(d.eligibility);
  return d;
}

TrialPaper parse_paper_record(const json& raw) {
  if (!raw.is_object()) throw ParseError("paper payload must be a JSON object");
  if (!raw.contains("pmid") || raw.at("pmid").is_null() ||
      raw.at("pmid").get<std::string>().empty()) {
    throw ParseError("paper record is missing its pmid");
  }
  TrialPaper p;
  p.pmid = raw.at("pmid").get<std::string>();
  p.title = norm_field(raw, "title");
  if (p.title.empty()) throw ParseError("paper " + p.pmid + " is missing its title");
  p.abstract_text = norm_field(raw, "abstract");
  if (p.abstract_text.empty()) {
    throw ParseError("paper " + p.pmid + " has an empty abstract");
  }
  if (raw.contains("full_text") && !raw.at("full_text").is_null()) {
    std::string ft = normalize_text(raw.at("full_text").get<std::string>());
    if (!ft.empty()) p.full_text = std::move(ft);
  }
  p.mesh_terms = norm_list(raw, "mesh_terms");
  p.publication_date = parse_date_field(raw, "publication_date");
  return p;
}

std::vector<TrialPaper> parse_paper_batch(const std::vector<json>& raws) {
  std::vector<TrialPaper> out;
  std::set<std::string> seen;
  for (const auto& raw : raws) {
    TrialPaper p = parse_paper_record(raw);
    if (!seen.insert(p.pmid).second) {
      throw ParseError("duplicate pmid in batch: " + p.pmid);
    }
    out.push_back(std::move(p));
  }
  return out;
}

} // namespace trialkit::corpus
