#include "corpus/document.hpp"

#include "util/errors.hpp"

namespace trialkit::corpus {

const std::vector<std::string>& known_sources() {
  static const std::vector<std::string> sources = {
      "ClinicalTrials.gov", "ChiCTR", "EUCTR", "JRCT",  "ANZCTR", "ISRCTN", "ReBEC",
      "CRIS",               "DRKS",   "IRCT",  "TCTR",  "LTR",    "PACTR",  "SLCTR",
  };
  return sources;
}

bool is_known_source(const std::string& source) {
  for (const auto& s : known_sources()) {
    if (s == source) return true;
  }
  return false;
}

namespace {

json date_json(const std::optional<Date>& d) {
  if (!d) return nullptr;
  return d->iso();
}

std::optional<Date> date_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  auto d = Date::parse(j.get<std::string>());
  if (!d) throw ParseError("invalid calendar date: " + j.get<std::string>());
  return d;
}

std::vector<std::string> strings_from(const json& j) {
  std::vector<std::string> out;
  for (const auto& item : j) out.push_back(item.get<std::string>());
  return out;
}

} // namespace

json TrialDocument::to_json() const {
  json arms_j = json::array();
  for (const auto& a : arms) arms_j.push_back({{"label", a.label}, {"description", a.description}});
  json elig = {
      {"inclusion", eligibility.inclusion},
      {"exclusion", eligibility.exclusion},
      {"min_age", eligibility.min_age},
      {"max_age", eligibility.max_age},
      {"sexes", eligibility.sexes},
      {"accepts_healthy_volunteers", eligibility.accepts_healthy_volunteers.has_value()
                                         ? json(*eligibility.accepts_healthy_volunteers)
                                         : json(nullptr)},
      {"unsplit", eligibility.unsplit},
  };
  return json{
      {"id", id},
      {"source", source},
      {"registration_date", date_json(registration_date)},
      {"public_title", public_title},
      {"scientific_title", scientific_title},
      {"brief_summary", brief_summary},
      {"detailed_description", detailed_description},
      {"conditions", conditions},
      {"interventions", interventions},
      {"phase", phase},
      {"status", status},
      {"study_type", study_type},
      {"eligibility", elig},
      {"arms", arms_j},
      {"outcome_measures",
       {{"primary", outcome_measures.primary}, {"secondary", outcome_measures.secondary}}},
      {"mesh_terms", mesh_terms},
      {"raw", raw},
  };
}

TrialDocument TrialDocument::from_json(const json& j) {
  TrialDocument d;
  d.id = j.at("id").get<std::string>();
  d.source = j.at("source").get<std::string>();
  d.registration_date = date_from(j.at("registration_date"));
  d.public_title = j.at("public_title").get<std::string>();
  d.scientific_title = j.at("scientific_title").get<std::string>();
  d.brief_summary = j.at("brief_summary").get<std::string>();
  d.detailed_description = j.at("detailed_description").get<std::string>();
  d.conditions = strings_from(j.at("conditions"));
  d.interventions = strings_from(j.at("interventions"));
  d.phase = j.at("phase").get<std::string>();
  d.status = j.at("status").get<std::string>();
  d.study_type = j.at("study_type").get<std::string>();
  const json& e = j.at("eligibility");
  d.eligibility.inclusion = strings_from(e.at("inclusion"));
  d.eligibility.exclusion = strings_from(e.at("exclusion"));
  d.eligibility.min_age = e.at("min_age").get<std::string>();
  d.eligibility.max_age = e.at("max_age").get<std::string>();
  d.eligibility.sexes = e.at("sexes").get<std::string>();
  if (!e.at("accepts_healthy_volunteers").is_null()) {
    d.eligibility.accepts_healthy_volunteers = e.at("accepts_healthy_volunteers").get<bool>();
  }
  d.eligibility.unsplit = e.value("unsplit", false);
  for (const auto& a : j.at("arms")) {
    d.arms.push_back({a.at("label").get<std::string>(), a.at("description").get<std::string>()});
  }
  d.outcome_measures.primary = strings_from(j.at("outcome_measures").at("primary"));
  d.outcome_measures.secondary = strings_from(j.at("outcome_measures").at("secondary"));
  d.mesh_terms = strings_from(j.at("mesh_terms"));
  d.raw = j.value("raw", json::object());
  return d;
}

json TrialPaper::to_json() const {
  return json{
      {"pmid", pmid},
      {"title", title},
      {"abstract", abstract_text},
      {"full_text", full_text.has_value() ? json(*full_text) : json(nullptr)},
      {"mesh_terms", mesh_terms},
      {"publication_date", date_json(publication_date)},
  };
}

TrialPaper TrialPaper::from_json(const json& j) {
  TrialPaper p;
  p.pmid = j.at("pmid").get<std::string>();
  p.title = j.at("title").get<std::string>();
  p.abstract_text = j.at("abstract").get<std::string>();
  if (!j.at("full_text").is_null()) p.full_text = j.at("full_text").get<std::string>();
  p.mesh_terms = strings_from(j.at("mesh_terms"));
  p.publication_date = date_from(j.at("publication_date"));
  return p;
}

} // namespace trialkit::corpus
