#pragma once

#include "util/dates.hpp"
#include "util/jsonl.hpp"

#include <optional>
#include <string>
#include <vector>

namespace trialkit::corpus {

/// The 14 registries we accept records from.
const std::vector<std::string>& known_sources();
bool is_known_source(const std::string& source);

struct EligibilityBlock {
  std::vector<std::string> inclusion;
  std::vector<std::string> exclusion;
  std::string min_age;
  std::string max_age;
  std::string sexes;
  std::optional<bool> accepts_healthy_volunteers;
  // set when the criteria text had no recognizable headers and went wholesale
  // into `inclusion`
  bool unsplit = false;

  bool operator==(const EligibilityBlock&) const = default;
};

struct Arm {
  std::string label;
  std::string description;
  bool operator==(const Arm&) const = default;
};

struct OutcomeMeasures {
  std::vector<std::string> primary;
  std::vector<std::string> secondary;
  bool operator==(const OutcomeMeasures&) const = default;
};

/// Canonical structured trial record. All text fields hold normalized text
/// (NFC, collapsed whitespace); list fields are order-preserving and
/// duplicate-free.
struct TrialDocument {
  std::string id;
  std::string source;
  std::optional<Date> registration_date;
  std::string public_title;
  std::string scientific_title;
  std::string brief_summary;
  std::string detailed_description;
  std::vector<std::string> conditions;
  std::vector<std::string> interventions;
  std::string phase;
  std::string status;
  std::string study_type;
  EligibilityBlock eligibility;
  std::vector<Arm> arms;
  OutcomeMeasures outcome_measures;
  std::vector<std::string> mesh_terms;
  json raw; // opaque source payload, kept for provenance

  bool operator==(const TrialDocument&) const = default;

  json to_json() const;
  static TrialDocument from_json(const json& j);
};

struct TrialPaper {
  std::string pmid;
  std::string title;
  std::string abstract_text;
  std::optional<std::string> full_text;
  std::vector<std::string> mesh_terms;
  std::optional<Date> publication_date;

  bool operator==(const TrialPaper&) const = default;

  json to_json() const;
  static TrialPaper from_json(const json& j);
};

} // namespace trialkit::corpus
