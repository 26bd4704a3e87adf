#pragma once

#include "util/jsonl.hpp"

#include <optional>
#include <string>
#include <vector>

namespace trialkit::bench {

/// SIGIR: 0 would-not-refer, 1 would-consider, 2 highly-likely.
/// TREC2021: 0 excluded, 1 not relevant, 2 eligible.
enum class Scheme { SIGIR, TREC2021 };

std::string scheme_name(Scheme s);
Scheme scheme_from(const std::string& name);

/// Canonical label phrase per class, in class order 0..2.
const std::vector<std::string>& scheme_labels(Scheme s);

struct PatientCase {
  std::string patient_id;
  std::string note;
  std::string trial_id;
  std::string criteria;
  int gold = 0; // 0..2 in the scheme's class order
  Scheme scheme = Scheme::TREC2021;
  std::string split = "test";

  void validate() const;
  json to_json() const;
  static PatientCase from_json(const json& j);
};

std::vector<PatientCase> read_cases(const std::filesystem::path& path);

/// Free-text class parser, frozen rule: among all scheme label phrases found
/// at word boundaries (case-insensitive), the one whose last occurrence
/// starts latest wins; ties go to the longer phrase. nullopt when no label
/// phrase occurs.
std::optional<int> parse_scheme_label(const std::string& response, Scheme scheme);

} // namespace trialkit::bench
