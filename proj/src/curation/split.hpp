#pragma once

#include "corpus/document.hpp"

#include <string>
#include <vector>

namespace trialkit::curation {

struct SplitAssignment {
  std::string doc_id;
  std::string split; // "train" | "test" | "excluded"
  Date cutoff;
};

struct SplitManifest {
  std::vector<std::string> train;
  std::vector<std::string> test;
  std::vector<std::string> excluded;
  Date cutoff;

  json to_json() const;
  static SplitManifest from_json(const json& j);
  std::string split_of(const std::string& doc_id) const;
};

/// registration_date < cutoff -> train; >= cutoff -> test; null -> excluded.
std::vector<SplitAssignment> split_by_date(const std::vector<corpus::TrialDocument>& docs,
                                           const Date& cutoff);

SplitManifest make_manifest(const std::vector<SplitAssignment>& assignments, const Date& cutoff);

} // namespace trialkit::curation
