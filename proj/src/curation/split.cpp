#include "curation/split.hpp"

#include "util/errors.hpp"

#include <algorithm>

namespace trialkit::curation {

json SplitManifest::to_json() const {
  return json{{"train", train}, {"test", test}, {"excluded", excluded}, {"cutoff", cutoff.iso()}};
}

SplitManifest SplitManifest::from_json(const json& j) {
  SplitManifest m;
  for (const auto& id : j.at("train")) m.train.push_back(id.get<std::string>());
  for (const auto& id : j.at("test")) m.test.push_back(id.get<std::string>());
  for (const auto& id : j.at("excluded")) m.excluded.push_back(id.get<std::string>());
  auto cutoff = Date::parse(j.at("cutoff").get<std::string>());
  if (!cutoff) throw ParseError("split manifest has an invalid cutoff date");
  m.cutoff = *cutoff;
  return m;
}

std::string SplitManifest::split_of(const std::string& doc_id) const {
  if (std::find(train.begin(), train.end(), doc_id) != train.end()) return "train";
  if (std::find(test.begin(), test.end(), doc_id) != test.end()) return "test";
  if (std::find(excluded.begin(), excluded.end(), doc_id) != excluded.end()) return "excluded";
  return {};
}

std::vector<SplitAssignment> split_by_date(const std::vector<corpus::TrialDocument>& docs,
                                           const Date& cutoff) {
  std::vector<SplitAssignment> out;
  out.reserve(docs.size());
  for (const auto& doc : docs) {
    std::string split;
    if (!doc.registration_date.has_value()) {
      split = "excluded";
    } else if (*doc.registration_date < cutoff) {
      split = "train";
    } else {
      split = "test";
    }
    out.push_back({doc.id, split, cutoff});
  }
  return out;
}

SplitManifest make_manifest(const std::vector<SplitAssignment>& assignments, const Date& cutoff) {
  SplitManifest m;
  m.cutoff = cutoff;
  for (const auto& a : assignments) {
    if (a.split == "train") {
      m.train.push_back(a.doc_id);
    } else if (a.split == "test") {
      m.test.push_back(a.doc_id);
    } else {
      m.excluded.push_back(a.doc_id);
    }
  }
  return m;
}

} // namespace trialkit::curation
