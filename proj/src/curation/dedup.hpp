#pragma once

#include "corpus/document.hpp"
#include "curation/shingle.hpp"

#include <string>
#include <vector>

namespace trialkit::curation {

struct DedupDecision {
  std::string kept_id;
  std::vector<std::string> dropped_ids; // one id per decision
  std::string reason;                   // "exact-hash" | "near-dup"
  double similarity = 0.0;

  json to_json() const;
};

struct DedupOptions {
  double threshold = 0.9;
  size_t shingle_tokens = 5;
  size_t sketch_slots = 128;
  size_t bands = 32; // rows = slots / bands
  std::vector<std::string> source_priority;
};

struct DedupResult {
  std::vector<corpus::TrialDocument> kept; // input order preserved
  std::vector<DedupDecision> decisions;
};

/// Layout-independent content string a document is deduplicated on.
std::string dedup_text(const corpus::TrialDocument& doc);

/// Exact-hash pass first (equal dedup_text), then minhash banding with exact
/// Jaccard verification against the kept set. Documents are considered in
/// keep-priority order: source priority rank, then earliest registration date
/// (undated last), then lexicographic id. The survivor of any duplicate group
/// is therefore its highest-priority member, and every near-dup decision
/// carries an exact similarity >= threshold.
DedupResult dedup_corpus(const std::vector<corpus::TrialDocument>& docs,
                         const DedupOptions& opts);

} // namespace trialkit::curation
