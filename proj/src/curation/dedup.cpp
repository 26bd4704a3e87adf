#include "curation/dedup.hpp"

#include "util/errors.hpp"
#include "util/text.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

namespace trialkit::curation {

json DedupDecision::to_json() const {
  return json{{"kept_id", kept_id},
              {"dropped_ids", dropped_ids},
              {"reason", reason},
              {"similarity", similarity}};
}

std::string dedup_text(const corpus::TrialDocument& doc) {
  std::vector<std::string> parts;
  parts.push_back(doc.public_title);
  parts.push_back(doc.scientific_title);
  parts.push_back(doc.brief_summary);
  parts.push_back(doc.detailed_description);
  for (const auto& c : doc.conditions) parts.push_back(c);
  for (const auto& i : doc.interventions) parts.push_back(i);
  for (const auto& c : doc.eligibility.inclusion) parts.push_back(c);
  for (const auto& c : doc.eligibility.exclusion) parts.push_back(c);
  for (const auto& a : doc.arms) parts.push_back(a.label + " " + a.description);
  for (const auto& m : doc.outcome_measures.primary) parts.push_back(m);
  for (const auto& m : doc.outcome_measures.secondary) parts.push_back(m);
  std::erase_if(parts, [](const std::string& s) { return s.empty(); });
  return text::lower_ascii(text::join(parts, " \x1e "));
}

namespace {

struct KeepOrder {
  size_t priority_rank;
  bool undated;
  Date date;
  std::string id;

  bool operator<(const KeepOrder& other) const {
    if (priority_rank != other.priority_rank) return priority_rank < other.priority_rank;
    if (undated != other.undated) return !undated; // dated wins
    if (date != other.date) return date < other.date;
    return id < other.id;
  }
};

size_t priority_rank(const std::string& source, const std::vector<std::string>& priority) {
  for (size_t i = 0; i < priority.size(); ++i) {
    if (priority[i] == source) return i;
  }
  return priority.size();
}

} // namespace

DedupResult dedup_corpus(const std::vector<corpus::TrialDocument>& docs,
                         const DedupOptions& opts) {
  if (!(opts.threshold > 0.0 && opts.threshold <= 1.0)) {
    throw ValidationError("dedup threshold must lie in (0, 1]");
  }
  const std::vector<std::string>& priority =
      opts.source_priority.empty() ? corpus::known_sources() : opts.source_priority;

  std::vector<size_t> order(docs.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<KeepOrder> keys(docs.size());
  for (size_t i = 0; i < docs.size(); ++i) {
    const auto& d = docs[i];
    keys[i] = KeepOrder{priority_rank(d.source, priority), !d.registration_date.has_value(),
                        d.registration_date.value_or(Date{}), d.id};
  }
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return keys[a] < keys[b]; });

  MinHasher hasher(opts.sketch_slots);
  std::unordered_map<std::string, std::string> exact_kept; // dedup_text -> kept id
  std::unordered_map<uint64_t, std::vector<size_t>> buckets;
  std::vector<std::set<uint64_t>> kept_shingles(docs.size());
  std::vector<bool> keep(docs.size(), false);
  std::vector<DedupDecision> decisions;

  for (size_t idx : order) {
    const auto& doc = docs[idx];
    std::string content = dedup_text(doc);

    auto exact_it = exact_kept.find(content);
    if (exact_it != exact_kept.end()) {
      decisions.push_back({exact_it->second, {doc.id}, "exact-hash", 1.0});
      continue;
    }

    std::set<uint64_t> shingles = shingle_set(content, opts.shingle_tokens);
    std::vector<uint64_t> sketch = hasher.sketch(shingles);
    std::vector<uint64_t> bands = band_keys(sketch, opts.bands);

    // candidates among already-kept docs, verified with exact Jaccard
    double best_sim = 0.0;
    size_t best_kept = SIZE_MAX;
    std::set<size_t> candidates;
    for (uint64_t key : bands) {
      auto it = buckets.find(key);
      if (it == buckets.end()) continue;
      candidates.insert(it->second.begin(), it->second.end());
    }
    for (size_t cand : candidates) {
      double sim = exact_jaccard(shingles, kept_shingles[cand]);
      if (sim > best_sim) {
        best_sim = sim;
        best_kept = cand;
      }
    }

    if (best_kept != SIZE_MAX && best_sim >= opts.threshold) {
      decisions.push_back({docs[best_kept].id, {doc.id}, "near-dup", best_sim});
      continue;
    }

    keep[idx] = true;
    exact_kept.emplace(std::move(content), doc.id);
    kept_shingles[idx] = std::move(shingles);
    for (uint64_t key : bands) buckets[key].push_back(idx);
  }

  DedupResult result;
  for (size_t i = 0; i < docs.size(); ++i) {
    if (keep[i]) result.kept.push_back(docs[i]);
  }
  result.decisions = std::move(decisions);
  return result;
}

} // namespace trialkit::curation
