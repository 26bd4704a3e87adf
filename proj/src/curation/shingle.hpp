#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace trialkit::curation {

/// Hashed n-token shingles of normalized text.
std::set<uint64_t> shingle_set(std::string_view normalized_text, size_t shingle_tokens = 5);

/// Exact Jaccard on shingle sets. Both empty -> 1.0.
double exact_jaccard(const std::set<uint64_t>& a, const std::set<uint64_t>& b);

/// MinHash sketch: k independent 64-bit hash slots. Parameters derive from a
/// fixed seed so sketches are stable across runs and machines.
class MinHasher {
public:
  MinHasher(size_t num_slots = 128, uint64_t seed = 0x7261746b6c697274ULL);

  std::vector<uint64_t> sketch(const std::set<uint64_t>& shingles) const;

  /// Fraction of agreeing slots; the sketch estimate of Jaccard similarity.
  static double estimate(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b);

  size_t num_slots() const { return mul_.size(); }

private:
  std::vector<uint64_t> mul_;
  std::vector<uint64_t> add_;
};

/// Banding over a sketch for candidate generation: two documents become
/// candidates when any band hashes identically. Band count divides the slot
/// count; rows per band = slots / bands.
std::vector<uint64_t> band_keys(const std::vector<uint64_t>& sketch, size_t bands);

} // namespace trialkit::curation
