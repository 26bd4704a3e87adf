#include "curation/shingle.hpp"

#include "util/rng.hpp"
#include "util/text.hpp"

#include <limits>

namespace trialkit::curation {

std::set<uint64_t> shingle_set(std::string_view normalized_text, size_t shingle_tokens) {
  std::vector<std::string> tokens = text::tokenize(normalized_text);
  std::set<uint64_t> out;
  if (tokens.size() < shingle_tokens) {
    if (!tokens.empty()) {
      std::string joined = text::join(tokens, "\x1f");
      out.insert(fnv1a(joined));
    }
    return out;
  }
  for (size_t i = 0; i + shingle_tokens <= tokens.size(); ++i) {
    std::string joined;
    for (size_t j = 0; j < shingle_tokens; ++j) {
      if (j > 0) joined.push_back('\x1f');
      joined.append(tokens[i + j]);
    }
    out.insert(fnv1a(joined));
  }
  return out;
}

double exact_jaccard(const std::set<uint64_t>& a, const std::set<uint64_t>& b) {
  if (a.empty() && b.empty()) return 1.0;
  if (a.empty() || b.empty()) return 0.0;
  size_t inter = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++inter;
      ++ia;
      ++ib;
    }
  }
  size_t uni = a.size() + b.size() - inter;
  return static_cast<double>(inter) / static_cast<double>(uni);
}

MinHasher::MinHasher(size_t num_slots, uint64_t seed) {
  mul_.resize(num_slots);
  add_.resize(num_slots);
  uint64_t state = seed;
  for (size_t i = 0; i < num_slots; ++i) {
    mul_[i] = splitmix64(state) | 1ULL; // odd multiplier keeps the map bijective mod 2^64
    add_[i] = splitmix64(state);
  }
}

std::vector<uint64_t> MinHasher::sketch(const std::set<uint64_t>& shingles) const {
  std::vector<uint64_t> slots(mul_.size(), std::numeric_limits<uint64_t>::max());
  for (uint64_t sh : shingles) {
    for (size_t i = 0; i < slots.size(); ++i) {
      uint64_t h = sh * mul_[i] + add_[i];
      if (h < slots[i]) slots[i] = h;
    }
  }
  return slots;
}

double MinHasher::estimate(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b) {
  if (a.empty() || a.size() != b.size()) return 0.0;
  size_t agree = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == b[i]) ++agree;
  }
  return static_cast<double>(agree) / static_cast<double>(a.size());
}

std::vector<uint64_t> band_keys(const std::vector<uint64_t>& sketch, size_t bands) {
  std::vector<uint64_t> keys;
  if (bands == 0 || sketch.empty()) return keys;
  size_t rows = sketch.size() / bands;
  if (rows == 0) return keys;
  keys.reserve(bands);
  for (size_t b = 0; b < bands; ++b) {
    uint64_t h = 1469598103934665603ULL ^ (b * 0x9e3779b97f4a7c15ULL);
    for (size_t r = 0; r < rows; ++r) {
      uint64_t v = sketch[b * rows + r];
      for (int byte = 0; byte < 8; ++byte) {
        h ^= (v >> (byte * 8)) & 0xff;
        h *= 1099511628211ULL;
      }
    }
    keys.push_back(h);
  }
  return keys;
}

} // namespace trialkit::curation
