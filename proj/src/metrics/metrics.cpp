#include "metrics/metrics.hpp"

#include "util/errors.hpp"
#include "util/text.hpp"

#include <algorithm>
#include <cmath>

namespace trialkit::metrics {

json MetricValue::to_json() const {
  json j{{"name", name}, {"value", value}, {"support", support}};
  if (per_sample) j["per_sample"] = *per_sample;
  return j;
}

double jaccard_index(const std::set<std::string>& a, const std::set<std::string>& b) {
  if (a.empty() && b.empty()) return 1.0;
  size_t inter = 0;
  for (const auto& x : a) {
    if (b.count(x)) ++inter;
  }
  size_t uni = a.size() + b.size() - inter;
  return static_cast<double>(inter) / static_cast<double>(uni);
}

QueryJaccard query_jaccard(const search::StructuredQuery& pred,
                           const search::StructuredQuery& gold) {
  QueryJaccard out;
  double sum = 0.0;
  for (search::Category c : search::kCategoryOrder) {
    std::set<std::string> p(pred.terms(c).begin(), pred.terms(c).end());
    std::set<std::string> g(gold.terms(c).begin(), gold.terms(c).end());
    double j = jaccard_index(p, g);
    out.per_category[search::category_name(c)] = j;
    sum += j;
  }
  out.overall = sum / 5.0;
  return out;
}

namespace {

using Tokens = std::vector<std::string>;

std::map<std::string, size_t> ngram_counts(const Tokens& tokens, size_t n) {
  std::map<std::string, size_t> counts;
  if (tokens.size() < n) return counts;
  for (size_t i = 0; i + n <= tokens.size(); ++i) {
    std::string key;
    for (size_t j = 0; j < n; ++j) {
      if (j > 0) key.push_back('\x1f');
      key += tokens[i + j];
    }
    ++counts[key];
  }
  return counts;
}

double overlap_f1(const Tokens& cand, const Tokens& ref, size_t n) {
  auto cc = ngram_counts(cand, n);
  auto rc = ngram_counts(ref, n);
  size_t total_c = 0;
  size_t total_r = 0;
  for (const auto& [_, v] : cc) total_c += v;
  for (const auto& [_, v] : rc) total_r += v;
  if (total_c == 0 || total_r == 0) return 0.0;
  size_t match = 0;
  for (const auto& [gram, count] : cc) {
    auto it = rc.find(gram);
    if (it != rc.end()) match += std::min(count, it->second);
  }
  double p = static_cast<double>(match) / total_c;
  double r = static_cast<double>(match) / total_r;
  if (p + r == 0.0) return 0.0;
  return 2.0 * p * r / (p + r);
}

size_t lcs_length(const Tokens& a, const Tokens& b) {
  if (a.empty() || b.empty()) return 0;
  std::vector<size_t> prev(b.size() + 1, 0);
  std::vector<size_t> cur(b.size() + 1, 0);
  for (size_t i = 1; i <= a.size(); ++i) {
    for (size_t j = 1; j <= b.size(); ++j) {
      cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

} // namespace

RougeScores rouge_scores(const std::string& candidate, const std::string& reference) {
  Tokens cand = text::tokenize(candidate);
  Tokens ref = text::tokenize(reference);
  RougeScores out;
  if (cand.empty() || ref.empty()) return out;
  out.rouge1 = overlap_f1(cand, ref, 1);
  out.rouge2 = overlap_f1(cand, ref, 2);
  size_t lcs = lcs_length(cand, ref);
  double p = static_cast<double>(lcs) / cand.size();
  double r = static_cast<double>(lcs) / ref.size();
  out.rougeL = (p + r == 0.0) ? 0.0 : 2.0 * p * r / (p + r);
  return out;
}

double bleu_score(const std::string& candidate, const std::string& reference) {
  Tokens cand = text::tokenize(candidate);
  Tokens ref = text::tokenize(reference);
  if (cand.empty() || ref.empty()) return 0.0;

  double log_sum = 0.0;
  for (size_t n = 1; n <= 4; ++n) {
    auto cc = ngram_counts(cand, n);
    auto rc = ngram_counts(ref, n);
    size_t total = 0;
    size_t match = 0;
    for (const auto& [gram, count] : cc) {
      total += count;
      auto it = rc.find(gram);
      if (it != rc.end()) match += std::min(count, it->second);
    }
    double num = static_cast<double>(match);
    double den = static_cast<double>(total);
    if (n >= 2) { // additive smoothing on higher orders only
      num += 1.0;
      den += 1.0;
    }
    if (den == 0.0 || num == 0.0) return 0.0; // unigram miss or degenerate candidate
    log_sum += 0.25 * std::log(num / den);
  }
  double bp = 1.0;
  if (cand.size() < ref.size()) {
    bp = std::exp(1.0 - static_cast<double>(ref.size()) / static_cast<double>(cand.size()));
  }
  return bp * std::exp(log_sum);
}

json ClassificationReport::to_json() const {
  json confusion_j = json::array();
  for (const auto& row : confusion) confusion_j.push_back(row);
  json per_class = json::object();
  for (const auto& [cls, f1] : per_class_f1) per_class[cls] = f1;
  return json{{"bacc", bacc},
              {"kappa", kappa},
              {"macro_precision", macro_precision},
              {"macro_recall", macro_recall},
              {"macro_f1", macro_f1},
              {"micro_f1", micro_f1},
              {"per_class_f1", per_class},
              {"class_order", class_order},
              {"confusion", confusion_j}};
}

ClassificationReport classification_metrics(const std::vector<std::string>& gold,
                                            const std::vector<std::string>& pred,
                                            const std::vector<std::string>& classes) {
  if (gold.empty() || gold.size() != pred.size()) {
    throw ValidationError("classification_metrics requires equal non-empty label vectors");
  }
  std::map<std::string, size_t> class_index;
  for (size_t i = 0; i < classes.size(); ++i) class_index[classes[i]] = i;
  auto index_of = [&](const std::string& label) {
    auto it = class_index.find(label);
    if (it == class_index.end()) throw ValidationError("label outside class set: " + label);
    return it->second;
  };

  const size_t k = classes.size();
  const double n = static_cast<double>(gold.size());
  std::vector<std::vector<size_t>> confusion(k, std::vector<size_t>(k, 0));
  for (size_t i = 0; i < gold.size(); ++i) {
    ++confusion[index_of(gold[i])][index_of(pred[i])];
  }

  std::vector<double> gold_count(k, 0), pred_count(k, 0), correct(k, 0);
  double total_correct = 0;
  for (size_t g = 0; g < k; ++g) {
    for (size_t p = 0; p < k; ++p) {
      gold_count[g] += confusion[g][p];
      pred_count[p] += confusion[g][p];
    }
    correct[g] = confusion[g][g];
    total_correct += confusion[g][g];
  }

  ClassificationReport rep;
  rep.class_order = classes;
  rep.confusion = confusion;

  double recall_sum = 0.0;
  size_t present = 0;
  double precision_sum = 0.0, f1_sum = 0.0, macro_recall_sum = 0.0;
  for (size_t c = 0; c < k; ++c) {
    double recall = gold_count[c] > 0 ? correct[c] / gold_count[c] : 0.0;
    double precision = pred_count[c] > 0 ? correct[c] / pred_count[c] : 0.0;
    double f1 = (precision + recall) > 0 ? 2 * precision * recall / (precision + recall) : 0.0;
    rep.per_class_f1[classes[c]] = f1;
    if (gold_count[c] > 0) {
      recall_sum += recall;
      ++present;
    }
    precision_sum += precision;
    macro_recall_sum += recall;
    f1_sum += f1;
  }
  rep.bacc = present > 0 ? recall_sum / present : 0.0;
  rep.macro_precision = precision_sum / k;
  rep.macro_recall = macro_recall_sum / k;
  rep.macro_f1 = f1_sum / k;
  rep.micro_f1 = total_correct / n;

  double p_o = total_correct / n;
  double p_e = 0.0;
  for (size_t c = 0; c < k; ++c) {
    p_e += (gold_count[c] / n) * (pred_count[c] / n);
  }
  if (std::abs(1.0 - p_e) < 1e-15) {
    rep.kappa = p_o >= 1.0 - 1e-15 ? 1.0 : 0.0; // degenerate single-class case
  } else {
    rep.kappa = (p_o - p_e) / (1.0 - p_e);
  }
  return rep;
}

std::vector<std::string> binary_regroup(const std::vector<std::string>& labels,
                                        const std::string& positive) {
  std::vector<std::string> out;
  out.reserve(labels.size());
  for (const auto& l : labels) out.push_back(l == positive ? "1" : "0");
  return out;
}

double clinical_relevance(const std::vector<int>& relevance_bits) {
  if (relevance_bits.empty()) {
    throw ValidationError("clinical_relevance requires at least one verdict");
  }
  double sum = 0.0;
  for (int bit : relevance_bits) {
    if (bit != 0 && bit != 1) throw ValidationError("relevance verdicts must be 0 or 1");
    sum += bit;
  }
  return sum / static_cast<double>(relevance_bits.size());
}

} // namespace trialkit::metrics
