#pragma once

#include "search/query.hpp"
#include "util/jsonl.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace trialkit::metrics {

struct MetricValue {
  std::string name;
  double value = 0.0;
  size_t support = 0;
  std::optional<std::vector<double>> per_sample;

  json to_json() const;
};

/// |a∩b| / |a∪b|; both empty counts as perfect agreement (1.0).
double jaccard_index(const std::set<std::string>& a, const std::set<std::string>& b);

struct QueryJaccard {
  std::map<std::string, double> per_category; // category name -> Jaccard
  double overall = 0.0;                       // unweighted mean of the five
};

QueryJaccard query_jaccard(const search::StructuredQuery& pred,
                           const search::StructuredQuery& gold);

struct RougeScores {
  double rouge1 = 0.0;
  double rouge2 = 0.0;
  double rougeL = 0.0;
};

/// Unigram/bigram overlap F1 and LCS F1 over the documented tokenizer
/// (lowercase, split on non-alphanumerics). Empty candidate or reference
/// scores zero.
RougeScores rouge_scores(const std::string& candidate, const std::string& reference);

/// Sentence-level BLEU-4. Higher-order precisions (n >= 2) take +1 additive
/// smoothing on numerator and denominator; unigram precision is unsmoothed,
/// so fully disjoint texts score exactly 0. Brevity penalty e^(1 - r/c)
/// applies when the candidate is shorter than the reference.
double bleu_score(const std::string& candidate, const std::string& reference);

struct ClassificationReport {
  double bacc = 0.0;
  double kappa = 0.0;
  double macro_precision = 0.0;
  double macro_recall = 0.0;
  double macro_f1 = 0.0;
  double micro_f1 = 0.0; // equals accuracy for single-label classification
  std::map<std::string, double> per_class_f1;
  std::vector<std::string> class_order;
  std::vector<std::vector<size_t>> confusion; // rows gold, cols pred

  json to_json() const;
};

/// BACC = mean per-class recall over classes present in gold. KAPPA uses the
/// marginal-product chance agreement. Macro P/R/F1 average over all classes;
/// a class never predicted takes precision 0.
ClassificationReport classification_metrics(const std::vector<std::string>& gold,
                                            const std::vector<std::string>& pred,
                                            const std::vector<std::string>& classes);

/// positive -> 1, everything else -> 0.
std::vector<std::string> binary_regroup(const std::vector<std::string>& labels,
                                        const std::string& positive);

/// Mean of a 0/1 relevance series; empty input is an error.
double clinical_relevance(const std::vector<int>& relevance_bits);

} // namespace trialkit::metrics
