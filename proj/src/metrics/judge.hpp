#pragma once

#include "gateway/gateway.hpp"
#include "gateway/template.hpp"
#include "metrics/metrics.hpp"

namespace trialkit::metrics {

struct JudgeVerdict {
  std::string kind; // "relevance_bit" | "goal_alignment_bit" | "conclusion_label"
  std::string value;
  std::string raw_text;
};

struct SummaryPair {
  std::string gold;
  std::string generated;
};

std::vector<std::string> default_conclusion_taxonomy();

/// Word-level yes/no search; nullopt when neither appears.
std::optional<int> parse_yes_no(const std::string& answer);

/// Standalone 0/1 token search; nullopt when neither appears.
std::optional<int> parse_bit(const std::string& answer);

/// Taxonomy label with the latest occurrence in the answer; ties go to the
/// longer label. Case-insensitive.
std::optional<std::string> parse_label(const std::string& answer,
                                       const std::vector<std::string>& taxonomy);

struct JudgeRate {
  double rate = 0.0;
  size_t support = 0;
  size_t unparsed = 0;
  std::vector<int> bits;
};

/// Same-goal bit per pair from the judge; unparseable verdicts count 0 and
/// are flagged.
JudgeRate goal_alignment_rate(const std::vector<SummaryPair>& pairs, gateway::ChatGateway& judge,
                              const gateway::TemplateStore& templates,
                              const gateway::ChatParams& params);

struct ConsistencyResult {
  double rate = 0.0;
  size_t support = 0;
  size_t unparsed = 0;
  std::vector<std::pair<std::string, std::string>> labels; // (gold label, generated label)
};

/// Labels gold and generated conclusions independently, then scores the
/// fraction of matching label pairs. Unparseable labels never match.
ConsistencyResult conclusion_consistency(const std::vector<SummaryPair>& pairs,
                                         gateway::ChatGateway& judge,
                                         const gateway::TemplateStore& templates,
                                         const std::vector<std::string>& taxonomy,
                                         const gateway::ChatParams& params);

struct RelevanceVerdict {
  int bit = 0;
  bool unparsed = false;
  std::string raw_text;
};

/// One clinical-relevance bit comparing a generated design section with its
/// reference, via the per-subtask judge template
/// (judge_relevance_{criteria|study_arms|outcome_measures}).
RelevanceVerdict judge_relevance(const std::string& reference, const std::string& generated,
                                 const std::string& subtask, gateway::ChatGateway& judge,
                                 const gateway::TemplateStore& templates,
                                 const gateway::ChatParams& params);

} // namespace trialkit::metrics
