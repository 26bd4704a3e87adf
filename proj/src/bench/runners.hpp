#pragma once

#include "bench/patient.hpp"
#include "bench/report.hpp"
#include "corpus/document.hpp"
#include "gateway/gateway.hpp"
#include "gateway/template.hpp"
#include "instruct/record.hpp"
#include "search/query.hpp"

namespace trialkit::bench {

struct RunContext {
  gateway::GatewayPtr backend;
  gateway::GatewayPtr judge; // null: judge-dependent metrics are skipped and flagged
  const gateway::TemplateStore* templates = nullptr;
  search::Vocabulary vocab = search::Vocabulary::defaults();
  gateway::ChatParams backend_params;
  gateway::ChatParams judge_params;
  std::vector<std::string> conclusion_taxonomy;
  std::string config_digest;
  uint64_t seed = 0;
  size_t workers = 1;
};

/// Query generation or expansion, decided by the dataset's task tag.
/// Generation extracts a structured query per sample and scores per-category
/// Jaccard; expansion scores set Jaccard against the gold remainder terms. A
/// backend failure flags the sample and scores it zero.
EvalReport run_search_eval(const std::vector<instruct::InstructionRecord>& dataset,
                           RunContext& ctx);

/// Generates a summary per sample, then scores ROUGE, judge-based goal
/// alignment and conclusion consistency, and the search-based keyword
/// metrics (extracted and expanded diseases/interventions).
EvalReport run_summarization_eval(const std::vector<instruct::InstructionRecord>& dataset,
                                  RunContext& ctx);

enum class DesignMode { reference, de_novo };

struct DesignDatasets {
  std::vector<instruct::InstructionRecord> criteria;
  std::vector<instruct::InstructionRecord> study_arms;
  std::vector<instruct::InstructionRecord> outcome_measures;
};

/// reference: teacher forcing from the fourth round — every prompt is built
/// from ground-truth turns only, whatever the model answered earlier.
/// de_novo: criteria -> study arms -> outcome measures, each stage's prompt
/// embedding the previous stage's generated text verbatim. One report per
/// subtask either way.
std::vector<EvalReport> run_design_eval(const DesignDatasets& datasets,
                                        const std::vector<corpus::TrialDocument>& docs,
                                        RunContext& ctx, DesignMode mode);

/// Three-class matching metrics plus the binary regrouping (positive class =
/// eligible / highly-likely). Unparseable model answers map to the middle
/// class and are flagged; one report never mixes schemes.
EvalReport run_matching_eval(const std::vector<PatientCase>& cases, RunContext& ctx);

} // namespace trialkit::bench
