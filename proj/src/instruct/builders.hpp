#pragma once

#include "bench/patient.hpp"
#include "corpus/markdown.hpp"
#include "curation/split.hpp"
#include "gateway/gateway.hpp"
#include "gateway/template.hpp"
#include "instruct/record.hpp"
#include "search/extract.hpp"
#include "search/index.hpp"

#include <map>

namespace trialkit::instruct {

struct BuildResult {
  std::vector<InstructionRecord> records;
  std::map<std::string, size_t> counters;

  json counters_json() const;
};

/// Stable train/dev carve inside the pre-cutoff pool: 15% of train records
/// move to dev, keyed on a record identifier so the assignment survives
/// corpus growth.
std::string carve_dev(const std::string& base_split, const std::string& record_key,
                      uint64_t seed);

/// One record per document with >= 6 mesh terms: the first five terms in
/// document order form the input, the remainder the output.
BuildResult build_query_expansion_set(const std::vector<corpus::TrialDocument>& docs,
                                      const curation::SplitManifest& manifest, uint64_t seed);

/// Brief summary as target, the rest of the markdown passage as input.
/// Summaries under `min_summary_words` words are skipped.
BuildResult build_single_summarization_set(const std::vector<corpus::TrialDocument>& docs,
                                           const curation::SplitManifest& manifest,
                                           uint64_t seed, size_t min_summary_words = 20);

struct ReviewPair {
  std::vector<std::string> pmids;
  std::string review;
  std::optional<std::string> split; // honored when present

  static ReviewPair from_json(const json& j);
};

/// A pair is kept iff at least three of its pmids resolve to stored papers.
BuildResult build_multi_summarization_set(const std::vector<ReviewPair>& pairs,
                                          const std::vector<corpus::TrialPaper>& papers,
                                          const Date& cutoff, uint64_t seed);

struct QueryGenOptions {
  int rounds = 2;
  double similarity_threshold = 0.8; // 3-token shingle Jaccard on the short request texts
  size_t candidates_per_round = 5;
  size_t prompt_pool_cap = 20;
  uint64_t seed = 0;
};

/// Pool growth loop: backend proposes candidates from the current pool,
/// near-duplicates of pool members are dropped, survivors join the pool, and
/// the final pool keeps only queries with at least one registry hit. A
/// registry outage leaves records flagged "unexecuted" instead of dropping
/// them.
BuildResult build_query_generation_set(const std::vector<InstructionRecord>& seeds,
                                       gateway::ChatGateway& gw,
                                       const gateway::TemplateStore& templates,
                                       search::RegistryClient& registry,
                                       const search::Vocabulary& vocab,
                                       const gateway::ChatParams& params,
                                       const QueryGenOptions& options);

/// Two-stage conversation construction: stage 1 asks the backend for
/// per-item design reasons, stage 2 for a multi-turn conversation conditioned
/// on components, reasons, and setup. Conversations that fail the validation
/// gate (short, misshapen, or missing a ground-truth item verbatim in the
/// assistant turns) are dropped and counted.
BuildResult build_design_conversations(const std::vector<corpus::TrialDocument>& docs,
                                       Task subtask, const curation::SplitManifest& manifest,
                                       gateway::ChatGateway& gw,
                                       const gateway::TemplateStore& templates,
                                       const gateway::ChatParams& params, uint64_t seed,
                                       size_t workers = 1);

/// Reasoning-filtered matching corpus: the backend answers each case, and
/// only cases where the parsed label equals gold are retained, with the full
/// reasoning text as the training output.
BuildResult build_matching_set(const std::vector<bench::PatientCase>& cases,
                               gateway::ChatGateway& gw,
                               const gateway::TemplateStore& templates,
                               const gateway::ChatParams& params, size_t workers = 1);

/// Shared prompt-building helpers (the design evaluation reuses them).
std::string fenced_block(const std::string& body);
std::string bullet_block(const std::vector<std::string>& items);
std::string scheme_labels_line(bench::Scheme scheme);
std::string matching_prompt(const gateway::TemplateStore& templates,
                            const bench::PatientCase& c);
std::string matching_instruction(const gateway::TemplateStore& templates);

} // namespace trialkit::instruct
