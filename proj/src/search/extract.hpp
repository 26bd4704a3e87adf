#pragma once

#include "gateway/constrained.hpp"
#include "gateway/template.hpp"
#include "search/query.hpp"

namespace trialkit::search {

struct ExtractionResult {
  StructuredQuery query;
  std::vector<std::string> flagged_keys; // categories that fell back to empty
};

/// Schema-constrained extraction: one prompt per category in the fixed order,
/// each answer constrained to a JSON array of strings (closed categories also
/// checked against the vocabulary), bounded re-asks, empty-with-flag
/// fallback. Always yields a schema-valid StructuredQuery or throws a typed
/// error; raw model prose never escapes.
ExtractionResult extract_structured_query(const std::string& user_text,
                                          gateway::ChatGateway& gw,
                                          const gateway::TemplateStore& templates,
                                          const Vocabulary& vocab,
                                          const gateway::ChatParams& params,
                                          int max_attempts = 3);

struct ExpansionResult {
  std::vector<std::string> terms;
  bool flagged = false;
};

/// Expansion terms for a seed set: normalized, deduplicated, disjoint from
/// the seeds.
ExpansionResult expand_terms(const std::vector<std::string>& seed_terms,
                             gateway::ChatGateway& gw,
                             const gateway::TemplateStore& templates,
                             const gateway::ChatParams& params, int max_attempts = 3);

} // namespace trialkit::search
