#pragma once

#include "corpus/document.hpp"

namespace trialkit::corpus {

/// Parse one registry record into the canonical form. Two ingest schemas are
/// supported: the ClinicalTrials.gov API v2 JSON layout for source
/// "ClinicalTrials.gov", and a flat-record JSON layout for the other 13
/// registries. All mapped text goes through normalize_text; the untouched
/// payload is preserved in `raw`.
TrialDocument parse_registry_record(const json& raw, const std::string& source);

/// Split eligibility free text on "Inclusion Criteria" / "Exclusion Criteria"
/// headers (case-insensitive), then segment bullets/lines. Text without a
/// recognizable header goes wholesale into inclusion with `unsplit` set.
EligibilityBlock split_criteria_text(const std::string& text);

TrialPaper parse_paper_record(const json& raw);

/// Batch parse with duplicate-pmid rejection (first occurrence wins, later
/// ones raise).
std::vector<TrialPaper> parse_paper_batch(const std::vector<json>& raws);

} // namespace trialkit::corpus
