#pragma once

#include "corpus/document.hpp"

namespace trialkit::corpus {

struct MarkdownOptions {
  // drop the "Brief Summary" subsection (the single-trial summarization
  // builder feeds the renderer with this set)
  bool omit_brief_summary = false;
};

/// Deterministic markdown passage for one trial document. ClinicalTrials.gov
/// documents use the five-section layout (Public Title / Study Overview /
/// Participation Criteria / Study Plan / study terms); every other source uses
/// the flat nine-field layout. Missing fields render as empty sections.
std::string render_trial_markdown(const TrialDocument& doc, const MarkdownOptions& opts = {});

/// Plain-text renders of individual design components, shared by dataset
/// builders and the design evaluation.
std::string render_criteria_text(const TrialDocument& doc);
std::string render_arms_text(const TrialDocument& doc);
std::string render_outcomes_text(const TrialDocument& doc);

/// The items a design conversation must restate verbatim, per subtask.
std::vector<std::string> criteria_items(const TrialDocument& doc);
std::vector<std::string> arm_items(const TrialDocument& doc);
std::vector<std::string> outcome_items(const TrialDocument& doc);

/// "title | conditions | drugs | phase" trial setup block used in design
/// prompts.
std::string render_trial_setup(const TrialDocument& doc);

} // namespace trialkit::corpus
