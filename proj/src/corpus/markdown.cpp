#include "corpus/markdown.hpp"

#include "util/text.hpp"

#include <sstream>

namespace trialkit::corpus {

namespace {

void heading(std::ostringstream& out, int level, std::string_view title) {
  for (int i = 0; i < level; ++i) out << '#';
  out << ' ' << title << '\n';
}

void para(std::ostringstream& out, std::string_view body) {
  if (!body.empty()) out << body << '\n';
  out << '\n';
}

void bullets(std::ostringstream& out, const std::vector<std::string>& items) {
  for (const auto& item : items) out << "- " << item << '\n';
  out << '\n';
}

void criteria_block(std::ostringstream& out, const EligibilityBlock& e) {
  out << "Inclusion Criteria:\n";
  for (const auto& c : e.inclusion) out << "- " << c << '\n';
  out << "Exclusion Criteria:\n";
  for (const auto& c : e.exclusion) out << "- " << c << '\n';
  out << '\n';
}

std::string yes_no(const std::optional<bool>& v) {
  if (!v.has_value()) return {};
  return *v ? "Yes" : "No";
}

std::string render_ctgov(const TrialDocument& d, const MarkdownOptions& opts) {
  std::ostringstream out;
  heading(out, 1, "Public Title");
  para(out, d.public_title);

  heading(out, 1, "Study Overview");
  if (!opts.omit_brief_summary) {
    heading(out, 2, "Brief Summary");
    para(out, d.brief_summary);
  }
  heading(out, 2, "Detailed Description");
  para(out, d.detailed_description);
  heading(out, 2, "Official Title");
  para(out, d.scientific_title);
  heading(out, 2, "Conditions");
  bullets(out, d.conditions);
  heading(out, 2, "Intervention/Treatment");
  bullets(out, d.interventions);

  heading(out, 1, "Participation Criteria");
  heading(out, 2, "Eligibility Criteria");
  criteria_block(out, d.eligibility);
  heading(out, 2, "Ages Eligibility for Study");
  std::ostringstream ages;
  if (!d.eligibility.min_age.empty()) ages << "Minimum Age: " << d.eligibility.min_age << '\n';
  if (!d.eligibility.max_age.empty()) ages << "Maximum Age: " << d.eligibility.max_age;
  para(out, text::trim(ages.str()));
  heading(out, 2, "Sexes Eligibility for Study");
  para(out, d.eligibility.sexes);
  heading(out, 2, "Accepts Healthy Volunteers");
  para(out, yes_no(d.eligibility.accepts_healthy_volunteers));

  heading(out, 1, "Study Plan");
  heading(out, 2, "How is the study designed?");
  heading(out, 3, "Design Details");
  std::ostringstream design;
  if (!d.study_type.empty()) design << "Study Type: " << d.study_type << '\n';
  if (!d.phase.empty()) design << "Phase: " << d.phase << '\n';
  if (!d.status.empty()) design << "Status: " << d.status;
  para(out, text::trim(design.str()));
  heading(out, 3, "Arms and Interventions");
  std::vector<std::string> arm_lines;
  for (const auto& a : d.arms) {
    arm_lines.push_back(a.description.empty() ? a.label : a.label + ": " + a.description);
  }
  bullets(out, arm_lines);
  heading(out, 2, "What is the study measuring?");
  heading(out, 3, "Primary Outcome Measures");
  bullets(out, d.outcome_measures.primary);
  heading(out, 3, "Secondary Outcome Measures");
  bullets(out, d.outcome_measures.secondary);

  heading(out, 1, "Terms related to the study");
  bullets(out, d.mesh_terms);
  return out.str();
}

std::string render_flat(const TrialDocument& d) {
  std::ostringstream out;
  heading(out, 1, "Public Title");
  para(out, d.public_title);
  heading(out, 1, "Scientific Title");
  para(out, d.scientific_title);
  heading(out, 1, "Study Type");
  para(out, d.study_type);
  heading(out, 1, "Study Design");
  std::ostringstream design;
  if (!d.phase.empty()) design << "Phase: " << d.phase << '\n';
  if (!d.status.empty()) design << "Status: " << d.status;
  para(out, text::trim(design.str()));
  heading(out, 1, "Intervention");
  bullets(out, d.interventions);
  heading(out, 1, "Inclusion Criteria");
  bullets(out, d.eligibility.inclusion);
  heading(out, 1, "Exclusion Criteria");
  bullets(out, d.eligibility.exclusion);
  heading(out, 1, "Primary Outcome Measures");
  bullets(out, d.outcome_measures.primary);
  heading(out, 1, "Secondary Outcome Measures");
  bullets(out, d.outcome_measures.secondary);
  return out.str();
}

} // namespace

std::string render_trial_markdown(const TrialDocument& doc, const MarkdownOptions& opts) {
  if (doc.source == "ClinicalTrials.gov") return render_ctgov(doc, opts);
  return render_flat(doc);
}

std::string render_criteria_text(const TrialDocument& doc) {
  std::ostringstream out;
  out << "Inclusion Criteria:\n";
  for (const auto& c : doc.eligibility.inclusion) out << "- " << c << '\n';
  out << "Exclusion Criteria:\n";
  for (const auto& c : doc.eligibility.exclusion) out << "- " << c << '\n';
  return out.str();
}

std::string render_arms_text(const TrialDocument& doc) {
  std::ostringstream out;
  for (const auto& a : doc.arms) {
    out << "- " << (a.description.empty() ? a.label : a.label + ": " + a.description) << '\n';
  }
  return out.str();
}

std::string render_outcomes_text(const TrialDocument& doc) {
  std::ostringstream out;
  out << "Primary Outcome Measures:\n";
  for (const auto& m : doc.outcome_measures.primary) out << "- " << m << '\n';
  out << "Secondary Outcome Measures:\n";
  for (const auto& m : doc.outcome_measures.secondary) out << "- " << m << '\n';
  return out.str();
}

std::vector<std::string> criteria_items(const TrialDocument& doc) {
  std::vector<std::string> items = doc.eligibility.inclusion;
  items.insert(items.end(), doc.eligibility.exclusion.begin(), doc.eligibility.exclusion.end());
  return items;
}

std::vector<std::string> arm_items(const TrialDocument& doc) {
  std::vector<std::string> items;
  for (const auto& a : doc.arms) {
    items.push_back(a.description.empty() ? a.label : a.label + ": " + a.description);
  }
  return items;
}

std::vector<std::string> outcome_items(const TrialDocument& doc) {
  std::vector<std::string> items = doc.outcome_measures.primary;
  items.insert(items.end(), doc.outcome_measures.secondary.begin(),
               doc.outcome_measures.secondary.end());
  return items;
}

std::string render_trial_setup(const TrialDocument& doc) {
  std::ostringstream out;
  out << "Title: " << doc.public_title << '\n';
  out << "Conditions: " << text::join(doc.conditions, "; ") << '\n';
  out << "Drugs: " << text::join(doc.interventions, "; ") << '\n';
  out << "Phase: " << doc.phase << '\n';
  return out.str();
}

} // namespace trialkit::corpus
