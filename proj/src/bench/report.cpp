#include "bench/report.hpp"

#include "util/errors.hpp"
#include "util/jsonl.hpp"

#include <algorithm>
#include <cstdio>

namespace trialkit::bench {

json SampleRecord::to_json() const {
  json j{{"id", id},
         {"input_digest", input_digest},
         {"prediction", prediction},
         {"gold", gold},
         {"scores", scores}};
  if (!flags.empty()) j["flags"] = flags;
  return j;
}

json EvalReport::to_json() const {
  json metrics_j = json::array();
  for (const auto& m : metric_values) metrics_j.push_back(m.to_json());
  json samples_j = json::array();
  for (const auto& s : per_sample) samples_j.push_back(s.to_json());
  json counters_j = json::object();
  for (const auto& [k, v] : counters) counters_j[k] = v;
  json j{{"task", task},
         {"model_id", model_id},
         {"config_digest", config_digest},
         {"seed", seed},
         {"options", options},
         {"metrics", metrics_j},
         {"per_sample", samples_j},
         {"counters", counters_j}};
  if (!judge_model_id.empty()) j["judge_model_id"] = judge_model_id;
  return j;
}

const metrics::MetricValue* EvalReport::find_metric(const std::string& name) const {
  for (const auto& m : metric_values) {
    if (m.name == name) return &m;
  }
  return nullptr;
}

std::string task_type(const std::string& task) {
  if (task == "query_generation" || task == "query_expansion") return "Trial search";
  if (task == "single_summarization" || task == "multi_summarization") {
    return "Trial summarization";
  }
  if (task == "criteria_design" || task == "study_arm_design" ||
      task == "outcome_measure_design") {
    return "Trial design";
  }
  if (task == "patient_trial_matching") return "Patient-trial matching";
  return "Other";
}

namespace {

std::string format_value(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

std::string sanitize_path_component(const std::string& s) {
  std::string out = s;
  for (char& c : out) {
    if (c == '/' || c == '\\' || c == ':' || c == ' ') c = '_';
  }
  return out.empty() ? "model" : out;
}

} // namespace

std::string report_markdown(const std::vector<EvalReport>& reports) {
  std::string md;
  md += "| Task type | Task | Model | Metric | Value | N |\n";
  md += "|---|---|---|---|---|---|\n";
  for (const auto& report : reports) {
    for (const auto& m : report.metric_values) {
      md += "| " + task_type(report.task) + " | " + report.task + " | " + report.model_id +
            " | " + m.name + " | " + format_value(m.value) + " | " + std::to_string(m.support) +
            " |\n";
    }
  }
  return md;
}

void emit_report(const std::vector<EvalReport>& reports, const std::string& format,
                 const std::filesystem::path& out_dir) {
  if (reports.empty()) throw ValidationError("emit_report requires at least one report");
  if (format != "json" && format != "markdown_table") {
    throw ValidationError("unknown report format: " + format);
  }
  for (const auto& report : reports) {
    std::filesystem::path dir =
        out_dir / report.task / sanitize_path_component(report.model_id);
    write_file(dir / "report.json", report.to_json().dump(2) + "\n");
    write_file(dir / "report.md", report_markdown({report}));
  }
  write_file(out_dir / "summary.md", report_markdown(reports));
}

} // namespace trialkit::bench
