#pragma once

#include "metrics/metrics.hpp"

#include <filesystem>
#include <map>

namespace trialkit::bench {

struct SampleRecord {
  std::string id;
  std::string input_digest;
  std::string prediction;
  std::string gold;
  json scores = json::object();
  std::vector<std::string> flags;

  json to_json() const;
};

struct EvalReport {
  std::string task;
  std::string model_id;
  std::string judge_model_id; // empty when no judge took part
  std::string config_digest;
  uint64_t seed = 0;
  json options = json::object();
  std::vector<metrics::MetricValue> metric_values;
  std::vector<SampleRecord> per_sample;
  std::map<std::string, size_t> counters;

  json to_json() const;

  const metrics::MetricValue* find_metric(const std::string& name) const;
};

/// JSON is the canonical artifact; the markdown table mirrors the benchmark's
/// task x metric layout. Layout under out_dir: <task>/<model_id>/report.json
/// and report.md, plus a merged summary.md. Reruns with equal inputs produce
/// byte-identical files (reports carry no timestamps).
void emit_report(const std::vector<EvalReport>& reports, const std::string& format,
                 const std::filesystem::path& out_dir);

std::string report_markdown(const std::vector<EvalReport>& reports);

/// "Trial search", "Trial summarization", "Trial design", or
/// "Patient-trial matching".
std::string task_type(const std::string& task);

} // namespace trialkit::bench
