#pragma once

#include "bench/runners.hpp"
#include "config/config.hpp"
#include "curation/split.hpp"
#include "gateway/gateway.hpp"
#include "gateway/template.hpp"

#include <memory>

namespace trialkit::pipeline {

/// End-to-end orchestration behind the C API: ingest -> curate -> build ->
/// eval, all driven by one validated Config.
class Pipeline {
public:
  explicit Pipeline(config::Config config);

  const config::Config& config() const { return config_; }

  /// --dry-run: validates the configuration and touches nothing.
  void validate(bool check_paths = true) const;

  /// Parse one registry's records (local file or live fetch) into canonical
  /// corpus JSONL. Returns the record count.
  size_t ingest(const std::string& source, const std::string& input_path,
                const std::string& fetch_query, const std::string& out_path);

  /// PII scrub + dedup + date split. Writes curated.jsonl,
  /// dedup_report.jsonl, split_manifest.json, and curation_summary.json into
  /// out_dir (default: config.curated_dir). Returns the summary.
  json curate(const std::string& corpus_path = {}, const std::string& out_dir = {});

  /// Build one instruction dataset (or "all") into out_dir (default:
  /// config.datasets_dir): <task>.<split>.jsonl plus manifest.json.
  json build(const std::string& task_or_all, const std::string& out_dir = {});

  /// Evaluate one task (or "all") and emit reports into out_dir (default:
  /// config.reports_dir). Failures are isolated per task; the summary lists
  /// them.
  json eval(const std::string& task_or_all, const std::string& out_dir = {});

  gateway::GatewayPtr make_gateway(const config::BackendSpec& spec,
                                   const std::string& cache_scope) const;

private:
  std::vector<corpus::TrialDocument> load_curated(const std::string& dir) const;
  curation::SplitManifest load_manifest(const std::string& dir) const;
  const gateway::TemplateStore& templates() const;

  config::Config config_;
  mutable std::unique_ptr<gateway::TemplateStore> templates_;
};

gateway::ChatParams params_for(const config::BackendSpec& spec);

} // namespace trialkit::pipeline
