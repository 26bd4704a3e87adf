#include "pipeline/pipeline.hpp"

#include "corpus/registry_parse.hpp"
#include "curation/dedup.hpp"
#include "curation/pii.hpp"
#include "gateway/http_backend.hpp"
#include "gateway/mock_backend.hpp"
#include "instruct/builders.hpp"
#include "pipeline/fetch.hpp"
#include "search/index.hpp"
#include "util/errors.hpp"

#include <algorithm>
#include <set>

namespace trialkit::pipeline {

using config::BackendSpec;
using corpus::TrialDocument;
using instruct::Task;

Pipeline::Pipeline(config::Config config) : config_(std::move(config)) {}

void Pipeline::validate(bool check_paths) const { config_.validate(check_paths); }

gateway::ChatParams params_for(const BackendSpec& spec) {
  gateway::ChatParams p;
  p.temperature = spec.temperature;
  p.max_tokens = spec.max_tokens;
  p.model_id = spec.model_id.empty() ? spec.name : spec.model_id;
  return p;
}

gateway::GatewayPtr Pipeline::make_gateway(const BackendSpec& spec,
                                           const std::string& cache_scope) const {
  if (spec.type == "none") return nullptr;
  gateway::BackendPtr backend;
  if (spec.type == "openai") {
    gateway::HttpBackendConfig hc;
    hc.endpoint = spec.endpoint;
    hc.path = spec.path;
    hc.model_id = spec.model_id;
    hc.credential_env = spec.credential_env;
    hc.timeout_seconds = spec.timeout_seconds;
    backend = std::make_shared<gateway::HttpBackend>(hc);
  } else {
    json stub_json = spec.stub;
    if (!spec.script_path.empty()) {
      stub_json = json::parse(read_file(spec.script_path), nullptr, false);
      if (stub_json.is_discarded()) {
        throw ConfigError("malformed stub script: " + spec.script_path);
      }
    }
    gateway::StubConfig sc = gateway::StubConfig::from_json(stub_json);
    if (sc.name == "stub") sc.name = spec.name;
    backend = std::make_shared<gateway::StubBackend>(sc);
  }
  gateway::GatewayOptions opts;
  opts.max_attempts = config_.max_attempts;
  opts.backoff_base_seconds = config_.backoff_base_seconds;
  opts.requests_per_second = config_.requests_per_second;
  opts.max_in_flight = config_.max_in_flight;
  std::optional<std::filesystem::path> cache;
  if (!config_.cache_dir.empty()) {
    cache = std::filesystem::path(config_.cache_dir) / cache_scope;
  }
  return std::make_shared<gateway::ChatGateway>(backend, opts, cache);
}

const gateway::TemplateStore& Pipeline::templates() const {
  if (!templates_) {
    if (config_.templates_dir.empty()) throw ConfigError("templates_dir is not configured");
    templates_ = std::make_unique<gateway::TemplateStore>(config_.templates_dir);
  }
  return *templates_;
}

size_t Pipeline::ingest(const std::string& source, const std::string& input_path,
                        const std::string& fetch_query, const std::string& out_path) {
  if (!corpus::is_known_source(source)) throw ConfigError("unknown registry source: " + source);
  if (out_path.empty()) throw ConfigError("ingest needs an output path");

  std::filesystem::path raw_path = input_path;
  if (!fetch_query.empty()) {
    if (source != "ClinicalTrials.gov") {
      throw ConfigError("--fetch is only wired to the ClinicalTrials.gov API");
    }
    raw_path = std::filesystem::path(out_path);
    raw_path += ".raw";
    FetchOptions fo;
    fo.endpoint = config_.fetch_endpoint;
    fo.query = fetch_query;
    fo.requests_per_second = std::max<size_t>(1, config_.requests_per_second);
    fetch_ctgov_records(fo, raw_path);
  } else if (input_path.empty()) {
    throw ConfigError("ingest needs an input file or a --fetch query");
  }

  std::vector<json> out_lines;
  std::set<std::string> seen_ids;
  for_each_jsonl(raw_path, [&](json&& raw, size_t line_no) {
    TrialDocument doc;
    try {
      doc = corpus::parse_registry_record(raw, source);
    } catch (const ParseError& e) {
      throw ParseError(std::string(e.what()) + " (line " + std::to_string(line_no) + ")",
                       source, e.byte_offset);
    }
    if (!seen_ids.insert(doc.id).second) {
      throw ParseError("duplicate id within source: " + doc.id, source);
    }
    out_lines.push_back(doc.to_json());
  });
  write_jsonl(out_path, out_lines);
  return out_lines.size();
}

json Pipeline::curate(const std::string& corpus_path, const std::string& out_dir) {
  std::string in = corpus_path.empty() ? config_.corpus_file : corpus_path;
  std::string out = out_dir.empty() ? config_.curated_dir : out_dir;
  if (in.empty()) throw ConfigError("corpus_file is not configured");
  if (out.empty()) throw ConfigError("curated_dir is not configured");

  std::vector<TrialDocument> docs;
  for (const auto& j : read_jsonl(in)) docs.push_back(TrialDocument::from_json(j));

  curation::PiiScrubber scrubber(config_.pii_patterns.empty() ? curation::default_pii_patterns()
                                                              : config_.pii_patterns);
  for (auto& doc : docs) doc = scrubber.scrub(doc);

  curation::DedupOptions dopts;
  dopts.threshold = config_.dedup_threshold;
  dopts.shingle_tokens = config_.shingle_tokens;
  dopts.sketch_slots = config_.sketch_slots;
  dopts.bands = config_.bands;
  dopts.source_priority = config_.source_priority;
  curation::DedupResult dedup = curation::dedup_corpus(docs, dopts);

  auto assignments = curation::split_by_date(dedup.kept, config_.cutoff);
  curation::SplitManifest manifest = curation::make_manifest(assignments, config_.cutoff);

  std::filesystem::path dir(out);
  std::vector<json> curated_lines;
  for (const auto& d : dedup.kept) curated_lines.push_back(d.to_json());
  write_jsonl(dir / "curated.jsonl", curated_lines);
  std::vector<json> decision_lines;
  size_t exact = 0, near = 0;
  for (const auto& d : dedup.decisions) {
    decision_lines.push_back(d.to_json());
    (d.reason == "exact-hash" ? exact : near) += 1;
  }
  write_jsonl(dir / "dedup_report.jsonl", decision_lines);
  write_file(dir / "split_manifest.json", manifest.to_json().dump(2) + "\n");

  json summary{{"input", docs.size()},
               {"kept", dedup.kept.size()},
               {"dropped_exact", exact},
               {"dropped_near_dup", near},
               {"train", manifest.train.size()},
               {"test", manifest.test.size()},
               {"excluded", manifest.excluded.size()},
               {"cutoff", config_.cutoff.iso()},
               {"config_digest", config_.digest()}};
  write_file(dir / "curation_summary.json", summary.dump(2) + "\n");
  return summary;
}

std::vector<TrialDocument> Pipeline::load_curated(const std::string& dir) const {
  std::string d = dir.empty() ? config_.curated_dir : dir;
  std::vector<TrialDocument> docs;
  for (const auto& j : read_jsonl(std::filesystem::path(d) / "curated.jsonl")) {
    docs.push_back(TrialDocument::from_json(j));
  }
  return docs;
}

curation::SplitManifest Pipeline::load_manifest(const std::string& dir) const {
  std::string d = dir.empty() ? config_.curated_dir : dir;
  json j = json::parse(read_file(std::filesystem::path(d) / "split_manifest.json"), nullptr,
                       false);
  if (j.is_discarded()) throw ParseError("malformed split manifest");
  return curation::SplitManifest::from_json(j);
}

namespace {

std::vector<std::string> task_list(const std::string& task_or_all) {
  if (task_or_all == "all" || task_or_all.empty()) {
    std::vector<std::string> all;
    for (Task t : instruct::kAllTasks) all.push_back(instruct::task_name(t));
    return all;
  }
  return {task_or_all};
}

void write_task_splits(const std::filesystem::path& dir, const std::string& task,
                       const std::vector<instruct::InstructionRecord>& records,
                       json& manifest_tasks, const json& counters) {
  std::map<std::string, std::vector<instruct::InstructionRecord>> by_split{
      {"train", {}}, {"dev", {}}, {"test", {}}};
  for (const auto& r : records) by_split[r.split].push_back(r);
  json counts = json::object();
  for (const auto& [split, recs] : by_split) {
    instruct::write_records(dir / (task + "." + split + ".jsonl"), recs);
    counts[split] = recs.size();
  }
  manifest_tasks[task] = json{{"counts", counts}, {"counters", counters}};
}

} // namespace

json Pipeline::build(const std::string& task_or_all, const std::string& out_dir) {
  std::string out = out_dir.empty() ? config_.datasets_dir : out_dir;
  if (out.empty()) throw ConfigError("datasets_dir is not configured");
  std::filesystem::path dir(out);

  std::vector<TrialDocument> docs = load_curated({});
  curation::SplitManifest manifest = load_manifest({});
  gateway::GatewayPtr backend = make_gateway(config_.backend, "backend");
  gateway::ChatParams params = params_for(config_.backend);

  auto need_backend = [&](const std::string& builder) -> gateway::ChatGateway& {
    if (!backend) {
      throw ConfigError("builder '" + builder + "' needs a chat backend; none is configured");
    }
    return *backend;
  };

  json manifest_tasks = json::object();
  for (const std::string& task : task_list(task_or_all)) {
    Task t = instruct::task_from(task);
    instruct::BuildResult result;
    switch (t) {
    case Task::query_expansion:
      result = instruct::build_query_expansion_set(docs, manifest, config_.seed);
      break;
    case Task::single_summarization:
      result = instruct::build_single_summarization_set(docs, manifest, config_.seed,
                                                        config_.min_summary_words);
      break;
    case Task::multi_summarization: {
      if (config_.review_pairs_file.empty() || config_.papers_file.empty()) {
        throw ConfigError("multi_summarization needs review_pairs_file and papers_file");
      }
      std::vector<instruct::ReviewPair> pairs;
      for (const auto& j : read_jsonl(config_.review_pairs_file)) {
        pairs.push_back(instruct::ReviewPair::from_json(j));
      }
      auto papers = corpus::parse_paper_batch(read_jsonl(config_.papers_file));
      result = instruct::build_multi_summarization_set(pairs, papers, config_.cutoff,
                                                       config_.seed);
      break;
    }
    case Task::query_generation: {
      if (config_.query_gen_seeds_file.empty()) {
        throw ConfigError("query_generation needs query_gen_seeds_file");
      }
      auto seeds = instruct::read_records(config_.query_gen_seeds_file);
      search::LocalRegistryClient registry(search::TermIndex::build(docs));
      instruct::QueryGenOptions qopts;
      qopts.rounds = config_.query_gen_rounds;
      qopts.similarity_threshold = config_.query_gen_similarity;
      qopts.seed = config_.seed;
      result = instruct::build_query_generation_set(seeds, need_backend(task), templates(),
                                                    registry, config_.vocab, params, qopts);
      break;
    }
    case Task::criteria_design:
    case Task::study_arm_design:
    case Task::outcome_measure_design:
      result = instruct::build_design_conversations(docs, t, manifest, need_backend(task),
                                                    templates(), params, config_.seed,
                                                    config_.workers);
      break;
    case Task::patient_trial_matching: {
      if (config_.matching_cases_file.empty()) {
        throw ConfigError("patient_trial_matching needs matching_cases_file");
      }
      auto cases = bench::read_cases(config_.matching_cases_file);
      std::erase_if(cases, [](const bench::PatientCase& c) { return c.split == "test"; });
      result = instruct::build_matching_set(cases, need_backend(task), templates(), params,
                                            config_.workers);
      break;
    }
    }
    write_task_splits(dir, task, result.records, manifest_tasks, result.counters_json());
  }

  json build_manifest{{"config_digest", config_.digest()}, {"tasks", manifest_tasks}};
  // merge with an existing manifest so single-task builds do not erase others
  std::filesystem::path manifest_path = dir / "manifest.json";
  if (std::filesystem::exists(manifest_path)) {
    json existing = json::parse(read_file(manifest_path), nullptr, false);
    if (!existing.is_discarded() && existing.contains("tasks")) {
      for (auto& [k, v] : build_manifest.at("tasks").items()) {
        existing["tasks"][k] = v;
      }
      existing["config_digest"] = config_.digest();
      build_manifest = existing;
    }
  }
  write_file(manifest_path, build_manifest.dump(2) + "\n");
  return build_manifest;
}

json Pipeline::eval(const std::string& task_or_all, const std::string& out_dir) {
  std::string out = out_dir.empty() ? config_.reports_dir : out_dir;
  if (out.empty()) throw ConfigError("reports_dir is not configured");
  if (config_.datasets_dir.empty()) throw ConfigError("datasets_dir is not configured");
  std::filesystem::path data_dir(config_.datasets_dir);

  bench::RunContext ctx;
  ctx.backend = make_gateway(config_.backend, "backend");
  if (!ctx.backend) throw ConfigError("eval needs a chat backend");
  ctx.judge = make_gateway(config_.judge, "judge");
  ctx.templates = &templates();
  ctx.vocab = config_.vocab;
  ctx.backend_params = params_for(config_.backend);
  ctx.judge_params = params_for(config_.judge);
  ctx.conclusion_taxonomy = config_.conclusion_taxonomy;
  ctx.config_digest = config_.digest();
  ctx.seed = config_.seed;
  ctx.workers = config_.workers;

  auto test_records = [&](const std::string& task) {
    return instruct::read_records(data_dir / (task + ".test.jsonl"));
  };

  std::vector<bench::EvalReport> reports;
  json failures = json::object();
  std::vector<std::string> tasks = task_list(task_or_all);
  std::set<std::string> design_tasks;
  for (const auto& task : tasks) {
    if (bench::task_type(task) == "Trial design") design_tasks.insert(task);
  }

  for (const std::string& task : tasks) {
    if (design_tasks.count(task)) continue; // handled as a group below
    try {
      if (task == "query_generation" || task == "query_expansion") {
        reports.push_back(bench::run_search_eval(test_records(task), ctx));
      } else if (task == "single_summarization" || task == "multi_summarization") {
        reports.push_back(bench::run_summarization_eval(test_records(task), ctx));
      } else if (task == "patient_trial_matching") {
        if (config_.matching_cases_file.empty()) {
          throw ConfigError("patient_trial_matching needs matching_cases_file");
        }
        auto cases = bench::read_cases(config_.matching_cases_file);
        std::erase_if(cases, [](const bench::PatientCase& c) { return c.split != "test"; });
        reports.push_back(bench::run_matching_eval(cases, ctx));
      } else {
        throw ConfigError("unknown task: " + task);
      }
    } catch (const std::exception& e) {
      failures[task] = e.what();
    }
  }

  if (!design_tasks.empty()) {
    try {
      bench::DesignMode mode = config_.design_mode == "de_novo" ? bench::DesignMode::de_novo
                                                                : bench::DesignMode::reference;
      bench::DesignDatasets datasets;
      if (mode == bench::DesignMode::de_novo || design_tasks.count("criteria_design")) {
        datasets.criteria = test_records("criteria_design");
      }
      if (mode == bench::DesignMode::reference && design_tasks.count("study_arm_design")) {
        datasets.study_arms = test_records("study_arm_design");
      }
      if (mode == bench::DesignMode::reference && design_tasks.count("outcome_measure_design")) {
        datasets.outcome_measures = test_records("outcome_measure_design");
      }
      auto docs = load_curated({});
      for (auto& r : bench::run_design_eval(datasets, docs, ctx, mode)) {
        reports.push_back(std::move(r));
      }
    } catch (const std::exception& e) {
      for (const auto& task : design_tasks) failures[task] = e.what();
    }
  }

  if (!reports.empty()) bench::emit_report(reports, "json", out);

  json tasks_json = json::array();
  for (const auto& r : reports) tasks_json.push_back(r.task);
  return json{{"reports", tasks_json},
              {"failed", failures},
              {"config_digest", config_.digest()},
              {"output_dir", out}};
}

} // namespace trialkit::pipeline
