#pragma once

#include "curation/pii.hpp"
#include "search/query.hpp"
#include "util/dates.hpp"
#include "util/jsonl.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace trialkit::config {

struct BackendSpec {
  std::string type = "stub"; // "stub" | "openai"
  std::string name = "stub";
  // openai
  std::string endpoint;
  std::string path = "/v1/chat/completions";
  std::string model_id;
  std::string credential_env = "TRIALKIT_API_KEY";
  int timeout_seconds = 60;
  double temperature = 0.0;
  int max_tokens = 2048;
  // stub
  json stub = json::object(); // inline StubConfig fields
  std::string script_path;    // optional rules file merged into the stub config

  static BackendSpec from_json(const json& j);
  json to_json() const;
};

struct Config {
  // inputs
  std::string sources_dir;    // raw registry record files live here
  std::string corpus_file;    // canonical corpus (ingest output)
  std::string papers_file;
  std::string review_pairs_file;
  std::string matching_cases_file;
  std::string query_gen_seeds_file;
  std::string templates_dir;
  // work areas
  std::string cache_dir;
  std::string curated_dir;
  std::string datasets_dir;
  std::string reports_dir;
  // curation parameters
  Date cutoff{2023, 1, 1};
  double dedup_threshold = 0.9;
  size_t shingle_tokens = 5;
  size_t sketch_slots = 128;
  size_t bands = 32;
  std::vector<std::string> source_priority;
  std::vector<curation::PiiPattern> pii_patterns; // empty: defaults
  // search / eval parameters
  search::Vocabulary vocab = search::Vocabulary::defaults();
  std::vector<std::string> conclusion_taxonomy;
  std::string design_mode = "reference"; // or "de_novo"
  size_t min_summary_words = 20;
  int query_gen_rounds = 2;
  double query_gen_similarity = 0.8;
  // backends
  BackendSpec backend;
  BackendSpec judge;
  std::string fetch_endpoint = "https://clinicaltrials.gov/api/v2";
  // run controls
  uint64_t seed = 20240101;
  size_t workers = 1;
  size_t requests_per_second = 0;
  size_t max_in_flight = 8;
  int max_attempts = 4;
  double backoff_base_seconds = 0.25;

  static Config from_json(const json& j);
  /// Loads and resolves relative paths against the config file's directory.
  static Config load(const std::filesystem::path& file);

  /// Canonical JSON with every default materialized; the digest of this is
  /// embedded in every artifact.
  json to_json() const;
  std::string digest() const;

  /// Structural checks; with `check_paths`, referenced input paths must
  /// exist. This is the whole of --dry-run.
  void validate(bool check_paths) const;
};

} // namespace trialkit::config
