// trialctl — operator CLI for the trialkit pipeline.
//
// Talks to the core exclusively through the C API in trialkit/trialkit.h.
// Exit codes: 0 success, 1 task failure, 2 configuration error.

#include <trialkit/trialkit.h>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitTaskFailure = 1;
constexpr int kExitConfigError = 2;

struct GlobalOptions {
  std::string config_path;
  std::string cutoff;
  std::string backend;
  std::string judge;
  std::string out;
  long long seed = -1;
  bool dry_run = false;
};

int exit_code_for(trialkit_status status) {
  switch (status) {
  case TRIALKIT_OK: return kExitOk;
  case TRIALKIT_ERR_CONFIG: return kExitConfigError;
  default: return kExitTaskFailure;
  }
}

int fail(trialkit_status status, const std::string& what) {
  std::cerr << "trialctl: " << what << ": " << trialkit_last_error() << "\n";
  return exit_code_for(status);
}

std::string read_config_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "trialctl: cannot open config " << path << "\n";
    std::exit(kExitConfigError);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Merge flag overrides into the config document; flags win.
std::string merged_config(const GlobalOptions& opts) {
  json cfg = json::object();
  if (!opts.config_path.empty()) {
    cfg = json::parse(read_config_text(opts.config_path), nullptr, false);
    if (cfg.is_discarded()) {
      std::cerr << "trialctl: malformed config JSON: " << opts.config_path << "\n";
      std::exit(kExitConfigError);
    }
    // resolve paths the same way the library's file loader does: relative to
    // the config file
    auto base = std::filesystem::path(opts.config_path).parent_path();
    for (const char* key :
         {"sources_dir", "corpus_file", "papers_file", "review_pairs_file",
          "matching_cases_file", "query_gen_seeds_file", "templates_dir", "cache_dir",
          "curated_dir", "datasets_dir", "reports_dir"}) {
      if (cfg.contains(key) && cfg.at(key).is_string()) {
        std::filesystem::path p = cfg.at(key).get<std::string>();
        if (p.is_relative()) cfg[key] = (base / p).lexically_normal().string();
      }
    }
    for (const char* role : {"backend", "judge"}) {
      if (cfg.contains(role) && cfg.at(role).is_object() &&
          cfg.at(role).contains("script_path")) {
        std::filesystem::path p = cfg.at(role).at("script_path").get<std::string>();
        if (p.is_relative()) cfg[role]["script_path"] = (base / p).lexically_normal().string();
      }
    }
  }
  if (!opts.cutoff.empty()) cfg["cutoff"] = opts.cutoff;
  if (opts.seed >= 0) cfg["seed"] = opts.seed;
  if (!opts.backend.empty()) cfg["backend"] = json{{"type", "openai"}, {"model_id", opts.backend}};
  if (!opts.judge.empty()) cfg["judge"] = json{{"type", "openai"}, {"model_id", opts.judge}};
  return cfg.dump();
}

struct ContextHandle {
  trialkit_context* ctx = nullptr;
  ~ContextHandle() { trialkit_context_destroy(ctx); }
};

int with_context(const GlobalOptions& opts, const std::function<int(trialkit_context*)>& body) {
  ContextHandle handle;
  trialkit_status st = trialkit_context_create(merged_config(opts).c_str(), &handle.ctx);
  if (st != TRIALKIT_OK) return fail(st, "configuration rejected");
  if (opts.dry_run) {
    st = trialkit_validate(handle.ctx);
    if (st != TRIALKIT_OK) return fail(st, "dry-run validation failed");
    std::cout << "configuration OK (dry run, nothing touched)\n";
    return kExitOk;
  }
  return body(handle.ctx);
}

void print_owned(char* s) {
  if (s != nullptr) {
    std::cout << s << "\n";
    trialkit_string_free(s);
  }
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"trialkit pipeline: registry ingest, corpus curation, instruction dataset "
               "construction, and benchmark evaluation"};
  app.require_subcommand(1);

  GlobalOptions opts;
  app.add_option("--config", opts.config_path, "config JSON file");
  app.add_option("--cutoff", opts.cutoff, "train/test cutoff date (YYYY-MM-DD)");
  app.add_option("--backend", opts.backend, "override backend model id (openai-style endpoint)");
  app.add_option("--judge", opts.judge, "override judge model id");
  app.add_option("--out", opts.out, "output path or directory");
  app.add_option("--seed", opts.seed, "run seed");
  app.add_flag("--dry-run", opts.dry_run, "validate configuration and touch nothing");

  std::string source, input, fetch_query, task = "all";

  auto* ingest = app.add_subcommand("ingest", "parse registry records into canonical corpus");
  ingest->add_option("--source", source, "registry name (e.g. ClinicalTrials.gov)")->required();
  ingest->add_option("--input", input, "raw records JSONL");
  ingest->add_option("--fetch", fetch_query,
                     "pull from the live registry API with this condition query");

  auto* curate = app.add_subcommand("curate", "PII scrub, dedup, and date split");
  curate->add_option("--input", input, "canonical corpus JSONL (default: config corpus_file)");

  auto* build = app.add_subcommand("build", "construct instruction datasets");
  build->add_option("--task", task, "task name or 'all'");

  auto* eval = app.add_subcommand("eval", "run benchmark tasks and emit reports");
  eval->add_option("--task", task, "task name or 'all'");

  CLI11_PARSE(app, argc, argv);

  if (ingest->parsed()) {
    return with_context(opts, [&](trialkit_context* ctx) {
      if (opts.out.empty()) {
        std::cerr << "trialctl: ingest needs --out\n";
        return kExitConfigError;
      }
      size_t n = 0;
      trialkit_status st =
          trialkit_ingest(ctx, source.c_str(), input.empty() ? nullptr : input.c_str(),
                          fetch_query.empty() ? nullptr : fetch_query.c_str(),
                          opts.out.c_str(), &n);
      if (st != TRIALKIT_OK) return fail(st, "ingest failed");
      std::cout << "ingested " << n << " records from " << source << " into " << opts.out
                << "\n";
      return kExitOk;
    });
  }
  if (curate->parsed()) {
    return with_context(opts, [&](trialkit_context* ctx) {
      char* summary = nullptr;
      trialkit_status st = trialkit_curate(ctx, input.empty() ? nullptr : input.c_str(),
                                           opts.out.empty() ? nullptr : opts.out.c_str(),
                                           &summary);
      if (st != TRIALKIT_OK) return fail(st, "curate failed");
      print_owned(summary);
      return kExitOk;
    });
  }
  if (build->parsed()) {
    return with_context(opts, [&](trialkit_context* ctx) {
      char* manifest = nullptr;
      trialkit_status st = trialkit_build(ctx, task.c_str(),
                                          opts.out.empty() ? nullptr : opts.out.c_str(),
                                          &manifest);
      if (st != TRIALKIT_OK) return fail(st, "build failed");
      print_owned(manifest);
      return kExitOk;
    });
  }
  if (eval->parsed()) {
    return with_context(opts, [&](trialkit_context* ctx) {
      char* summary = nullptr;
      trialkit_status st = trialkit_eval(ctx, task.c_str(),
                                         opts.out.empty() ? nullptr : opts.out.c_str(),
                                         &summary);
      print_owned(summary);
      if (st != TRIALKIT_OK) return fail(st, "eval finished with failures");
      return kExitOk;
    });
  }
  return kExitConfigError;
}
