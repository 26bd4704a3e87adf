#include "trialkit/trialkit.h"

#include "corpus/document.hpp"
#include "corpus/markdown.hpp"
#include "metrics/metrics.hpp"
#include "pipeline/pipeline.hpp"
#include "search/expression.hpp"
#include "util/errors.hpp"

#include <cstdlib>
#include <cstring>
#include <string>

using namespace trialkit;

struct trialkit_context {
  pipeline::Pipeline pipeline;
};

namespace {

thread_local std::string g_last_error;

trialkit_status status_of(const Error& e) {
  switch (e.kind()) {
  case ErrorKind::config: return TRIALKIT_ERR_CONFIG;
  case ErrorKind::parse: return TRIALKIT_ERR_PARSE;
  case ErrorKind::transport: return TRIALKIT_ERR_TRANSPORT;
  case ErrorKind::validation: return TRIALKIT_ERR_VALIDATION;
  case ErrorKind::io: return TRIALKIT_ERR_IO;
  case ErrorKind::internal: return TRIALKIT_ERR_INTERNAL;
  }
  return TRIALKIT_ERR_INTERNAL;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn> trialkit_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    return fn();
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return TRIALKIT_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return TRIALKIT_ERR_INTERNAL;
  }
}

json parse_or_throw(const char* text, const char* what) {
  if (text == nullptr) throw ValidationError(std::string(what) + " is null");
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError(std::string("malformed JSON for ") + what);
  return j;
}

} // namespace

extern "C" {

const char* trialkit_version(void) { return "0.1.0"; }

const char* trialkit_last_error(void) { return g_last_error.c_str(); }

trialkit_status trialkit_context_create(const char* config_json, trialkit_context** out) {
  return guarded([&]() -> trialkit_status {
    if (out == nullptr) throw ValidationError("output handle pointer is null");
    json j = parse_or_throw(config_json, "config");
    config::Config cfg = config::Config::from_json(j);
    cfg.validate(/*check_paths=*/false);
    *out = new trialkit_context{pipeline::Pipeline(std::move(cfg))};
    return TRIALKIT_OK;
  });
}

void trialkit_context_destroy(trialkit_context* ctx) { delete ctx; }

trialkit_status trialkit_validate(trialkit_context* ctx) {
  return guarded([&]() -> trialkit_status {
    if (ctx == nullptr) throw ValidationError("context is null");
    ctx->pipeline.validate(/*check_paths=*/true);
    return TRIALKIT_OK;
  });
}

trialkit_status trialkit_ingest(trialkit_context* ctx, const char* source,
                                const char* input_path, const char* fetch_query,
                                const char* out_path, size_t* records_out) {
  return guarded([&]() -> trialkit_status {
    if (ctx == nullptr) throw ValidationError("context is null");
    if (source == nullptr || out_path == nullptr) {
      throw ValidationError("source and out_path are required");
    }
    size_t n = ctx->pipeline.ingest(source, input_path ? input_path : "",
                                    fetch_query ? fetch_query : "", out_path);
    if (records_out != nullptr) *records_out = n;
    return TRIALKIT_OK;
  });
}

trialkit_status trialkit_curate(trialkit_context* ctx, const char* corpus_path,
                                const char* out_dir, char** summary_json_out) {
  return guarded([&]() -> trialkit_status {
    if (ctx == nullptr) throw ValidationError("context is null");
    json summary = ctx->pipeline.curate(corpus_path ? corpus_path : "",
                                        out_dir ? out_dir : "");
    if (summary_json_out != nullptr) *summary_json_out = dup_string(summary.dump());
    return TRIALKIT_OK;
  });
}

trialkit_status trialkit_build(trialkit_context* ctx, const char* task, const char* out_dir,
                               char** manifest_json_out) {
  return guarded([&]() -> trialkit_status {
    if (ctx == nullptr) throw ValidationError("context is null");
    json manifest =
        ctx->pipeline.build(task ? task : "all", out_dir ? out_dir : "");
    if (manifest_json_out != nullptr) *manifest_json_out = dup_string(manifest.dump());
    return TRIALKIT_OK;
  });
}

trialkit_status trialkit_eval(trialkit_context* ctx, const char* task, const char* out_dir,
                              char** summary_json_out) {
  return guarded([&]() -> trialkit_status {
    if (ctx == nullptr) throw ValidationError("context is null");
    json summary = ctx->pipeline.eval(task ? task : "all", out_dir ? out_dir : "");
    if (summary_json_out != nullptr) *summary_json_out = dup_string(summary.dump());
    return summary.at("failed").empty() ? TRIALKIT_OK : TRIALKIT_ERR_TASK;
  });
}

trialkit_status trialkit_render_trial_markdown(const char* doc_json, char** markdown_out) {
  return guarded([&]() -> trialkit_status {
    if (markdown_out == nullptr) throw ValidationError("output pointer is null");
    json j = parse_or_throw(doc_json, "trial document");
    corpus::TrialDocument doc = corpus::TrialDocument::from_json(j);
    *markdown_out = dup_string(corpus::render_trial_markdown(doc));
    return TRIALKIT_OK;
  });
}

trialkit_status trialkit_compile_query(const char* query_json, char** expression_out) {
  return guarded([&]() -> trialkit_status {
    if (expression_out == nullptr) throw ValidationError("output pointer is null");
    json j = parse_or_throw(query_json, "structured query");
    auto query = search::StructuredQuery::from_json(j, search::Vocabulary::defaults(),
                                                    /*strict=*/false);
    *expression_out = dup_string(search::compile_query(query).to_string());
    return TRIALKIT_OK;
  });
}

trialkit_status trialkit_classification_metrics(const char* gold_json, const char* pred_json,
                                                const char* classes_json,
                                                char** metrics_json_out) {
  return guarded([&]() -> trialkit_status {
    if (metrics_json_out == nullptr) throw ValidationError("output pointer is null");
    auto to_vec = [](const json& arr) {
      std::vector<std::string> out;
      for (const auto& v : arr) out.push_back(v.get<std::string>());
      return out;
    };
    auto gold = to_vec(parse_or_throw(gold_json, "gold labels"));
    auto pred = to_vec(parse_or_throw(pred_json, "predicted labels"));
    auto classes = to_vec(parse_or_throw(classes_json, "class set"));
    auto report = metrics::classification_metrics(gold, pred, classes);
    *metrics_json_out = dup_string(report.to_json().dump());
    return TRIALKIT_OK;
  });
}

void trialkit_string_free(char* s) { std::free(s); }

} // extern "C"
