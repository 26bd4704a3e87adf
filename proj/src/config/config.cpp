#include "config/config.hpp"

#include "util/digest.hpp"
#include "util/errors.hpp"

namespace trialkit::config {

BackendSpec BackendSpec::from_json(const json& j) {
  BackendSpec s;
  s.type = j.value("type", std::string("stub"));
  if (s.type != "stub" && s.type != "openai" && s.type != "none") {
    throw ConfigError("backend type must be 'stub', 'openai', or 'none', got '" + s.type + "'");
  }
  s.name = j.value("name", s.type == "stub" ? std::string("stub") : j.value("model_id", s.type));
  s.endpoint = j.value("endpoint", std::string());
  s.path = j.value("path", std::string("/v1/chat/completions"));
  s.model_id = j.value("model_id", std::string());
  s.credential_env = j.value("credential_env", std::string("TRIALKIT_API_KEY"));
  s.timeout_seconds = j.value("timeout_seconds", 60);
  s.temperature = j.value("temperature", 0.0);
  s.max_tokens = j.value("max_tokens", 2048);
  s.stub = j.value("stub", json::object());
  s.script_path = j.value("script_path", std::string());
  return s;
}

json BackendSpec::to_json() const {
  return json{{"type", type},
              {"name", name},
              {"endpoint", endpoint},
              {"path", path},
              {"model_id", model_id},
              {"credential_env", credential_env},
              {"timeout_seconds", timeout_seconds},
              {"temperature", temperature},
              {"max_tokens", max_tokens},
              {"stub", stub},
              {"script_path", script_path}};
}

Config Config::from_json(const json& j) {
  Config c;
  auto str = [&](const char* key, std::string& into) {
    if (j.contains(key) && !j.at(key).is_null()) into = j.at(key).get<std::string>();
  };
  str("sources_dir", c.sources_dir);
  str("corpus_file", c.corpus_file);
  str("papers_file", c.papers_file);
  str("review_pairs_file", c.review_pairs_file);
  str("matching_cases_file", c.matching_cases_file);
  str("query_gen_seeds_file", c.query_gen_seeds_file);
  str("templates_dir", c.templates_dir);
  str("cache_dir", c.cache_dir);
  str("curated_dir", c.curated_dir);
  str("datasets_dir", c.datasets_dir);
  str("reports_dir", c.reports_dir);

  if (j.contains("cutoff")) {
    auto d = Date::parse(j.at("cutoff").get<std::string>());
    if (!d) throw ConfigError("cutoff is not a valid calendar date");
    c.cutoff = *d;
  }
  if (j.contains("dedup")) {
    const json& d = j.at("dedup");
    c.dedup_threshold = d.value("threshold", c.dedup_threshold);
    c.shingle_tokens = d.value("shingle_tokens", c.shingle_tokens);
    c.sketch_slots = d.value("sketch_slots", c.sketch_slots);
    c.bands = d.value("bands", c.bands);
  }
  if (j.contains("source_priority")) {
    for (const auto& s : j.at("source_priority")) {
      c.source_priority.push_back(s.get<std::string>());
    }
  }
  if (j.contains("pii_patterns")) {
    for (const auto& p : j.at("pii_patterns")) {
      c.pii_patterns.push_back({p.at("name").get<std::string>(),
                                p.at("regex").get<std::string>(),
                                p.at("placeholder").get<std::string>()});
    }
  }
  if (j.contains("vocabulary")) c.vocab = search::Vocabulary::from_json(j.at("vocabulary"));
  if (j.contains("conclusion_taxonomy")) {
    for (const auto& t : j.at("conclusion_taxonomy")) {
      c.conclusion_taxonomy.push_back(t.get<std::string>());
    }
  }
  str("design_mode", c.design_mode);
  c.min_summary_words = j.value("min_summary_words", c.min_summary_words);
  c.query_gen_rounds = j.value("query_gen_rounds", c.query_gen_rounds);
  c.query_gen_similarity = j.value("query_gen_similarity", c.query_gen_similarity);

  if (j.contains("backend")) c.backend = BackendSpec::from_json(j.at("backend"));
  if (j.contains("judge")) c.judge = BackendSpec::from_json(j.at("judge"));
  str("fetch_endpoint", c.fetch_endpoint);

  c.seed = j.value("seed", c.seed);
  c.workers = j.value("workers", c.workers);
  c.requests_per_second = j.value("requests_per_second", c.requests_per_second);
  c.max_in_flight = j.value("max_in_flight", c.max_in_flight);
  c.max_attempts = j.value("max_attempts", c.max_attempts);
  c.backoff_base_seconds = j.value("backoff_base_seconds", c.backoff_base_seconds);
  return c;
}

Config Config::load(const std::filesystem::path& file) {
  json j = json::parse(read_file(file), nullptr, false);
  if (j.is_discarded()) throw ConfigError("malformed config JSON: " + file.string());
  Config c = from_json(j);
  std::filesystem::path base = file.has_parent_path() ? file.parent_path() : ".";
  auto resolve = [&](std::string& p) {
    if (!p.empty() && std::filesystem::path(p).is_relative()) {
      p = (base / p).lexically_normal().string();
    }
  };
  resolve(c.sources_dir);
  resolve(c.corpus_file);
  resolve(c.papers_file);
  resolve(c.review_pairs_file);
  resolve(c.matching_cases_file);
  resolve(c.query_gen_seeds_file);
  resolve(c.templates_dir);
  resolve(c.cache_dir);
  resolve(c.curated_dir);
  resolve(c.datasets_dir);
  resolve(c.reports_dir);
  if (!c.backend.script_path.empty()) resolve(c.backend.script_path);
  if (!c.judge.script_path.empty()) resolve(c.judge.script_path);
  return c;
}

json Config::to_json() const {
  json pii = json::array();
  for (const auto& p : pii_patterns) {
    pii.push_back({{"name", p.name}, {"regex", p.regex}, {"placeholder", p.placeholder}});
  }
  return json{{"sources_dir", sources_dir},
              {"corpus_file", corpus_file},
              {"papers_file", papers_file},
              {"review_pairs_file", review_pairs_file},
              {"matching_cases_file", matching_cases_file},
              {"query_gen_seeds_file", query_gen_seeds_file},
              {"templates_dir", templates_dir},
              {"cache_dir", cache_dir},
              {"curated_dir", curated_dir},
              {"datasets_dir", datasets_dir},
              {"reports_dir", reports_dir},
              {"cutoff", cutoff.iso()},
              {"dedup",
               {{"threshold", dedup_threshold},
                {"shingle_tokens", shingle_tokens},
                {"sketch_slots", sketch_slots},
                {"bands", bands}}},
              {"source_priority", source_priority},
              {"pii_patterns", pii},
              {"vocabulary", vocab.to_json()},
              {"conclusion_taxonomy", conclusion_taxonomy},
              {"design_mode", design_mode},
              {"min_summary_words", min_summary_words},
              {"query_gen_rounds", query_gen_rounds},
              {"query_gen_similarity", query_gen_similarity},
              {"backend", backend.to_json()},
              {"judge", judge.to_json()},
              {"fetch_endpoint", fetch_endpoint},
              {"seed", seed},
              {"workers", workers},
              {"requests_per_second", requests_per_second},
              {"max_in_flight", max_in_flight},
              {"max_attempts", max_attempts},
              {"backoff_base_seconds", backoff_base_seconds}};
}

std::string Config::digest() const { return sha256_hex(to_json().dump()); }

void Config::validate(bool check_paths) const {
  if (!(dedup_threshold > 0.0 && dedup_threshold <= 1.0)) {
    throw ConfigError("dedup.threshold must lie in (0, 1]");
  }
  if (sketch_slots == 0 || bands == 0 || sketch_slots % bands != 0) {
    throw ConfigError("dedup.sketch_slots must be a positive multiple of dedup.bands");
  }
  if (design_mode != "reference" && design_mode != "de_novo") {
    throw ConfigError("design_mode must be 'reference' or 'de_novo'");
  }
  if (backend.type == "openai" && backend.endpoint.empty()) {
    throw ConfigError("openai backend requires an endpoint");
  }
  if (check_paths) {
    auto must_exist = [](const std::string& p, const char* what) {
      if (!p.empty() && !std::filesystem::exists(p)) {
        throw ConfigError(std::string(what) + " does not exist: " + p);
      }
    };
    must_exist(corpus_file, "corpus_file");
    must_exist(papers_file, "papers_file");
    must_exist(review_pairs_file, "review_pairs_file");
    must_exist(matching_cases_file, "matching_cases_file");
    must_exist(query_gen_seeds_file, "query_gen_seeds_file");
    must_exist(templates_dir, "templates_dir");
    must_exist(backend.script_path, "backend script_path");
    must_exist(judge.script_path, "judge script_path");
  }
}

} // namespace trialkit::config
