#include "bench/runners.hpp"

#include "corpus/markdown.hpp"
#include "instruct/builders.hpp"
#include "metrics/judge.hpp"
#include "search/extract.hpp"
#include "util/digest.hpp"
#include "util/errors.hpp"
#include "util/parallel.hpp"
#include "util/text.hpp"

#include <algorithm>
#include <numeric>

namespace trialkit::bench {

namespace {

using instruct::InstructionRecord;
using instruct::Task;

metrics::MetricValue metric(const std::string& name, double value, size_t support) {
  return {name, value, support, std::nullopt};
}

double mean(const std::vector<double>& xs) {
  if (xs.empty()) return 0.0;
  return std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

std::string sample_id(const InstructionRecord& r) {
  return r.provenance.empty() ? sha256_hex(r.input).substr(0, 12)
                              : text::join(r.provenance, "|");
}

std::string digest12(const std::string& s) { return sha256_hex(s).substr(0, 12); }

std::set<std::string> normalized_term_set(const std::vector<std::string>& terms) {
  std::set<std::string> out;
  for (const auto& t : terms) {
    std::string norm = text::normalize_term(t);
    if (!norm.empty()) out.insert(norm);
  }
  return out;
}

std::vector<std::string> split_terms(const std::string& joined) {
  std::vector<std::string> out;
  size_t start = 0;
  while (start <= joined.size()) {
    size_t pos = joined.find("; ", start);
    std::string term =
        text::trim(joined.substr(start, pos == std::string::npos ? std::string::npos
                                                                 : pos - start));
    if (!term.empty()) out.push_back(term);
    if (pos == std::string::npos) break;
    start = pos + 2;
  }
  return out;
}

std::string fenced(const std::string& body) { return "<<<\n" + body + "\n>>>"; }

EvalReport base_report(const std::string& task, const RunContext& ctx) {
  EvalReport report;
  report.task = task;
  report.model_id = ctx.backend ? ctx.backend->backend_id() : "none";
  report.judge_model_id = ctx.judge ? ctx.judge->backend_id() : "";
  report.config_digest = ctx.config_digest;
  report.seed = ctx.seed;
  return report;
}

Task dataset_task(const std::vector<InstructionRecord>& dataset) {
  if (dataset.empty()) throw ValidationError("evaluation dataset is empty");
  Task t = dataset.front().task;
  for (const auto& r : dataset) {
    if (r.task != t) throw ValidationError("evaluation dataset mixes tasks");
  }
  return t;
}

} // namespace

EvalReport run_search_eval(const std::vector<InstructionRecord>& dataset, RunContext& ctx) {
  Task task = dataset_task(dataset);
  if (task != Task::query_generation && task != Task::query_expansion) {
    throw ValidationError("run_search_eval expects query generation or expansion records");
  }
  EvalReport report = base_report(instruct::task_name(task), ctx);
  report.per_sample.resize(dataset.size());

  std::vector<double> overall(dataset.size(), 0.0);
  std::vector<std::map<std::string, double>> per_cat(dataset.size());

  parallel_for(dataset.size(), ctx.workers, [&](size_t i) {
    const auto& rec = dataset[i];
    SampleRecord sample;
    sample.id = sample_id(rec);
    sample.input_digest = digest12(rec.input);
    sample.gold = rec.output;
    if (task == Task::query_generation) {
      json gold_json = json::parse(rec.output, nullptr, false);
      if (gold_json.is_discarded()) {
        throw ValidationError("query generation record has malformed gold output: " + sample.id);
      }
      auto gold = search::StructuredQuery::from_json(gold_json, ctx.vocab, /*strict=*/false);
      try {
        auto extraction = search::extract_structured_query(rec.input, *ctx.backend,
                                                           *ctx.templates, ctx.vocab,
                                                           ctx.backend_params);
        auto qj = metrics::query_jaccard(extraction.query, gold);
        sample.prediction = extraction.query.to_json().dump();
        overall[i] = qj.overall;
        per_cat[i] = qj.per_category;
        json cats = json::object();
        for (const auto& [name, value] : qj.per_category) cats[name] = value;
        sample.scores = json{{"jaccard", qj.overall}, {"per_category", cats}};
        for (const auto& key : extraction.flagged_keys) {
          sample.flags.push_back("fallback:" + key);
        }
      } catch (const TransportError&) {
        sample.flags.push_back("backend_failure");
        sample.scores = json{{"jaccard", 0.0}};
      }
    } else {
      std::vector<std::string> seeds = split_terms(rec.input);
      std::set<std::string> gold = normalized_term_set(split_terms(rec.output));
      try {
        auto expansion =
            search::expand_terms(seeds, *ctx.backend, *ctx.templates, ctx.backend_params);
        std::set<std::string> pred(expansion.terms.begin(), expansion.terms.end());
        double j = metrics::jaccard_index(pred, gold);
        overall[i] = j;
        sample.prediction = text::join(expansion.terms, "; ");
        sample.scores = json{{"jaccard", j}};
        if (expansion.flagged) sample.flags.push_back("fallback:expansion");
      } catch (const TransportError&) {
        sample.flags.push_back("backend_failure");
        sample.scores = json{{"jaccard", 0.0}};
      }
    }
    report.per_sample[i] = std::move(sample);
  });

  report.metric_values.push_back(metric("jaccard", mean(overall), dataset.size()));
  if (task == Task::query_generation) {
    for (search::Category c : search::kCategoryOrder) {
      std::string name = search::category_name(c);
      std::vector<double> values;
      for (const auto& m : per_cat) {
        auto it = m.find(name);
        values.push_back(it == m.end() ? 0.0 : it->second);
      }
      report.metric_values.push_back(metric("jaccard." + name, mean(values), dataset.size()));
    }
  }
  for (const auto& s : report.per_sample) {
    for (const auto& f : s.flags) ++report.counters[f];
  }
  return report;
}

namespace {

struct KeywordScores {
  double diseases = 0.0;
  double interventions = 0.0;
  double diseases_expanded = 0.0;
  double interventions_expanded = 0.0;
  bool failed = false;
};

KeywordScores keyword_scores(const std::string& gold_summary, const std::string& gen_summary,
                             RunContext& ctx) {
  KeywordScores ks;
  try {
    auto gold_q = search::extract_structured_query(gold_summary, *ctx.backend, *ctx.templates,
                                                   ctx.vocab, ctx.backend_params);
    auto gen_q = search::extract_structured_query(gen_summary, *ctx.backend, *ctx.templates,
                                                  ctx.vocab, ctx.backend_params);
    auto expand = [&](const std::vector<std::string>& seeds) -> std::set<std::string> {
      if (seeds.empty()) return {};
      auto exp = search::expand_terms(seeds, *ctx.backend, *ctx.templates, ctx.backend_params);
      return {exp.terms.begin(), exp.terms.end()};
    };
    auto as_set = [](const std::vector<std::string>& v) {
      return std::set<std::string>(v.begin(), v.end());
    };
    ks.diseases = metrics::jaccard_index(as_set(gen_q.query.diseases),
                                         as_set(gold_q.query.diseases));
    ks.interventions = metrics::jaccard_index(as_set(gen_q.query.interventions),
                                              as_set(gold_q.query.interventions));
    ks.diseases_expanded = metrics::jaccard_index(expand(gen_q.query.diseases),
                                                  expand(gold_q.query.diseases));
    ks.interventions_expanded = metrics::jaccard_index(expand(gen_q.query.interventions),
                                                       expand(gold_q.query.interventions));
  } catch (const TransportError&) {
    ks.failed = true;
  }
  return ks;
}

} // namespace

EvalReport run_summarization_eval(const std::vector<InstructionRecord>& dataset,
                                  RunContext& ctx) {
  Task task = dataset_task(dataset);
  if (task != Task::single_summarization && task != Task::multi_summarization) {
    throw ValidationError("run_summarization_eval expects summarization records");
  }
  EvalReport report = base_report(instruct::task_name(task), ctx);
  report.per_sample.resize(dataset.size());

  const std::string template_name =
      task == Task::single_summarization ? "summarize_single" : "summarize_multi";
  const std::string slot = task == Task::single_summarization ? "trial_text" : "papers_text";
  const auto& tmpl = ctx.templates->get(template_name);

  std::vector<std::string> generations(dataset.size());
  std::vector<metrics::RougeScores> rouge(dataset.size());
  std::vector<KeywordScores> keywords(dataset.size());

  parallel_for(dataset.size(), ctx.workers, [&](size_t i) {
    const auto& rec = dataset[i];
    SampleRecord sample;
    sample.id = sample_id(rec);
    sample.input_digest = digest12(rec.input);
    sample.gold = rec.output;
    try {
      std::string prompt = render_template(tmpl, {{slot, fenced(rec.input)}});
      gateway::ChatRequest req{{{gateway::Role::user, prompt}}, ctx.backend_params};
      generations[i] = ctx.backend->complete_chat(req);
      sample.prediction = generations[i];
      rouge[i] = metrics::rouge_scores(generations[i], rec.output);
      if (generations[i].empty()) sample.flags.push_back("empty_generation");
      keywords[i] = keyword_scores(rec.output, generations[i], ctx);
      if (keywords[i].failed) sample.flags.push_back("keywords_failed");
    } catch (const TransportError&) {
      sample.flags.push_back("backend_failure");
    }
    sample.scores = json{{"rouge1", rouge[i].rouge1},
                         {"rouge2", rouge[i].rouge2},
                         {"rougeL", rouge[i].rougeL},
                         {"keywords",
                          {{"diseases", keywords[i].diseases},
                           {"interventions", keywords[i].interventions},
                           {"diseases_expanded", keywords[i].diseases_expanded},
                           {"interventions_expanded", keywords[i].interventions_expanded}}}};
    report.per_sample[i] = std::move(sample);
  });

  auto collect = [&](auto getter) {
    std::vector<double> out;
    for (size_t i = 0; i < dataset.size(); ++i) out.push_back(getter(i));
    return out;
  };
  report.metric_values.push_back(
      metric("rouge1", mean(collect([&](size_t i) { return rouge[i].rouge1; })), dataset.size()));
  report.metric_values.push_back(
      metric("rouge2", mean(collect([&](size_t i) { return rouge[i].rouge2; })), dataset.size()));
  report.metric_values.push_back(
      metric("rougeL", mean(collect([&](size_t i) { return rouge[i].rougeL; })), dataset.size()));
  report.metric_values.push_back(metric(
      "keywords.diseases", mean(collect([&](size_t i) { return keywords[i].diseases; })),
      dataset.size()));
  report.metric_values.push_back(metric(
      "keywords.interventions",
      mean(collect([&](size_t i) { return keywords[i].interventions; })), dataset.size()));
  report.metric_values.push_back(metric(
      "keywords.diseases_expanded",
      mean(collect([&](size_t i) { return keywords[i].diseases_expanded; })), dataset.size()));
  report.metric_values.push_back(metric(
      "keywords.interventions_expanded",
      mean(collect([&](size_t i) { return keywords[i].interventions_expanded; })),
      dataset.size()));

  if (ctx.judge) {
    std::vector<metrics::SummaryPair> pairs;
    for (size_t i = 0; i < dataset.size(); ++i) {
      pairs.push_back({dataset[i].output, generations[i]});
    }
    try {
      auto goal = metrics::goal_alignment_rate(pairs, *ctx.judge, *ctx.templates,
                                               ctx.judge_params);
      report.metric_values.push_back(metric("goal_alignment", goal.rate, goal.support));
      report.counters["goal_unparsed"] += goal.unparsed;
      auto taxonomy = ctx.conclusion_taxonomy.empty() ? metrics::default_conclusion_taxonomy()
                                                      : ctx.conclusion_taxonomy;
      auto conclusion = metrics::conclusion_consistency(pairs, *ctx.judge, *ctx.templates,
                                                        taxonomy, ctx.judge_params);
      report.metric_values.push_back(
          metric("conclusion_consistency", conclusion.rate, conclusion.support));
      report.counters["conclusion_unparsed"] += conclusion.unparsed;
    } catch (const TransportError&) {
      report.counters["judge_unavailable"] = 1;
    }
  } else {
    report.counters["judge_absent"] = 1;
  }
  for (const auto& s : report.per_sample) {
    for (const auto& f : s.flags) ++report.counters[f];
  }
  return report;
}

namespace {

struct RoundScore {
  double bleu = 0.0;
  metrics::RougeScores rouge;
  std::optional<int> relevance_bit;
  bool relevance_unparsed = false;
  bool failed = false;
};

struct DesignAccumulator {
  std::vector<double> bleu;
  std::vector<double> rouge1, rouge2, rougeL;
  std::vector<int> relevance_bits;
  size_t relevance_unparsed = 0;
};

void fold_round(DesignAccumulator& acc, const RoundScore& score, bool judge_active) {
  acc.bleu.push_back(score.bleu);
  acc.rouge1.push_back(score.rouge.rouge1);
  acc.rouge2.push_back(score.rouge.rouge2);
  acc.rougeL.push_back(score.rouge.rougeL);
  if (judge_active && score.relevance_bit) acc.relevance_bits.push_back(*score.relevance_bit);
  if (score.relevance_unparsed) ++acc.relevance_unparsed;
}

void emit_design_metrics(EvalReport& report, const DesignAccumulator& acc, bool judge_active) {
  size_t n = acc.bleu.size();
  report.metric_values.push_back(metric("bleu", mean(acc.bleu), n));
  report.metric_values.push_back(metric("rouge1", mean(acc.rouge1), n));
  report.metric_values.push_back(metric("rouge2", mean(acc.rouge2), n));
  report.metric_values.push_back(metric("rougeL", mean(acc.rougeL), n));
  if (judge_active && !acc.relevance_bits.empty()) {
    report.metric_values.push_back(metric("clinical_relevance",
                                          metrics::clinical_relevance(acc.relevance_bits),
                                          acc.relevance_bits.size()));
  }
  report.counters["relevance_unparsed"] += acc.relevance_unparsed;
}

std::string design_suffix(Task t) {
  switch (t) {
  case Task::criteria_design: return "criteria";
  case Task::study_arm_design: return "study_arms";
  case Task::outcome_measure_design: return "outcome_measures";
  default: throw ValidationError("not a design task");
  }
}

} // namespace

static EvalReport run_design_reference(const std::vector<InstructionRecord>& dataset, Task task,
                                       RunContext& ctx) {
  EvalReport report = base_report(instruct::task_name(task), ctx);
  report.options = json{{"mode", "reference"}, {"averaging", "per-round"}};
  const std::string suffix = design_suffix(task);

  struct ConversationResult {
    SampleRecord sample;
    std::vector<RoundScore> rounds;
    bool skipped = false;
  };
  std::vector<ConversationResult> results(dataset.size());
  bool judge_active = static_cast<bool>(ctx.judge);

  parallel_for(dataset.size(), ctx.workers, [&](size_t i) {
    const auto& rec = dataset[i];
    ConversationResult& res = results[i];
    res.sample.id = sample_id(rec);
    size_t rounds = rec.messages.size() / 2;
    std::string transcript_key;
    for (const auto& m : rec.messages) transcript_key += m.content;
    res.sample.input_digest = digest12(transcript_key);
    if (rounds < 4) {
      res.skipped = true;
      return;
    }
    json round_scores = json::array();
    for (size_t k = 4; k <= rounds; ++k) {
      RoundScore score;
      // ground-truth history only: turns [0, 2k-1) end on the round-k user turn
      std::vector<gateway::ChatMessage> history(rec.messages.begin(),
                                                rec.messages.begin() + (2 * k - 1));
      const std::string& gold_turn = rec.messages[2 * k - 1].content;
      try {
        gateway::ChatRequest req{history, ctx.backend_params};
        std::string pred = ctx.backend->complete_chat(req);
        score.bleu = metrics::bleu_score(pred, gold_turn);
        score.rouge = metrics::rouge_scores(pred, gold_turn);
        if (ctx.judge) {
          auto verdict = metrics::judge_relevance(gold_turn, pred, suffix, *ctx.judge,
                                                  *ctx.templates, ctx.judge_params);
          score.relevance_bit = verdict.bit;
          score.relevance_unparsed = verdict.unparsed;
        }
      } catch (const TransportError&) {
        score.failed = true;
        res.sample.flags.push_back("backend_failure:round" + std::to_string(k));
      }
      round_scores.push_back(json{{"round", k},
                                  {"bleu", score.bleu},
                                  {"rouge1", score.rouge.rouge1},
                                  {"rouge2", score.rouge.rouge2},
                                  {"rougeL", score.rouge.rougeL}});
      res.rounds.push_back(std::move(score));
    }
    res.sample.scores = json{{"rounds", round_scores}};
  });

  DesignAccumulator acc;
  for (auto& res : results) {
    if (res.skipped) {
      ++report.counters["skipped_short_conversation"];
      continue;
    }
    for (const auto& r : res.rounds) fold_round(acc, r, judge_active);
    report.per_sample.push_back(std::move(res.sample));
  }
  emit_design_metrics(report, acc, judge_active);
  return report;
}

static std::vector<EvalReport> run_design_de_novo(const DesignDatasets& datasets,
                                                  const std::vector<corpus::TrialDocument>& docs,
                                                  RunContext& ctx) {
  std::map<std::string, const corpus::TrialDocument*> by_id;
  for (const auto& d : docs) by_id[d.id] = &d;

  // the chain starts from trials that have a criteria-design record
  std::vector<const corpus::TrialDocument*> trials;
  {
    std::set<std::string> seen;
    for (const auto& rec : datasets.criteria) {
      if (rec.provenance.empty()) continue;
      const std::string& id = rec.provenance.front();
      auto it = by_id.find(id);
      if (it == by_id.end() || !seen.insert(id).second) continue;
      trials.push_back(it->second);
    }
  }

  struct StageResult {
    RoundScore criteria, arms, outcomes;
    SampleRecord sample_criteria, sample_arms, sample_outcomes;
    bool failed = false;
  };
  std::vector<StageResult> results(trials.size());
  bool judge_active = static_cast<bool>(ctx.judge);

  const auto& criteria_tmpl = ctx.templates->get("denovo_criteria");
  const auto& arms_tmpl = ctx.templates->get("denovo_study_arms");
  const auto& outcomes_tmpl = ctx.templates->get("denovo_outcome_measures");

  parallel_for(trials.size(), ctx.workers, [&](size_t i) {
    const corpus::TrialDocument& doc = *trials[i];
    StageResult& res = results[i];
    std::string setup = fenced(corpus::render_trial_setup(doc));
    auto run_stage = [&](const gateway::PromptTemplate& tmpl,
                         const std::map<std::string, std::string>& slots,
                         const std::string& reference, const std::string& suffix,
                         RoundScore& score, SampleRecord& sample,
                         std::string& generated) -> bool {
      std::string prompt = render_template(tmpl, slots);
      try {
        gateway::ChatRequest req{{{gateway::Role::user, prompt}}, ctx.backend_params};
        generated = ctx.backend->complete_chat(req);
      } catch (const TransportError&) {
        score.failed = true;
        sample.flags.push_back("backend_failure");
        return false;
      }
      score.bleu = metrics::bleu_score(generated, reference);
      score.rouge = metrics::rouge_scores(generated, reference);
      if (ctx.judge) {
        auto verdict = metrics::judge_relevance(reference, generated, suffix, *ctx.judge,
                                                *ctx.templates, ctx.judge_params);
        score.relevance_bit = verdict.bit;
        score.relevance_unparsed = verdict.unparsed;
      }
      sample.id = doc.id;
      sample.input_digest = digest12(prompt);
      sample.prediction = generated;
      sample.gold = reference;
      sample.scores = json{{"bleu", score.bleu},
                           {"rouge1", score.rouge.rouge1},
                           {"rouge2", score.rouge.rouge2},
                           {"rougeL", score.rouge.rougeL}};
      return true;
    };

    std::string gen_criteria, gen_arms, gen_outcomes;
    if (!run_stage(criteria_tmpl, {{"setup", setup}}, corpus::render_criteria_text(doc),
                   "criteria", res.criteria, res.sample_criteria, gen_criteria)) {
      res.failed = true;
      return;
    }
    // downstream prompts embed the generated upstream text verbatim
    if (!run_stage(arms_tmpl, {{"setup", setup}, {"criteria", fenced(gen_criteria)}},
                   corpus::render_arms_text(doc), "study_arms", res.arms, res.sample_arms,
                   gen_arms)) {
      res.failed = true;
      return;
    }
    if (!run_stage(outcomes_tmpl,
                   {{"setup", setup},
                    {"criteria", fenced(gen_criteria)},
                    {"arms", fenced(gen_arms)}},
                   corpus::render_outcomes_text(doc), "outcome_measures", res.outcomes,
                   res.sample_outcomes, gen_outcomes)) {
      res.failed = true;
      return;
    }
  });

  EvalReport criteria_report = base_report("criteria_design", ctx);
  EvalReport arms_report = base_report("study_arm_design", ctx);
  EvalReport outcomes_report = base_report("outcome_measure_design", ctx);
  for (EvalReport* r : {&criteria_report, &arms_report, &outcomes_report}) {
    r->options = json{{"mode", "de_novo"}, {"averaging", "per-stage"}};
  }

  DesignAccumulator acc_criteria, acc_arms, acc_outcomes;
  for (auto& res : results) {
    if (res.failed) {
      ++criteria_report.counters["chain_failures"];
      continue;
    }
    fold_round(acc_criteria, res.criteria, judge_active);
    fold_round(acc_arms, res.arms, judge_active);
    fold_round(acc_outcomes, res.outcomes, judge_active);
    criteria_report.per_sample.push_back(std::move(res.sample_criteria));
    arms_report.per_sample.push_back(std::move(res.sample_arms));
    outcomes_report.per_sample.push_back(std::move(res.sample_outcomes));
  }
  emit_design_metrics(criteria_report, acc_criteria, judge_active);
  emit_design_metrics(arms_report, acc_arms, judge_active);
  emit_design_metrics(outcomes_report, acc_outcomes, judge_active);
  return {criteria_report, arms_report, outcomes_report};
}

std::vector<EvalReport> run_design_eval(const DesignDatasets& datasets,
                                        const std::vector<corpus::TrialDocument>& docs,
                                        RunContext& ctx, DesignMode mode) {
  if (mode == DesignMode::de_novo) return run_design_de_novo(datasets, docs, ctx);
  std::vector<EvalReport> reports;
  if (!datasets.criteria.empty()) {
    reports.push_back(run_design_reference(datasets.criteria, Task::criteria_design, ctx));
  }
  if (!datasets.study_arms.empty()) {
    reports.push_back(run_design_reference(datasets.study_arms, Task::study_arm_design, ctx));
  }
  if (!datasets.outcome_measures.empty()) {
    reports.push_back(
        run_design_reference(datasets.outcome_measures, Task::outcome_measure_design, ctx));
  }
  if (reports.empty()) throw ValidationError("design evaluation received no records");
  return reports;
}

EvalReport run_matching_eval(const std::vector<PatientCase>& cases, RunContext& ctx) {
  if (cases.empty()) throw ValidationError("matching evaluation received no cases");
  Scheme scheme = cases.front().scheme;
  for (const auto& c : cases) {
    if (c.scheme != scheme) {
      throw ValidationError("matching evaluation must not mix label schemes");
    }
  }
  EvalReport report = base_report("patient_trial_matching", ctx);
  report.options = json{{"scheme", scheme_name(scheme)},
                        {"unparsed_policy", "middle_class"},
                        {"f1_averaging", "macro"}};
  const auto& labels = scheme_labels(scheme);

  report.per_sample.resize(cases.size());
  std::vector<int> pred(cases.size(), 1);

  parallel_for(cases.size(), ctx.workers, [&](size_t i) {
    const auto& c = cases[i];
    SampleRecord sample;
    sample.id = c.patient_id + "|" + c.trial_id;
    sample.input_digest = digest12(c.note + "\x1f" + c.criteria);
    sample.gold = labels[c.gold];
    std::string answer;
    try {
      std::string prompt = instruct::matching_prompt(*ctx.templates, c);
      gateway::ChatRequest req{{{gateway::Role::user, prompt}}, ctx.backend_params};
      answer = ctx.backend->complete_chat(req);
    } catch (const TransportError&) {
      sample.flags.push_back("backend_failure");
    }
    auto parsed = parse_scheme_label(answer, scheme);
    if (!parsed) {
      pred[i] = 1; // middle class, penalizing without crediting eligibility
      sample.flags.push_back("unparsed");
    } else {
      pred[i] = *parsed;
    }
    sample.prediction = labels[pred[i]];
    report.per_sample[i] = std::move(sample);
  });

  std::vector<std::string> gold_names, pred_names;
  for (size_t i = 0; i < cases.size(); ++i) {
    gold_names.push_back(labels[cases[i].gold]);
    pred_names.push_back(labels[pred[i]]);
  }
  auto three = metrics::classification_metrics(gold_names, pred_names, labels);
  report.metric_values.push_back(metric("bacc", three.bacc, cases.size()));
  report.metric_values.push_back(metric("kappa", three.kappa, cases.size()));
  report.metric_values.push_back(metric("precision", three.macro_precision, cases.size()));
  report.metric_values.push_back(metric("recall", three.macro_recall, cases.size()));
  report.metric_values.push_back(metric("f1", three.macro_f1, cases.size()));
  report.metric_values.push_back(metric("micro_f1", three.micro_f1, cases.size()));
  report.metric_values.push_back(
      metric("f1." + labels[2], three.per_class_f1.at(labels[2]), cases.size()));

  // binary view: eligible / highly-likely against everything else
  auto gold_bin = metrics::binary_regroup(gold_names, labels[2]);
  auto pred_bin = metrics::binary_regroup(pred_names, labels[2]);
  auto binary = metrics::classification_metrics(gold_bin, pred_bin, {"0", "1"});
  size_t tp = binary.confusion[1][1];
  size_t fp = binary.confusion[0][1];
  size_t fn = binary.confusion[1][0];
  double bp = (tp + fp) > 0 ? static_cast<double>(tp) / (tp + fp) : 0.0;
  double br = (tp + fn) > 0 ? static_cast<double>(tp) / (tp + fn) : 0.0;
  report.metric_values.push_back(metric("binary_f1", binary.per_class_f1.at("1"), cases.size()));
  report.metric_values.push_back(metric("binary_precision", bp, cases.size()));
  report.metric_values.push_back(metric("binary_recall", br, cases.size()));

  size_t unparsed = 0;
  for (const auto& s : report.per_sample) {
    for (const auto& f : s.flags) {
      ++report.counters[f];
      if (f == "unparsed") ++unparsed;
    }
  }
  report.metric_values.push_back(
      metric("unparsed_rate", static_cast<double>(unparsed) / cases.size(), cases.size()));
  return report;
}

} // namespace trialkit::bench
