#include "instruct/builders.hpp"

#include "curation/shingle.hpp"
#include "util/digest.hpp"
#include "util/errors.hpp"
#include "util/parallel.hpp"
#include "util/rng.hpp"
#include "util/text.hpp"

#include <algorithm>

namespace trialkit::instruct {

json BuildResult::counters_json() const {
  json j = json::object();
  for (const auto& [k, v] : counters) j[k] = v;
  return j;
}

std::string fenced_block(const std::string& body) { return "<<<\n" + body + "\n>>>"; }

std::string bullet_block(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& item : items) out += "- " + item + "\n";
  if (!out.empty()) out.pop_back();
  return out;
}

std::string carve_dev(const std::string& base_split, const std::string& record_key,
                      uint64_t seed) {
  if (base_split != "train") return base_split;
  uint64_t h = fnv1a(record_key) ^ seed;
  uint64_t state = h;
  return splitmix64(state) % 100 < 15 ? "dev" : "train";
}

namespace {

void sort_records(std::vector<InstructionRecord>& records) {
  std::sort(records.begin(), records.end(),
            [](const InstructionRecord& a, const InstructionRecord& b) {
              std::string ka = text::join(a.provenance, "|");
              std::string kb = text::join(b.provenance, "|");
              if (ka != kb) return ka < kb;
              return a.input < b.input;
            });
}

std::optional<std::string> base_split_for(const curation::SplitManifest& manifest,
                                          const std::string& doc_id) {
  std::string s = manifest.split_of(doc_id);
  if (s == "train" || s == "test") return s;
  return std::nullopt; // excluded or unknown: build nothing from it
}

} // namespace

BuildResult build_query_expansion_set(const std::vector<corpus::TrialDocument>& docs,
                                      const curation::SplitManifest& manifest, uint64_t seed) {
  BuildResult result;
  for (const auto& doc : docs) {
    if (doc.mesh_terms.size() < 6) {
      ++result.counters["skipped_few_terms"];
      continue;
    }
    auto base = base_split_for(manifest, doc.id);
    if (!base) {
      ++result.counters["skipped_excluded"];
      continue;
    }
    InstructionRecord r;
    r.task = Task::query_expansion;
    r.provenance = {doc.id};
    r.split = carve_dev(*base, doc.id, seed);
    r.instruction =
        "Suggest additional search keywords related to the given clinical trial terms.";
    std::vector<std::string> head(doc.mesh_terms.begin(), doc.mesh_terms.begin() + 5);
    std::vector<std::string> tail(doc.mesh_terms.begin() + 5, doc.mesh_terms.end());
    r.input = text::join(head, "; ");
    r.output = text::join(tail, "; ");
    result.records.push_back(std::move(r));
  }
  sort_records(result.records);
  result.counters["records"] = result.records.size();
  return result;
}

BuildResult build_single_summarization_set(const std::vector<corpus::TrialDocument>& docs,
                                           const curation::SplitManifest& manifest,
                                           uint64_t seed, size_t min_summary_words) {
  BuildResult result;
  for (const auto& doc : docs) {
    if (text::count_words(doc.brief_summary) < min_summary_words) {
      ++result.counters["skipped_short_summary"];
      continue;
    }
    auto base = base_split_for(manifest, doc.id);
    if (!base) {
      ++result.counters["skipped_excluded"];
      continue;
    }
    InstructionRecord r;
    r.task = Task::single_summarization;
    r.provenance = {doc.id};
    r.split = carve_dev(*base, doc.id, seed);
    r.instruction = "Summarize the clinical trial document in a short paragraph covering its "
                    "goal and, when stated, its conclusion.";
    r.input = corpus::render_trial_markdown(doc, {.omit_brief_summary = true});
    r.output = doc.brief_summary;
    result.records.push_back(std::move(r));
  }
  sort_records(result.records);
  result.counters["records"] = result.records.size();
  return result;
}

ReviewPair ReviewPair::from_json(const json& j) {
  ReviewPair p;
  for (const auto& id : j.at("pmids")) p.pmids.push_back(id.get<std::string>());
  p.review = j.at("review").get<std::string>();
  if (j.contains("split") && !j.at("split").is_null()) {
    p.split = j.at("split").get<std::string>();
  }
  return p;
}

BuildResult build_multi_summarization_set(const std::vector<ReviewPair>& pairs,
                                          const std::vector<corpus::TrialPaper>& papers,
                                          const Date& cutoff, uint64_t seed) {
  BuildResult result;
  std::map<std::string, const corpus::TrialPaper*> by_pmid;
  for (const auto& p : papers) by_pmid[p.pmid] = &p;

  for (const auto& pair : pairs) {
    std::vector<const corpus::TrialPaper*> resolved;
    for (const auto& pmid : pair.pmids) {
      auto it = by_pmid.find(pmid);
      if (it != by_pmid.end()) resolved.push_back(it->second);
    }
    if (resolved.size() < 3) {
      ++result.counters["dropped_unresolved"];
      continue;
    }
    std::string base;
    if (pair.split) {
      base = *pair.split;
    } else {
      // derive from paper dates: any post-cutoff paper makes the pair test,
      // an undated paper makes the pair unusable
      bool any_post = false;
      bool any_undated = false;
      for (const auto* p : resolved) {
        if (!p->publication_date) {
          any_undated = true;
        } else if (!(*p->publication_date < cutoff)) {
          any_post = true;
        }
      }
      if (any_undated && !any_post) {
        ++result.counters["dropped_undated"];
        continue;
      }
      base = any_post ? "test" : "train";
    }
    InstructionRecord r;
    r.task = Task::multi_summarization;
    for (const auto* p : resolved) r.provenance.push_back(p->pmid);
    std::string key = text::join(r.provenance, "|");
    r.split = base == "train" ? carve_dev(base, key, seed) : base;
    r.instruction = "Write a concise review-style summary of the findings shared by the "
                    "clinical trial papers.";
    std::vector<std::string> blocks;
    for (const auto* p : resolved) {
      blocks.push_back("Title: " + p->title + "\nAbstract: " + p->abstract_text);
    }
    r.input = text::join(blocks, "\n\n");
    r.output = pair.review;
    result.records.push_back(std::move(r));
  }
  sort_records(result.records);
  result.counters["records"] = result.records.size();
  return result;
}

namespace {

std::string pool_examples_json(const std::vector<InstructionRecord>& pool, size_t cap) {
  json arr = json::array();
  for (size_t i = 0; i < pool.size() && i < cap; ++i) {
    json q = json::parse(pool[i].output, nullptr, false);
    arr.push_back({{"input", pool[i].input}, {"query", q.is_discarded() ? json::object() : q}});
  }
  return arr.dump(2);
}

std::string generated_split(const std::string& key, uint64_t seed) {
  uint64_t state = fnv1a(key) ^ seed;
  uint64_t v = splitmix64(state) % 100;
  if (v < 70) return "train";
  if (v < 85) return "dev";
  return "test";
}

} // namespace

BuildResult build_query_generation_set(const std::vector<InstructionRecord>& seeds,
                                       gateway::ChatGateway& gw,
                                       const gateway::TemplateStore& templates,
                                       search::RegistryClient& registry,
                                       const search::Vocabulary& vocab,
                                       const gateway::ChatParams& params,
                                       const QueryGenOptions& options) {
  if (seeds.empty()) throw ValidationError("query generation needs a non-empty seed pool");
  BuildResult result;
  std::vector<InstructionRecord> pool = seeds;

  std::vector<std::set<uint64_t>> pool_shingles;
  auto text_shingles = [](const std::string& s) {
    return curation::shingle_set(text::normalize_text(s), 3);
  };
  for (const auto& r : pool) pool_shingles.push_back(text_shingles(r.input));

  const auto& tmpl = templates.get("query_gen_candidates");
  for (int round = 1; round <= options.rounds; ++round) {
    std::string prompt = render_template(
        tmpl, {{"seed_examples", fenced_block(pool_examples_json(pool, options.prompt_pool_cap))},
               {"count", std::to_string(options.candidates_per_round)}});
    gateway::ChatRequest req{{{gateway::Role::user, prompt}}, params};
    std::string answer = gw.complete_chat(req);
    auto arr = gateway::parse_json_array(answer);
    if (!arr) {
      ++result.counters["invalid_candidate_rounds"];
      continue;
    }
    for (const auto& item : *arr) {
      if (!item.is_object() || !item.contains("input") || !item.contains("query") ||
          !item.at("input").is_string()) {
        ++result.counters["invalid_candidates"];
        continue;
      }
      std::string input = text::normalize_text(item.at("input").get<std::string>());
      search::StructuredQuery query;
      try {
        query = search::StructuredQuery::from_json(item.at("query"), vocab, /*strict=*/false);
      } catch (const Error&) {
        ++result.counters["invalid_candidates"];
        continue;
      }
      if (input.empty() || query.all_empty()) {
        ++result.counters["invalid_candidates"];
        continue;
      }
      std::set<uint64_t> sh = text_shingles(input);
      bool duplicate = false;
      for (const auto& existing : pool_shingles) {
        if (curation::exact_jaccard(sh, existing) >= options.similarity_threshold) {
          duplicate = true;
          break;
        }
      }
      if (duplicate) {
        ++result.counters["near_duplicate_candidates"];
        continue;
      }
      InstructionRecord r;
      r.task = Task::query_generation;
      r.instruction = "Convert the clinical trial search request into a structured query with "
                      "diseases, interventions, phases, statuses, and study types.";
      r.input = input;
      r.output = query.to_json().dump();
      std::string key = sha256_hex(input).substr(0, 8);
      r.provenance = {"synthetic:r" + std::to_string(round) + ":" + key};
      r.split = generated_split(input, options.seed);
      pool.push_back(std::move(r));
      pool_shingles.push_back(std::move(sh));
      ++result.counters["generated"];
    }
  }

  // execution filter: queries with zero registry results leave the pool
  for (auto& record : pool) {
    json qj = json::parse(record.output, nullptr, false);
    if (qj.is_discarded()) {
      ++result.counters["dropped_malformed_query"];
      continue;
    }
    search::StructuredQuery q = search::StructuredQuery::from_json(qj, vocab, /*strict=*/false);
    size_t hits = 0;
    bool executed = true;
    try {
      hits = registry.count_results(q);
    } catch (const Error&) {
      executed = false;
    }
    if (!executed) {
      record.flags.push_back("unexecuted");
      ++result.counters["unexecuted"];
      result.records.push_back(record);
    } else if (hits == 0) {
      ++result.counters["dropped_zero_results"];
    } else {
      result.records.push_back(record);
    }
  }
  sort_records(result.records);
  result.counters["records"] = result.records.size();
  return result;
}

namespace {

struct DesignInputs {
  std::string component_heading; // "Reference criteria" etc.
  std::vector<std::string> items;
  std::map<std::string, std::string> stage1_slots;
  std::map<std::string, std::string> stage2_slots;
};

std::optional<DesignInputs> design_inputs(const corpus::TrialDocument& doc, Task subtask) {
  DesignInputs in;
  std::string setup = fenced_block(corpus::render_trial_setup(doc));
  std::string criteria = fenced_block(bullet_block(corpus::criteria_items(doc)));
  std::string arms = fenced_block(bullet_block(corpus::arm_items(doc)));
  switch (subtask) {
  case Task::criteria_design:
    in.items = corpus::criteria_items(doc);
    if (in.items.empty()) return std::nullopt;
    in.component_heading = "Reference criteria";
    in.stage1_slots = {{"setup", setup},
                       {"components", fenced_block(bullet_block(in.items))}};
    break;
  case Task::study_arm_design:
    in.items = corpus::arm_items(doc);
    if (in.items.empty() || corpus::criteria_items(doc).empty()) return std::nullopt;
    in.component_heading = "Reference study arms";
    in.stage1_slots = {{"setup", setup},
                       {"criteria", criteria},
                       {"components", fenced_block(bullet_block(in.items))}};
    break;
  case Task::outcome_measure_design:
    in.items = corpus::outcome_items(doc);
    if (in.items.empty() || corpus::arm_items(doc).empty() ||
        corpus::criteria_items(doc).empty()) {
      return std::nullopt;
    }
    in.component_heading = "Reference outcome measures";
    in.stage1_slots = {{"setup", setup},
                       {"criteria", criteria},
                       {"arms", arms},
                       {"components", fenced_block(bullet_block(in.items))}};
    break;
  default:
    throw ValidationError("not a design subtask: " + task_name(subtask));
  }
  in.stage2_slots = in.stage1_slots;
  return in;
}

std::string design_template_suffix(Task subtask) {
  switch (subtask) {
  case Task::criteria_design: return "criteria";
  case Task::study_arm_design: return "study_arms";
  case Task::outcome_measure_design: return "outcome_measures";
  default: throw ValidationError("not a design subtask: " + task_name(subtask));
  }
}

std::optional<std::vector<gateway::ChatMessage>> parse_conversation(const std::string& answer) {
  auto arr = gateway::parse_json_array(answer);
  if (!arr) return std::nullopt;
  std::vector<gateway::ChatMessage> messages;
  for (const auto& m : *arr) {
    if (!m.is_object() || !m.contains("role") || !m.contains("content")) return std::nullopt;
    std::string role = m.at("role").get<std::string>();
    if (role != "user" && role != "assistant") return std::nullopt;
    messages.push_back({gateway::role_from(role), m.at("content").get<std::string>()});
  }
  return messages;
}

bool conversation_valid(const std::vector<gateway::ChatMessage>& messages,
                        const std::vector<std::string>& items) {
  if (messages.size() < 8 || messages.size() % 2 != 0) return false; // four rounds minimum
  for (size_t i = 0; i < messages.size(); ++i) {
    gateway::Role expected = (i % 2 == 0) ? gateway::Role::user : gateway::Role::assistant;
    if (messages[i].role != expected || messages[i].content.empty()) return false;
  }
  for (const auto& item : items) {
    bool found = false;
    for (size_t i = 1; i < messages.size(); i += 2) {
      if (messages[i].content.find(item) != std::string::npos) {
        found = true;
        break;
      }
    }
    if (!found) return false; // ground truth must appear verbatim
  }
  return true;
}

} // namespace

BuildResult build_design_conversations(const std::vector<corpus::TrialDocument>& docs,
                                       Task subtask, const curation::SplitManifest& manifest,
                                       gateway::ChatGateway& gw,
                                       const gateway::TemplateStore& templates,
                                       const gateway::ChatParams& params, uint64_t seed,
                                       size_t workers) {
  if (!is_design_task(subtask)) {
    throw ValidationError(task_name(subtask) + " is not a design subtask");
  }
  const std::string suffix = design_template_suffix(subtask);
  const auto& reasons_tmpl = templates.get("design_reasons_" + suffix);
  const auto& convo_tmpl = templates.get("design_conversation_" + suffix);

  BuildResult result;
  std::vector<std::optional<InstructionRecord>> slots(docs.size());
  std::vector<std::string> outcomes(docs.size());

  parallel_for(docs.size(), workers, [&](size_t i) {
    const auto& doc = docs[i];
    auto inputs = design_inputs(doc, subtask);
    if (!inputs) {
      outcomes[i] = "skipped_missing_fields";
      return;
    }
    auto base = base_split_for(manifest, doc.id);
    if (!base) {
      outcomes[i] = "skipped_excluded";
      return;
    }
    try {
      std::string stage1 = render_template(reasons_tmpl, inputs->stage1_slots);
      gateway::ChatRequest req1{{{gateway::Role::user, stage1}}, params};
      std::string reasons = gw.complete_chat(req1);

      auto stage2_slots = inputs->stage2_slots;
      stage2_slots["reasons"] = fenced_block(reasons);
      std::string stage2 = render_template(convo_tmpl, stage2_slots);
      gateway::ChatRequest req2{{{gateway::Role::user, stage2}}, params};
      std::string convo_text = gw.complete_chat(req2);

      auto messages = parse_conversation(convo_text);
      if (!messages || !conversation_valid(*messages, inputs->items)) {
        outcomes[i] = "dropped_validation_gate";
        return;
      }
      InstructionRecord r;
      r.task = subtask;
      r.provenance = {doc.id};
      r.split = carve_dev(*base, doc.id, seed);
      r.messages = std::move(*messages);
      slots[i] = std::move(r);
      outcomes[i] = "records";
    } catch (const TransportError&) {
      outcomes[i] = "skipped_backend_failure";
    }
  });

  for (size_t i = 0; i < docs.size(); ++i) {
    if (!outcomes[i].empty()) ++result.counters[outcomes[i]];
    if (slots[i]) result.records.push_back(std::move(*slots[i]));
  }
  sort_records(result.records);
  result.counters["records"] = result.records.size();
  return result;
}

std::string scheme_labels_line(bench::Scheme scheme) {
  return text::join(bench::scheme_labels(scheme), "; ");
}

std::string matching_instruction(const gateway::TemplateStore& templates) {
  return "You are matching a patient to a clinical trial. Read the patient note and the trial "
         "criteria, reason criterion by criterion, then state the trial-level eligibility "
         "decision.\n\nExample:\n" +
         templates.get("matching_demonstration").body;
}

std::string matching_prompt(const gateway::TemplateStore& templates,
                            const bench::PatientCase& c) {
  const auto& tmpl = templates.get("matching_prompt");
  return render_template(tmpl, {{"demonstration", templates.get("matching_demonstration").body},
                                {"note", fenced_block(c.note)},
                                {"criteria", fenced_block(c.criteria)},
                                {"labels", scheme_labels_line(c.scheme)}});
}

BuildResult build_matching_set(const std::vector<bench::PatientCase>& cases,
                               gateway::ChatGateway& gw,
                               const gateway::TemplateStore& templates,
                               const gateway::ChatParams& params, size_t workers) {
  BuildResult result;
  std::vector<std::optional<InstructionRecord>> slots(cases.size());
  std::vector<std::string> outcomes(cases.size());

  parallel_for(cases.size(), workers, [&](size_t i) {
    const auto& c = cases[i];
    c.validate();
    std::string prompt = matching_prompt(templates, c);
    gateway::ChatRequest req{{{gateway::Role::user, prompt}}, params};
    std::string answer;
    try {
      answer = gw.complete_chat(req);
    } catch (const TransportError&) {
      outcomes[i] = "skipped_backend_failure";
      return;
    }
    auto predicted = bench::parse_scheme_label(answer, c.scheme);
    if (!predicted) {
      outcomes[i] = "dropped_unparsed";
      return;
    }
    if (*predicted != c.gold) {
      outcomes[i] = "dropped_incorrect";
      return;
    }
    InstructionRecord r;
    r.task = Task::patient_trial_matching;
    r.provenance = {c.patient_id, c.trial_id};
    r.split = c.split;
    r.instruction = matching_instruction(templates);
    r.input = "Patient note:\n" + fenced_block(c.note) + "\n\nTrial criteria:\n" +
              fenced_block(c.criteria);
    r.output = answer;
    slots[i] = std::move(r);
    outcomes[i] = "records";
  });

  for (size_t i = 0; i < cases.size(); ++i) {
    if (!outcomes[i].empty()) ++result.counters[outcomes[i]];
    if (slots[i]) result.records.push_back(std::move(*slots[i]));
  }
  sort_records(result.records);
  result.counters["records"] = result.records.size();
  return result;
}

} // namespace trialkit::instruct
