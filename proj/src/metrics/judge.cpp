#include "metrics/judge.hpp"

#include "util/errors.hpp"
#include "util/text.hpp"

namespace trialkit::metrics {

std::vector<std::string> default_conclusion_taxonomy() {
  return {"positive effect", "negative effect", "no significant difference", "inconclusive"};
}

std::optional<int> parse_yes_no(const std::string& answer) {
  for (const auto& token : text::tokenize(answer)) {
    if (token == "yes") return 1;
    if (token == "no") return 0;
  }
  return std::nullopt;
}

std::optional<int> parse_bit(const std::string& answer) {
  for (const auto& token : text::tokenize(answer)) {
    if (token == "1") return 1;
    if (token == "0") return 0;
  }
  return std::nullopt;
}

std::optional<std::string> parse_label(const std::string& answer,
                                       const std::vector<std::string>& taxonomy) {
  std::string lowered = text::lower_ascii(answer);
  std::optional<std::string> best;
  size_t best_pos = 0;
  size_t best_len = 0;
  for (const auto& label : taxonomy) {
    std::string needle = text::lower_ascii(label);
    size_t last = std::string::npos;
    size_t pos = 0;
    while ((pos = lowered.find(needle, pos)) != std::string::npos) {
      last = pos;
      ++pos;
    }
    if (last == std::string::npos) continue;
    if (!best || last > best_pos || (last == best_pos && needle.size() > best_len)) {
      best = label;
      best_pos = last;
      best_len = needle.size();
    }
  }
  return best;
}

namespace {

std::string fenced(const std::string& body) { return "<<<\n" + body + "\n>>>"; }

std::string ask(gateway::ChatGateway& judge, const std::string& prompt,
                const gateway::ChatParams& params) {
  gateway::ChatRequest req{{{gateway::Role::user, prompt}}, params};
  return judge.complete_chat(req);
}

} // namespace

JudgeRate goal_alignment_rate(const std::vector<SummaryPair>& pairs, gateway::ChatGateway& judge,
                              const gateway::TemplateStore& templates,
                              const gateway::ChatParams& params) {
  if (pairs.empty()) throw ValidationError("goal_alignment_rate requires at least one pair");
  const auto& tmpl = templates.get("judge_goal_alignment");
  JudgeRate out;
  out.support = pairs.size();
  double sum = 0.0;
  for (const auto& pair : pairs) {
    std::string prompt = render_template(
        tmpl, {{"reference", fenced(pair.gold)}, {"candidate", fenced(pair.generated)}});
    std::string answer = ask(judge, prompt, params);
    auto bit = parse_yes_no(answer);
    if (!bit) {
      ++out.unparsed;
      out.bits.push_back(0);
    } else {
      out.bits.push_back(*bit);
      sum += *bit;
    }
  }
  out.rate = sum / static_cast<double>(pairs.size());
  return out;
}

ConsistencyResult conclusion_consistency(const std::vector<SummaryPair>& pairs,
                                         gateway::ChatGateway& judge,
                                         const gateway::TemplateStore& templates,
                                         const std::vector<std::string>& taxonomy,
                                         const gateway::ChatParams& params) {
  if (pairs.empty()) throw ValidationError("conclusion_consistency requires at least one pair");
  if (taxonomy.empty()) throw ValidationError("conclusion taxonomy must not be empty");
  const auto& tmpl = templates.get("judge_conclusion_label");
  std::string labels_line = text::join(taxonomy, "; ");

  ConsistencyResult out;
  out.support = pairs.size();
  size_t matches = 0;
  for (const auto& pair : pairs) {
    auto label_of = [&](const std::string& summary) -> std::optional<std::string> {
      std::string prompt =
          render_template(tmpl, {{"summary", fenced(summary)}, {"taxonomy", labels_line}});
      return parse_label(ask(judge, prompt, params), taxonomy);
    };
    auto gold_label = label_of(pair.gold);
    auto gen_label = label_of(pair.generated);
    if (!gold_label || !gen_label) {
      ++out.unparsed;
      out.labels.emplace_back(gold_label.value_or(""), gen_label.value_or(""));
      continue; // never a match
    }
    if (*gold_label == *gen_label) ++matches;
    out.labels.emplace_back(*gold_label, *gen_label);
  }
  out.rate = static_cast<double>(matches) / static_cast<double>(pairs.size());
  return out;
}

RelevanceVerdict judge_relevance(const std::string& reference, const std::string& generated,
                                 const std::string& subtask, gateway::ChatGateway& judge,
                                 const gateway::TemplateStore& templates,
                                 const gateway::ChatParams& params) {
  const auto& tmpl = templates.get("judge_relevance_" + subtask);
  std::string prompt =
      render_template(tmpl, {{"reference", fenced(reference)}, {"generated", fenced(generated)}});
  RelevanceVerdict v;
  v.raw_text = ask(judge, prompt, params);
  auto bit = parse_bit(v.raw_text);
  if (!bit) {
    v.unparsed = true;
    v.bit = 0;
  } else {
    v.bit = *bit;
  }
  return v;
}

} // namespace trialkit::metrics
