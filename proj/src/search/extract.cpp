#include "search/extract.hpp"

#include "util/errors.hpp"
#include "util/text.hpp"

#include <algorithm>
#include <set>

namespace trialkit::search {

namespace {

std::string fenced(const std::string& body) { return "<<<\n" + body + "\n>>>"; }

} // namespace

ExtractionResult extract_structured_query(const std::string& user_text,
                                          gateway::ChatGateway& gw,
                                          const gateway::TemplateStore& templates,
                                          const Vocabulary& vocab,
                                          const gateway::ChatParams& params, int max_attempts) {
  const gateway::PromptTemplate& tmpl = templates.get("search_extract_key");
  std::vector<gateway::FillKey> schema;
  for (Category c : kCategoryOrder) {
    std::string name = category_name(c);
    gateway::FillKey key;
    key.key = name;
    key.prompt = render_template(tmpl, {{"user_text", fenced(user_text)}, {"category", name}});
    key.parse = [c, &vocab](const std::string& answer) -> std::optional<json> {
      auto arr = gateway::parse_string_array(answer);
      if (!arr) return std::nullopt;
      json out = json::array();
      for (const auto& item : *arr) {
        std::string term = text::normalize_term(item.get<std::string>());
        if (term.empty()) continue;
        if (!vocab.allows(c, term)) return std::nullopt; // out-of-vocabulary answer
        out.push_back(term);
      }
      return out;
    };
    key.fallback = json::array();
    schema.push_back(std::move(key));
  }

  gateway::FillResult fill = constrained_fill(gw, schema, {}, params, max_attempts);

  ExtractionResult result;
  result.flagged_keys = fill.flagged_keys;
  StructuredQuery raw;
  for (const auto& [key, value] : fill.values) {
    Category c = category_from(key);
    for (const auto& term : value) raw.terms(c).push_back(term.get<std::string>());
  }
  result.query = StructuredQuery::sanitize(raw, vocab);
  return result;
}

ExpansionResult expand_terms(const std::vector<std::string>& seed_terms,
                             gateway::ChatGateway& gw,
                             const gateway::TemplateStore& templates,
                             const gateway::ChatParams& params, int max_attempts) {
  if (seed_terms.empty()) throw ValidationError("expand_terms requires non-empty seeds");
  const gateway::PromptTemplate& tmpl = templates.get("search_expand");

  gateway::FillKey key;
  key.key = "expansion";
  key.prompt = render_template(tmpl, {{"seed_terms", fenced(text::join(seed_terms, "; "))}});
  key.parse = [](const std::string& answer) { return gateway::parse_string_array(answer); };
  key.fallback = json::array();

  gateway::FillResult fill = constrained_fill(gw, {key}, {}, params, max_attempts);

  std::set<std::string> seeds;
  for (const auto& s : seed_terms) seeds.insert(text::normalize_term(s));

  ExpansionResult result;
  result.flagged = !fill.flagged_keys.empty();
  std::vector<std::string> terms;
  for (const auto& item : fill.values.front().second) {
    std::string t = text::normalize_term(item.get<std::string>());
    if (!t.empty() && !seeds.count(t)) terms.push_back(std::move(t));
  }
  result.terms = text::unique_stable(terms);
  return result;
}

} // namespace trialkit::search
