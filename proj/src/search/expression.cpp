#include "search/expression.hpp"

#include "util/errors.hpp"
#include "util/text.hpp"

namespace trialkit::search {

void SearchExpression::validate() const {
  if (conjuncts.empty()) throw ValidationError("search expression has no conjuncts");
  for (const auto& group : conjuncts) {
    if (group.terms.empty()) throw ValidationError("search expression has an empty OR-group");
  }
}

namespace {

bool needs_quoting(const std::string& term) {
  return term.find_first_of("()\"") != std::string::npos;
}

std::string quoted(const std::string& term) {
  if (!needs_quoting(term)) return term;
  std::string out = "\"";
  for (char c : term) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

} // namespace

std::string SearchExpression::to_string() const {
  validate();
  std::vector<std::string> groups;
  for (const auto& group : conjuncts) {
    std::vector<std::string> terms;
    for (const auto& t : group.terms) terms.push_back(quoted(t));
    groups.push_back("(" + text::join(terms, " OR ") + ")");
  }
  return text::join(groups, " AND ");
}

json SearchExpression::to_json() const {
  json arr = json::array();
  for (const auto& group : conjuncts) {
    json g{{"category", group.category ? json(category_name(*group.category)) : json(nullptr)},
           {"terms", group.terms}};
    arr.push_back(std::move(g));
  }
  return json{{"conjuncts", arr}};
}

SearchExpression SearchExpression::from_json(const json& j) {
  SearchExpression expr;
  for (const auto& g : j.at("conjuncts")) {
    OrGroup group;
    if (!g.at("category").is_null()) group.category = category_from(g.at("category"));
    for (const auto& t : g.at("terms")) group.terms.push_back(t.get<std::string>());
    expr.conjuncts.push_back(std::move(group));
  }
  expr.validate();
  return expr;
}

SearchExpression SearchExpression::parse(const std::string& s) {
  SearchExpression expr;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < s.size() && s[i] == ' ') ++i;
  };
  auto expect = [&](char c) {
    if (i >= s.size() || s[i] != c) {
      throw ParseError("expected '" + std::string(1, c) + "' at offset " + std::to_string(i) +
                       " in expression: " + s);
    }
    ++i;
  };

  auto parse_term = [&]() -> std::string {
    skip_ws();
    if (i < s.size() && s[i] == '"') {
      ++i;
      std::string term;
      while (i < s.size() && s[i] != '"') {
        if (s[i] == '\\' && i + 1 < s.size()) ++i;
        term.push_back(s[i]);
        ++i;
      }
      expect('"');
      return term;
    }
    // bare term: up to " OR " / ")" at this nesting level
    std::string term;
    while (i < s.size() && s[i] != ')') {
      if (s.compare(i, 4, " OR ") == 0) break;
      term.push_back(s[i]);
      ++i;
    }
    std::string trimmed = text::trim(term);
    if (trimmed.empty()) throw ParseError("empty term at offset " + std::to_string(i));
    return trimmed;
  };

  for (;;) {
    skip_ws();
    expect('(');
    OrGroup group;
    for (;;) {
      group.terms.push_back(parse_term());
      skip_ws();
      if (s.compare(i, 3, "OR ") == 0) {
        i += 3;
        continue;
      }
      break;
    }
    expect(')');
    expr.conjuncts.push_back(std::move(group));
    skip_ws();
    if (i >= s.size()) break;
    if (s.compare(i, 4, "AND ") == 0) {
      i += 4;
      continue;
    }
    throw ParseError("expected AND at offset " + std::to_string(i) + " in expression: " + s);
  }
  expr.validate();
  return expr;
}

SearchExpression SearchExpression::without_categories() const {
  SearchExpression out = *this;
  for (auto& group : out.conjuncts) group.category.reset();
  return out;
}

SearchExpression compile_query(const StructuredQuery& q) {
  if (q.all_empty()) {
    throw ValidationError("cannot compile an all-empty structured query");
  }
  SearchExpression expr;
  for (Category c : kCategoryOrder) {
    const auto& terms = q.terms(c);
    if (terms.empty()) continue;
    expr.conjuncts.push_back(OrGroup{c, terms});
  }
  expr.validate();
  return expr;
}

} // namespace trialkit::search
