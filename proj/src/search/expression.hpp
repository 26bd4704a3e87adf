#pragma once

#include "search/query.hpp"

#include <optional>

namespace trialkit::search {

/// One OR-group: terms of one category joined by OR. Groups parsed back from
/// the engine-facing string form carry no category.
struct OrGroup {
  std::optional<Category> category;
  std::vector<std::string> terms; // non-empty

  bool operator==(const OrGroup&) const = default;
};

/// AND of OR-groups. Always at least one conjunct; no empty group.
struct SearchExpression {
  std::vector<OrGroup> conjuncts;

  bool operator==(const SearchExpression&) const = default;

  void validate() const;

  /// Canonical engine-facing string: "(a OR b) AND (c)". Terms containing
  /// parentheses or quotes are double-quoted with backslash escapes.
  std::string to_string() const;

  json to_json() const;
  static SearchExpression from_json(const json& j);

  /// Inverse of to_string (categories are not represented there).
  static SearchExpression parse(const std::string& s);

  SearchExpression without_categories() const;
};

/// One OR-group per non-empty category, in the fixed category order
/// (diseases, interventions, phases, statuses, study_types). An all-empty
/// query cannot compile; there is no match-all expression.
SearchExpression compile_query(const StructuredQuery& q);

} // namespace trialkit::search
