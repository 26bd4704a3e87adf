#pragma once

#include "util/jsonl.hpp"

#include <array>
#include <string>
#include <vector>

namespace trialkit::search {

enum class Category { diseases, interventions, phases, statuses, study_types };

constexpr std::array<Category, 5> kCategoryOrder = {
    Category::diseases, Category::interventions, Category::phases, Category::statuses,
    Category::study_types};

std::string category_name(Category c);
Category category_from(const std::string& name);

/// Controlled vocabularies for the three closed categories. Diseases and
/// interventions are open-class.
struct Vocabulary {
  std::vector<std::string> phases;
  std::vector<std::string> statuses;
  std::vector<std::string> study_types;

  bool allows(Category c, const std::string& normalized_term) const;
  static Vocabulary defaults();
  static Vocabulary from_json(const json& j);
  json to_json() const;
};

/// Five-category term sets. Terms are stored normalized and unique, in first-
/// appearance order.
struct StructuredQuery {
  std::vector<std::string> diseases;
  std::vector<std::string> interventions;
  std::vector<std::string> phases;
  std::vector<std::string> statuses;
  std::vector<std::string> study_types;

  bool operator==(const StructuredQuery&) const = default;

  const std::vector<std::string>& terms(Category c) const;
  std::vector<std::string>& terms(Category c);
  bool all_empty() const;

  json to_json() const;

  /// Normalizes and deduplicates. Closed-category terms outside the
  /// vocabulary raise ValidationError when `strict`, and are dropped
  /// otherwise.
  static StructuredQuery from_json(const json& j, const Vocabulary& vocab, bool strict = true);

  /// Construction from raw term lists (normalize + dedup + vocabulary filter).
  static StructuredQuery sanitize(const StructuredQuery& raw, const Vocabulary& vocab);
};

/// Map a registry enum label ("PHASE3", "ACTIVE_NOT_RECRUITING",
/// "INTERVENTIONAL") or free-form registry text onto the query vocabulary
/// form ("phase 3", "active, not recruiting", "interventional").
std::string canonical_registry_label(const std::string& registry_value);

} // namespace trialkit::search
