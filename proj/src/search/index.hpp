#pragma once

#include "corpus/document.hpp"
#include "search/expression.hpp"

#include <map>
#include <set>

namespace trialkit::search {

/// Immutable inverted index over normalized terms, one posting map per
/// category. Matching is exact on normalized terms.
class TermIndex {
public:
  TermIndex() = default;

  static TermIndex build(const std::vector<corpus::TrialDocument>& docs);

  /// Intersection over conjuncts of the union over each group's postings.
  /// Unknown terms contribute empty postings. Groups without a category look
  /// the term up in every category.
  std::set<std::string> evaluate(const SearchExpression& expr) const;

  size_t doc_count() const { return doc_ids_.size(); }
  const std::vector<std::string>& doc_ids() const { return doc_ids_; }

  const std::set<std::string>& postings(Category c, const std::string& term) const;

  json to_json() const;
  static TermIndex from_json(const json& j);

  void add_document(const std::string& doc_id,
                    const std::map<Category, std::vector<std::string>>& terms);

private:
  std::vector<std::string> doc_ids_;
  std::map<Category, std::map<std::string, std::set<std::string>>> postings_;
};

/// The category->terms view of one document that the index ingests; shared
/// with the brute-force oracle used in tests.
std::map<Category, std::vector<std::string>> index_terms(const corpus::TrialDocument& doc);

/// Anything that can execute a structured query and report how many trials
/// match: the local index, the live registry client, or a test stub.
class RegistryClient {
public:
  virtual ~RegistryClient() = default;
  virtual size_t count_results(const StructuredQuery& query) = 0;
};

class LocalRegistryClient : public RegistryClient {
public:
  explicit LocalRegistryClient(TermIndex index) : index_(std::move(index)) {}
  size_t count_results(const StructuredQuery& query) override;

private:
  TermIndex index_;
};

} // namespace trialkit::search
