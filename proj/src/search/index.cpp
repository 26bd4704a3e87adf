#include "search/index.hpp"

#include "util/errors.hpp"
#include "util/text.hpp"

namespace trialkit::search {

std::map<Category, std::vector<std::string>> index_terms(const corpus::TrialDocument& doc) {
  std::map<Category, std::vector<std::string>> out;
  for (const auto& c : doc.conditions) {
    std::string t = text::normalize_term(c);
    if (!t.empty()) out[Category::diseases].push_back(t);
  }
  for (const auto& i : doc.interventions) {
    std::string t = text::normalize_term(i);
    if (!t.empty()) out[Category::interventions].push_back(t);
  }
  // registries report multi-valued phases joined with ", " over enum tokens
  for (const auto& part : text::split_lines(doc.phase)) {
    size_t start = 0;
    while (start <= part.size()) {
      size_t pos = part.find(", ", start);
      std::string piece = part.substr(start, pos == std::string::npos ? std::string::npos
                                                                      : pos - start);
      std::string t = canonical_registry_label(piece);
      if (!t.empty()) out[Category::phases].push_back(t);
      if (pos == std::string::npos) break;
      start = pos + 2;
    }
  }
  {
    std::string t = canonical_registry_label(doc.status);
    if (!t.empty()) out[Category::statuses].push_back(t);
  }
  {
    std::string t = canonical_registry_label(doc.study_type);
    if (!t.empty()) out[Category::study_types].push_back(t);
  }
  return out;
}

TermIndex TermIndex::build(const std::vector<corpus::TrialDocument>& docs) {
  TermIndex index;
  for (const auto& doc : docs) {
    index.add_document(doc.id, index_terms(doc));
  }
  return index;
}

void TermIndex::add_document(const std::string& doc_id,
                             const std::map<Category, std::vector<std::string>>& terms) {
  doc_ids_.push_back(doc_id);
  for (const auto& [category, list] : terms) {
    for (const auto& term : list) {
      postings_[category][term].insert(doc_id);
    }
  }
}

const std::set<std::string>& TermIndex::postings(Category c, const std::string& term) const {
  static const std::set<std::string> empty;
  auto cit = postings_.find(c);
  if (cit == postings_.end()) return empty;
  auto tit = cit->second.find(term);
  if (tit == cit->second.end()) return empty;
  return tit->second;
}

std::set<std::string> TermIndex::evaluate(const SearchExpression& expr) const {
  expr.validate();
  std::set<std::string> result;
  bool first = true;
  for (const auto& group : expr.conjuncts) {
    std::set<std::string> group_docs;
    for (const auto& term : group.terms) {
      if (group.category) {
        const auto& p = postings(*group.category, term);
        group_docs.insert(p.begin(), p.end());
      } else {
        for (const auto& [_, term_map] : postings_) {
          auto it = term_map.find(term);
          if (it != term_map.end()) group_docs.insert(it->second.begin(), it->second.end());
        }
      }
    }
    if (first) {
      result = std::move(group_docs);
      first = false;
    } else {
      std::set<std::string> inter;
      for (const auto& id : result) {
        if (group_docs.count(id)) inter.insert(id);
      }
      result = std::move(inter);
    }
    if (result.empty()) break;
  }
  return result;
}

json TermIndex::to_json() const {
  json postings = json::object();
  for (const auto& [category, term_map] : postings_) {
    json terms = json::object();
    for (const auto& [term, ids] : term_map) {
      terms[term] = std::vector<std::string>(ids.begin(), ids.end());
    }
    postings[category_name(category)] = std::move(terms);
  }
  return json{{"doc_count", doc_ids_.size()}, {"doc_ids", doc_ids_}, {"postings", postings}};
}

size_t LocalRegistryClient::count_results(const StructuredQuery& query) {
  if (query.all_empty()) return 0;
  return index_.evaluate(compile_query(query)).size();
}

TermIndex TermIndex::from_json(const json& j) {
  TermIndex index;
  for (const auto& id : j.at("doc_ids")) index.doc_ids_.push_back(id.get<std::string>());
  std::set<std::string> known(index.doc_ids_.begin(), index.doc_ids_.end());
  for (const auto& [cat_name, term_map] : j.at("postings").items()) {
    Category c = category_from(cat_name);
    for (const auto& [term, ids] : term_map.items()) {
      for (const auto& id : ids) {
        std::string doc_id = id.get<std::string>();
        if (!known.count(doc_id)) {
          throw ParseError("index postings reference unknown document " + doc_id);
        }
        index.postings_[c][term].insert(std::move(doc_id));
      }
    }
  }
  return index;
}

} // namespace trialkit::search
