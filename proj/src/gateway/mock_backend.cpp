#include "gateway/mock_backend.hpp"

#include "search/query.hpp"
#include "util/digest.hpp"
#include "util/errors.hpp"
#include "util/text.hpp"

#include <algorithm>
#include <set>

namespace trialkit::gateway {

StubConfig StubConfig::from_json(const json& j) {
  StubConfig c;
  c.name = j.value("name", std::string("stub"));
  if (j.contains("rules")) {
    for (const auto& r : j.at("rules")) {
      c.rules.push_back({r.at("pattern").get<std::string>(), r.at("response").get<std::string>()});
    }
  }
  if (j.contains("sequence")) {
    for (const auto& s : j.at("sequence")) c.sequence.push_back(s.get<std::string>());
  }
  c.sentinel_prefix = j.value("sentinel_prefix", std::string());
  c.cooperative = j.value("cooperative", true);
  c.fallback = j.value("fallback", std::string("OK."));
  return c;
}

StubBackend::StubBackend(StubConfig config) : config_(std::move(config)) {
  for (const auto& rule : config_.rules) {
    try {
      compiled_.emplace_back(std::regex(rule.pattern, std::regex::ECMAScript), rule.response);
    } catch (const std::regex_error& e) {
      throw ConfigError("invalid stub rule pattern '" + rule.pattern + "': " + e.what());
    }
  }
}

std::vector<ChatRequest> StubBackend::recorded() const {
  std::lock_guard lock(mu_);
  return recorded_;
}

size_t StubBackend::calls() const {
  std::lock_guard lock(mu_);
  return recorded_.size();
}

namespace {

std::string transcript_text(const ChatRequest& req) {
  std::string all;
  for (const auto& m : req.messages) {
    all += m.content;
    all += '\n';
  }
  return all;
}

std::string last_user_text(const ChatRequest& req) {
  for (auto it = req.messages.rbegin(); it != req.messages.rend(); ++it) {
    if (it->role == Role::user) return it->content;
  }
  return {};
}

std::string expand_backrefs(const std::string& tmpl, const std::smatch& m) {
  std::string out;
  for (size_t i = 0; i < tmpl.size(); ++i) {
    if (tmpl[i] == '$' && i + 1 < tmpl.size() && std::isdigit(tmpl[i + 1])) {
      size_t g = tmpl[i + 1] - '0';
      if (g < m.size()) out += m[g].str();
      ++i;
    } else {
      out.push_back(tmpl[i]);
    }
  }
  return out;
}

// ---- cooperative helpers -------------------------------------------------

/// Last "Heading:\n<<<\n...\n>>>" block in the text.
std::optional<std::string> find_block(const std::string& text, const std::string& heading) {
  std::string marker = heading + "\n<<<\n";
  size_t pos = text.rfind(marker);
  if (pos == std::string::npos) return std::nullopt;
  size_t start = pos + marker.size();
  size_t end = text.find("\n>>>", start);
  if (end == std::string::npos) return std::nullopt;
  return text.substr(start, end - start);
}

std::optional<std::string> find_line_value(const std::string& text, const std::string& prefix) {
  size_t pos = text.rfind(prefix);
  if (pos == std::string::npos) return std::nullopt;
  size_t end = text.find('\n', pos);
  std::string line = text.substr(pos + prefix.size(),
                                 end == std::string::npos ? std::string::npos : end - pos - prefix.size());
  return text::trim(line);
}

std::vector<std::string> quoted_spans(const std::string& s) {
  std::vector<std::string> out;
  size_t pos = 0;
  while ((pos = s.find('"', pos)) != std::string::npos) {
    size_t close = s.find('"', pos + 1);
    if (close == std::string::npos) break;
    std::string span = s.substr(pos + 1, close - pos - 1);
    if (!span.empty() && span.size() < 120) out.push_back(span);
    pos = close + 1;
  }
  return out;
}

std::vector<std::string> bullet_items(const std::string& block) {
  std::vector<std::string> items;
  for (const auto& line : text::split_lines(block)) {
    std::string t = text::trim(line);
    if (t.rfind("- ", 0) == 0) items.push_back(t.substr(2));
  }
  return items;
}

size_t shared_long_tokens(const std::string& a, const std::string& b) {
  auto longs = [](const std::string& s) {
    std::set<std::string> out;
    for (auto& t : text::tokenize(s)) {
      if (t.size() >= 4) out.insert(t);
    }
    return out;
  };
  std::set<std::string> ta = longs(a);
  std::set<std::string> tb = longs(b);
  size_t n = 0;
  for (const auto& t : ta) {
    if (tb.count(t)) ++n;
  }
  return n;
}

std::string json_string_array(const std::vector<std::string>& items) {
  json arr = json::array();
  for (const auto& i : items) arr.push_back(i);
  return arr.dump();
}

std::optional<std::string> respond_extraction(const std::string& text_all) {
  auto category = find_line_value(text_all, "Category: ");
  auto request = find_block(text_all, "User request:");
  if (!category || !request) return std::nullopt;
  std::string lowered = text::lower_ascii(*request);
  search::Vocabulary vocab = search::Vocabulary::defaults();
  auto scan = [&](const std::vector<std::string>& terms) {
    std::vector<std::string> found;
    for (const auto& t : terms) {
      if (lowered.find(t) != std::string::npos) found.push_back(t);
    }
    return found;
  };
  if (*category == "phases") return json_string_array(scan(vocab.phases));
  if (*category == "statuses") return json_string_array(scan(vocab.statuses));
  if (*category == "study_types") return json_string_array(scan(vocab.study_types));
  if (*category == "diseases") return json_string_array(quoted_spans(*request));
  if (*category == "interventions") return json_string_array({});
  return std::nullopt;
}

std::optional<std::string> respond_expansion(const std::string& text_all) {
  auto seeds = find_block(text_all, "Seed terms:");
  if (!seeds) return std::nullopt;
  std::vector<std::string> seed_list;
  for (const auto& part : text::split_lines(*seeds)) {
    for (size_t start = 0, pos = 0; pos != std::string::npos; start = pos + 2) {
      pos = part.find("; ", start);
      std::string term = text::trim(part.substr(start, pos == std::string::npos ? std::string::npos
                                                                                : pos - start));
      if (!term.empty()) seed_list.push_back(term);
    }
  }
  if (seed_list.empty()) return json_string_array({});
  return json_string_array({seed_list.front() + " related disorders",
                            "agents for " + text::lower_ascii(seed_list.front())});
}

std::optional<std::string> respond_summary(const std::string& text_all) {
  auto block = find_block(text_all, "Trial document:");
  if (!block) block = find_block(text_all, "Papers:");
  if (!block) return std::nullopt;
  std::vector<std::string> tokens = text::tokenize(*block);
  size_t n = std::min<size_t>(tokens.size(), 40);
  std::vector<std::string> head(tokens.begin(), tokens.begin() + n);
  return "This study " + text::join(head, " ") + ".";
}

std::optional<std::string> respond_goal_judge(const std::string& text_all) {
  auto ref = find_block(text_all, "Reference summary:");
  auto cand = find_block(text_all, "Candidate summary:");
  if (!ref || !cand) return std::nullopt;
  return shared_long_tokens(*ref, *cand) >= 3 ? "yes" : "no";
}

std::optional<std::string> respond_conclusion_judge(const std::string& text_all) {
  auto labels_line = find_line_value(text_all, "Labels: ");
  auto summary = find_block(text_all, "Summary:");
  if (!labels_line || !summary) return std::nullopt;
  std::vector<std::string> labels;
  for (size_t start = 0, pos = 0; pos != std::string::npos; start = pos + 2) {
    pos = labels_line->find("; ", start);
    std::string l = text::trim(labels_line->substr(start, pos == std::string::npos
                                                              ? std::string::npos
                                                              : pos - start));
    if (!l.empty()) labels.push_back(l);
  }
  if (labels.empty()) return std::nullopt;
  std::string lowered = text::lower_ascii(*summary);
  auto has = [&](const char* cue) { return lowered.find(cue) != std::string::npos; };
  std::string pick;
  if (has("improv") || has("superior") || has("effective") || has("benefit")) {
    pick = "positive";
  } else if (has("wors") || has("inferior") || has("harm") || has("adverse")) {
    pick = "negative";
  } else if (has("no significant") || has("no difference")) {
    pick = "no significant";
  }
  for (const auto& l : labels) {
    if (!pick.empty() && text::lower_ascii(l).find(pick) != std::string::npos) return l;
  }
  return labels.back();
}

std::optional<std::string> respond_relevance_judge(const std::string& text_all) {
  auto ref = find_block(text_all, "Reference:");
  auto gen = find_block(text_all, "Generated:");
  if (!ref || !gen) return std::nullopt;
  return shared_long_tokens(*ref, *gen) >= 3 ? "1" : "0";
}

std::optional<std::string> component_block(const std::string& text_all) {
  size_t quote = text_all.rfind("listed under \"");
  if (quote == std::string::npos) return std::nullopt;
  size_t start = quote + 14;
  size_t end = text_all.find('"', start);
  if (end == std::string::npos) return std::nullopt;
  return find_block(text_all, text_all.substr(start, end - start) + ":");
}

std::optional<std::string> respond_design_reasons(const std::string& text_all) {
  auto block = component_block(text_all);
  if (!block) return std::nullopt;
  std::vector<std::string> items = bullet_items(*block);
  std::string out;
  for (size_t i = 0; i < items.size(); ++i) {
    out += "reason " + std::to_string(i + 1) + ": \"" + items[i] +
           "\" keeps the study population appropriate for the stated objective.\n";
  }
  if (out.empty()) out = "reason 1: the design follows the stated objective.\n";
  return out;
}

std::optional<std::string> respond_design_conversation(const std::string& text_all) {
  auto block = component_block(text_all);
  if (!block) return std::nullopt;
  auto setup = find_block(text_all, "Trial setup:");
  std::vector<std::string> items = bullet_items(*block);
  json convo = json::array();
  convo.push_back({{"role", "user"},
                   {"content", "I need help designing this trial.\n" + setup.value_or("")}});
  convo.push_back({{"role", "assistant"},
                   {"content", "Happy to help. Let us review the setup before drafting."}});
  convo.push_back({{"role", "user"}, {"content", "What should we settle first?"}});
  convo.push_back({{"role", "assistant"},
                   {"content", "First the study population, then each design item in turn."}});
  convo.push_back({{"role", "user"}, {"content", "Please outline the plan."}});
  convo.push_back({{"role", "assistant"},
                   {"content", "We will go through the design items one by one."}});
  for (size_t i = 0; i < items.size(); ++i) {
    convo.push_back({{"role", "user"},
                     {"content", "What is design item " + std::to_string(i + 1) + "?"}});
    convo.push_back({{"role", "assistant"},
                     {"content", items[i] + " — rationale: it supports the trial objective."}});
  }
  return convo.dump();
}

std::optional<std::string> respond_matching(const std::string& text_all) {
  auto labels_line = find_line_value(text_all, "State the final decision as one of: ");
  if (!labels_line) return std::nullopt;
  std::string line = *labels_line;
  if (!line.empty() && line.back() == '.') line.pop_back();
  std::vector<std::string> labels;
  for (size_t start = 0, pos = 0; pos != std::string::npos; start = pos + 2) {
    pos = line.find("; ", start);
    std::string l =
        text::trim(line.substr(start, pos == std::string::npos ? std::string::npos : pos - start));
    if (!l.empty()) labels.push_back(l);
  }
  if (labels.empty()) return std::nullopt;
  std::string middle = labels[labels.size() / 2];
  return "The note does not give enough detail to confirm each criterion. Final decision: " +
         middle + ".";
}

} // namespace

std::optional<std::string> cooperative_response(const ChatRequest& req) {
  std::string all = transcript_text(req);
  if (all.find("Respond with a JSON array of strings and nothing else") != std::string::npos) {
    if (all.find("Category: ") != std::string::npos) {
      if (auto r = respond_extraction(all)) return r;
    }
    if (all.find("Suggest additional keywords") != std::string::npos) {
      if (auto r = respond_expansion(all)) return r;
    }
  }
  if (all.find("Respond with the summary text only.") != std::string::npos) {
    if (auto r = respond_summary(all)) return r;
  }
  if (all.find("Answer with a single word: yes or no.") != std::string::npos) {
    if (auto r = respond_goal_judge(all)) return r;
  }
  if (all.find("Respond with exactly one label from the list.") != std::string::npos) {
    if (auto r = respond_conclusion_judge(all)) return r;
  }
  if (all.find("Respond with a single character: 1") != std::string::npos) {
    if (auto r = respond_relevance_judge(all)) return r;
  }
  if (all.find("Return the conversation as a JSON array") != std::string::npos) {
    if (auto r = respond_design_conversation(all)) return r;
  }
  if (all.find("write one line of the form \"reason") != std::string::npos) {
    if (auto r = respond_design_reasons(all)) return r;
  }
  if (all.find("State the final decision as one of: ") != std::string::npos) {
    if (auto r = respond_matching(all)) return r;
  }
  if (all.find("each with \"input\" (the user request) and \"query\"") != std::string::npos) {
    return std::string("[]"); // candidate generation comes from script rules
  }
  return std::nullopt;
}

std::string StubBackend::complete(const ChatRequest& req) {
  {
    std::lock_guard lock(mu_);
    recorded_.push_back(req);
  }
  return respond(req);
}

std::string StubBackend::respond(const ChatRequest& req) {
  if (!config_.sentinel_prefix.empty()) {
    return config_.sentinel_prefix + "_" + sha256_hex(req.cache_key_material()).substr(0, 12);
  }
  if (!config_.sequence.empty()) {
    std::lock_guard lock(mu_);
    if (sequence_pos_ >= config_.sequence.size()) {
      throw TransportError("stub sequence exhausted after " +
                           std::to_string(config_.sequence.size()) + " responses");
    }
    return config_.sequence[sequence_pos_++];
  }
  std::string target = last_user_text(req);
  for (const auto& [re, response] : compiled_) {
    std::smatch m;
    if (std::regex_search(target, m, re)) return expand_backrefs(response, m);
  }
  if (config_.cooperative) {
    if (auto r = cooperative_response(req)) return *r;
  }
  return config_.fallback;
}

} // namespace trialkit::gateway
