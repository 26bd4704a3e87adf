#include "bench/patient.hpp"

#include "util/errors.hpp"
#include "util/text.hpp"

namespace trialkit::bench {

std::string scheme_name(Scheme s) { return s == Scheme::SIGIR ? "SIGIR" : "TREC2021"; }

Scheme scheme_from(const std::string& name) {
  if (name == "SIGIR") return Scheme::SIGIR;
  if (name == "TREC2021") return Scheme::TREC2021;
  throw ValidationError("unknown matching scheme: " + name);
}

const std::vector<std::string>& scheme_labels(Scheme s) {
  static const std::vector<std::string> sigir = {
      "Would not refer", "Would consider referring", "Highly likely to refer"};
  static const std::vector<std::string> trec = {"Excluded", "Not relevant", "Eligible"};
  return s == Scheme::SIGIR ? sigir : trec;
}

void PatientCase::validate() const {
  if (patient_id.empty()) throw ValidationError("patient case has no patient_id");
  if (gold < 0 || gold > 2) {
    throw ValidationError("gold label outside the scheme's class set: " + std::to_string(gold));
  }
  if (split != "train" && split != "dev" && split != "test") {
    throw ValidationError("patient case split must be train/dev/test");
  }
}

json PatientCase::to_json() const {
  return json{{"patient_id", patient_id}, {"note", note},       {"trial_id", trial_id},
              {"criteria", criteria},     {"gold", gold},       {"scheme", scheme_name(scheme)},
              {"split", split}};
}

PatientCase PatientCase::from_json(const json& j) {
  PatientCase c;
  c.patient_id = j.at("patient_id").get<std::string>();
  c.note = j.at("note").get<std::string>();
  c.trial_id = j.value("trial_id", std::string());
  c.criteria = j.at("criteria").get<std::string>();
  c.gold = j.at("gold").get<int>();
  c.scheme = scheme_from(j.at("scheme").get<std::string>());
  c.split = j.value("split", std::string("test"));
  c.validate();
  return c;
}

std::vector<PatientCase> read_cases(const std::filesystem::path& path) {
  std::vector<PatientCase> out;
  for (const auto& j : read_jsonl(path)) out.push_back(PatientCase::from_json(j));
  return out;
}

namespace {

bool word_boundary(const std::string& s, size_t pos, size_t len) {
  auto alnum = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; };
  if (pos > 0 && alnum(s[pos - 1])) return false;
  size_t end = pos + len;
  if (end < s.size() && alnum(s[end])) return false;
  return true;
}

} // namespace

std::optional<int> parse_scheme_label(const std::string& response, Scheme scheme) {
  std::string lowered = text::lower_ascii(response);
  const auto& labels = scheme_labels(scheme);
  std::optional<int> best;
  size_t best_pos = 0;
  size_t best_len = 0;
  for (size_t cls = 0; cls < labels.size(); ++cls) {
    std::string needle = text::lower_ascii(labels[cls]);
    size_t last = std::string::npos;
    size_t pos = 0;
    while ((pos = lowered.find(needle, pos)) != std::string::npos) {
      if (word_boundary(lowered, pos, needle.size())) last = pos;
      ++pos;
    }
    if (last == std::string::npos) continue;
    if (!best || last > best_pos || (last == best_pos && needle.size() > best_len)) {
      best = static_cast<int>(cls);
      best_pos = last;
      best_len = needle.size();
    }
  }
  return best;
}

} // namespace trialkit::bench
