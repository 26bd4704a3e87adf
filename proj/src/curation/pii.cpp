#include "curation/pii.hpp"

#include "util/errors.hpp"
#include "util/text.hpp"

namespace trialkit::curation {

std::vector<PiiPattern> default_pii_patterns() {
  return {
      {"email", R"([A-Za-z0-9._%+-]+@[A-Za-z0-9.-]+\.[A-Za-z]{2,})", "[EMAIL]"},
      // international or US-style numbers with at least 9 digits total
      {"phone", R"((\+?\d{1,3}[-. (]{1,2})?\d{3}[-. )]{1,2}\d{3,4}[-. ]?\d{3,4})", "[PHONE]"},
      {"handle_url", R"(https?://[^\s]*(?:~|/user/|/people/|/profile/)[^\s]+)", "[URL]"},
      {"contact_line", R"((?:[Cc]ontact|[Ii]nvestigator)\s*:\s*(?:Dr\.?\s+)?[A-Z][a-z]+(?:\s+[A-Z][a-z]+)+)",
       "[CONTACT]"},
  };
}

PiiScrubber::PiiScrubber(std::vector<PiiPattern> patterns) {
  if (patterns.empty()) throw ValidationError("PII pattern set must not be empty");
  for (auto& p : patterns) {
    try {
      compiled_.push_back({std::regex(p.regex, std::regex::ECMAScript), p.placeholder});
    } catch (const std::regex_error& e) {
      throw ConfigError("invalid PII regex '" + p.name + "': " + e.what());
    }
  }
}

std::string PiiScrubber::scrub_text(const std::string& s) const {
  std::string out = s;
  for (const auto& c : compiled_) {
    out = std::regex_replace(out, c.re, c.placeholder);
  }
  return out;
}

namespace {

// structured contact blocks carried in raw registry payloads
bool is_contact_key(const std::string& key) {
  std::string k = text::lower_ascii(key);
  return k.find("contact") != std::string::npos || k.find("official") != std::string::npos ||
         k == "overallofficials" || k == "responsibleparty";
}

void drop_contact_fields(json& node) {
  if (node.is_object()) {
    for (auto it = node.begin(); it != node.end();) {
      if (is_contact_key(it.key())) {
        it = node.erase(it);
      } else {
        drop_contact_fields(it.value());
        ++it;
      }
    }
  } else if (node.is_array()) {
    for (auto& item : node) drop_contact_fields(item);
  }
}

} // namespace

corpus::TrialDocument PiiScrubber::scrub(const corpus::TrialDocument& doc) const {
  corpus::TrialDocument out = doc;
  out.public_title = scrub_text(doc.public_title);
  out.scientific_title = scrub_text(doc.scientific_title);
  out.brief_summary = scrub_text(doc.brief_summary);
  out.detailed_description = scrub_text(doc.detailed_description);
  for (auto& c : out.eligibility.inclusion) c = scrub_text(c);
  for (auto& c : out.eligibility.exclusion) c = scrub_text(c);
  for (auto& a : out.arms) a.description = scrub_text(a.description);
  for (auto& m : out.outcome_measures.primary) m = scrub_text(m);
  for (auto& m : out.outcome_measures.secondary) m = scrub_text(m);
  drop_contact_fields(out.raw);
  return out;
}

} // namespace trialkit::curation
