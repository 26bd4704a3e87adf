#pragma once

#include "corpus/document.hpp"

#include <regex>
#include <string>
#include <vector>

namespace trialkit::curation {

struct PiiPattern {
  std::string name;
  std::string regex;       // ECMAScript
  std::string placeholder; // e.g. "[EMAIL]"
};

/// Emails, phone numbers, URLs carrying personal handles, and contact-name
/// lead-ins. Configuration can replace or extend this set.
std::vector<PiiPattern> default_pii_patterns();

class PiiScrubber {
public:
  explicit PiiScrubber(std::vector<PiiPattern> patterns);

  std::string scrub_text(const std::string& s) const;

  /// Replaces matches in every free-text field and drops structured contact
  /// blocks from the raw payload.
  corpus::TrialDocument scrub(const corpus::TrialDocument& doc) const;

private:
  struct Compiled {
    std::regex re;
    std::string placeholder;
  };
  std::vector<Compiled> compiled_;
};

} // namespace trialkit::curation
