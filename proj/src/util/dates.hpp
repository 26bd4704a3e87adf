#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace trialkit {

/// Calendar date. Only valid dates can be constructed through parse().
struct Date {
  int year = 0;
  int month = 0;
  int day = 0;

  auto operator<=>(const Date&) const = default;

  std::string iso() const;

  /// Accepts "YYYY-MM-DD" and "YYYY-MM" (day defaults to 01). Rejects
  /// impossible calendar dates (2023-02-29 and the like).
  static std::optional<Date> parse(std::string_view s);
};

} // namespace trialkit
