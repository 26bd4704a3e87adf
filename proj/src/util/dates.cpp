#include "util/dates.hpp"

#include <chrono>
#include <cstdio>

namespace trialkit {

std::string Date::iso() const {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", year, month, day);
  return buf;
}

namespace {

bool parse_int(std::string_view s, int& out) {
  if (s.empty()) return false;
  int v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
    v = v * 10 + (c - '0');
  }
  out = v;
  return true;
}

} // namespace

std::optional<Date> Date::parse(std::string_view s) {
  int y = 0, m = 0, d = 1;
  if (s.size() == 10 && s[4] == '-' && s[7] == '-') {
    if (!parse_int(s.substr(0, 4), y) || !parse_int(s.substr(5, 2), m) ||
        !parse_int(s.substr(8, 2), d)) {
      return std::nullopt;
    }
  } else if (s.size() == 7 && s[4] == '-') {
    if (!parse_int(s.substr(0, 4), y) || !parse_int(s.substr(5, 2), m)) return std::nullopt;
  } else {
    return std::nullopt;
  }
  std::chrono::year_month_day ymd{std::chrono::year{y}, std::chrono::month{unsigned(m)},
                                  std::chrono::day{unsigned(d)}};
  if (!ymd.ok()) return std::nullopt;
  return Date{y, m, d};
}

} // namespace trialkit
