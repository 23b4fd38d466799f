#include "ferrex/time.hpp"

#include <array>
#include <charconv>
#include <cstdio>

namespace ferrex {

std::int64_t days_from_civil(int y, unsigned m, unsigned d) {
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);             // [0, 399]
  const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;   // [0, 365]
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;            // [0, 146096]
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, int& year, unsigned& month, unsigned& day) {
  z += 719468;
  const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
  const unsigned doe = static_cast<unsigned>(z - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  const std::int64_t y = static_cast<std::int64_t>(yoe) + era * 400;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  day = doy - (153 * mp + 2) / 5 + 1;
  month = mp + (mp < 10 ? 3 : -9);
  year = static_cast<int>(y + (month <= 2));
}

bool is_valid_civil(int year, unsigned month, unsigned day) {
  if (month < 1 || month > 12 || day < 1) return false;
  static constexpr std::array<unsigned, 12> dim = {31, 28, 31, 30, 31, 30,
                                                   31, 31, 30, 31, 30, 31};
  unsigned max_day = dim[month - 1];
  const bool leap = (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
  if (month == 2 && leap) max_day = 29;
  return day <= max_day;
}

namespace {

bool parse_uint(std::string_view s, size_t pos, size_t len, unsigned& out) {
  if (pos + len > s.size()) return false;
  unsigned v = 0;
  for (size_t i = pos; i < pos + len; ++i) {
    char c = s[i];
    if (c < '0' || c > '9') return false;
    v = v * 10 + static_cast<unsigned>(c - '0');
  }
  out = v;
  return true;
}

// Parses the "YYYY-MM-DD" prefix; returns days since epoch.
bool parse_ymd(std::string_view s, std::int64_t& days_out) {
  unsigned y, m, d;
  if (s.size() < 10) return false;
  if (!parse_uint(s, 0, 4, y) || s[4] != '-' || !parse_uint(s, 5, 2, m) ||
      s[7] != '-' || !parse_uint(s, 8, 2, d))
    return false;
  if (!is_valid_civil(static_cast<int>(y), m, d)) return false;
  days_out = days_from_civil(static_cast<int>(y), m, d);
  return true;
}

}  // namespace

std::optional<UtcTime> parse_date(std::string_view s) {
  std::int64_t days;
  if (s.size() != 10 || !parse_ymd(s, days)) return std::nullopt;
  return UtcTime{days * kSecondsPerDay};
}

std::optional<UtcTime> parse_timestamp(std::string_view s) {
  std::int64_t days;
  if (s.size() < 20 || !parse_ymd(s, days)) return std::nullopt;
  if (s[10] != 'T' && s[10] != ' ') return std::nullopt;
  unsigned hh, mm, ss;
  if (!parse_uint(s, 11, 2, hh) || s[13] != ':' || !parse_uint(s, 14, 2, mm) ||
      s[16] != ':' || !parse_uint(s, 17, 2, ss))
    return std::nullopt;
  if (hh > 23 || mm > 59 || ss > 60) return std::nullopt;
  if (ss == 60) ss = 59;  // fold leap seconds
  size_t pos = 19;
  if (pos < s.size() && s[pos] == '.') {
    ++pos;
    size_t digits = 0;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos, ++digits;
    if (digits == 0) return std::nullopt;
  }
  if (pos >= s.size()) return std::nullopt;
  std::int64_t offset = 0;
  if (s[pos] == 'Z' || s[pos] == 'z') {
    if (pos + 1 != s.size()) return std::nullopt;
  } else if (s[pos] == '+' || s[pos] == '-') {
    unsigned oh, om;
    if (pos + 6 != s.size() || !parse_uint(s, pos + 1, 2, oh) ||
        s[pos + 3] != ':' || !parse_uint(s, pos + 4, 2, om))
      return std::nullopt;
    if (oh > 23 || om > 59) return std::nullopt;
    offset = static_cast<std::int64_t>(oh) * 3600 + om * 60;
    if (s[pos] == '-') offset = -offset;
  } else {
    return std::nullopt;
  }
  const std::int64_t local = days * kSecondsPerDay + hh * 3600 + mm * 60 + ss;
  return UtcTime{local - offset};
}

std::string format_date(UtcTime t) {
  std::int64_t z = t.sec / kSecondsPerDay;
  if (t.sec % kSecondsPerDay < 0) --z;
  int y;
  unsigned m, d;
  civil_from_days(z, y, m, d);
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", y, m, d);
  return buf;
}

std::string format_timestamp(UtcTime t) {
  std::int64_t z = t.sec / kSecondsPerDay;
  std::int64_t rem = t.sec % kSecondsPerDay;
  if (rem < 0) {
    rem += kSecondsPerDay;
    --z;
  }
  int y;
  unsigned m, d;
  civil_from_days(z, y, m, d);
  const unsigned hh = static_cast<unsigned>(rem / 3600);
  const unsigned mm = static_cast<unsigned>((rem % 3600) / 60);
  const unsigned ss = static_cast<unsigned>(rem % 60);
  char buf[24];
  std::snprintf(buf, sizeof(buf), "%04d-%02u-%02uT%02u:%02u:%02uZ", y, m, d, hh, mm, ss);
  return buf;
}

}  // namespace ferrex
