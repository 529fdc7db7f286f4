#pragma once

// Internal locale-independent number/text helpers shared by the CSV layer
// and the report renderers.

#include <charconv>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gvacast::detail {

// Shortest decimal form that round-trips to the same double.
inline std::string format_full(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

// Fixed-point with `frac_digits` decimals, rounded half away from zero via
// integer scaling (no float-printing tie ambiguity). Magnitudes stay far
// below 2^63 / 10^frac_digits for every value this project prints.
inline std::string format_fixed(double v, int frac_digits) {
  double scale = 1.0;
  for (int i = 0; i < frac_digits; ++i) scale *= 10.0;
  long long n = std::llround(v * scale);
  std::string digits = std::to_string(n < 0 ? -n : n);
  if (frac_digits > 0) {
    if (digits.size() <= static_cast<std::size_t>(frac_digits))
      digits.insert(0, static_cast<std::size_t>(frac_digits) + 1 - digits.size(), '0');
    digits.insert(digits.size() - static_cast<std::size_t>(frac_digits), 1, '.');
  }
  return (n < 0 ? "-" : "") + digits;
}

// "2.8%" / "-25%" style percent cell from a growth fraction. llround's
// ties-away-from-zero gives the half-away display rule; an exact zero never
// carries a sign because the scaled value is an integer.
inline std::string format_percent(double growth_fraction, int decimals) {
  return format_fixed(growth_fraction * 100.0, decimals) + "%";
}

// Full-string double parse; rejects trailing junk, infinities and NaN.
inline std::optional<double> parse_double(std::string_view text) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || !std::isfinite(v)) return std::nullopt;
  return v;
}

inline std::optional<long> parse_long(std::string_view text) {
  long v = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) return std::nullopt;
  return v;
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

// Splits one CSV line on commas (the formats here never quote or embed
// commas) and trims surrounding blanks from each field.
inline std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      out.push_back(trim(line.substr(start)));
      return out;
    }
    out.push_back(trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
}

}  // namespace gvacast::detail
