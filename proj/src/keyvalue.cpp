#include "wavederiv/keyvalue.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

#include "wavederiv/errors.hpp"

namespace wavederiv {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

std::vector<std::pair<std::string, std::string>> parse_key_values(std::string_view text) {
  std::vector<std::pair<std::string, std::string>> out;
  while (!text.empty()) {
    auto line_end = text.find('\n');
    std::string_view line = text.substr(0, line_end);
    text = line_end == std::string_view::npos ? std::string_view{} : text.substr(line_end + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    while (!line.empty()) {
      auto sep = line.find(';');
      std::string_view item = trim(line.substr(0, sep));
      line = sep == std::string_view::npos ? std::string_view{} : line.substr(sep + 1);
      if (item.empty()) continue;
      auto eq = item.find('=');
      if (eq == std::string_view::npos) {
        throw SpecError("expected key=value, got '" + std::string(item) + "'");
      }
      std::string_view key = trim(item.substr(0, eq));
      if (key.empty()) throw SpecError("empty key in '" + std::string(item) + "'");
      out.emplace_back(std::string(key), std::string(trim(item.substr(eq + 1))));
    }
  }
  return out;
}

std::string format_real(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value == 0.0 ? 0.0 : value);
  return buf;
}

double parse_real(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size() || !std::isfinite(value)) {
    throw SpecError("not a finite number: '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace wavederiv
