#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wavederiv {

// Flat "key=value" text: pairs separated by ';' or newlines, '#' starts a
// comment running to end of line, whitespace around keys and values ignored.
std::vector<std::pair<std::string, std::string>> parse_key_values(std::string_view text);

// Shortest round-trip is not needed here; 17 significant digits always
// reproduce the double.
std::string format_real(double value);
double parse_real(std::string_view text);

}  // namespace wavederiv
