#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "wavederiv/cwt.hpp"
#include "wavederiv/grid.hpp"

namespace wavederiv {

// Two-column CSV "x,<name>" with 17 significant digits.
std::string signal_csv(const SampledSignal& signal, std::string_view value_name = "f");

// Reads a two-column CSV with a header line. The abscissae must be uniformly
// spaced (relative tolerance 1e-6 of the step); the grid is rebuilt from the
// first abscissa and the mean step.
SampledSignal parse_signal_csv(std::string_view text);

// One row per scale: the scale, then |W| at each grid position. The header
// is "scale,<x_0>,...,<x_{n-1}>".
std::string plane_csv(const WaveletPlane& plane);

std::string read_file(const std::filesystem::path& path);

// Writes to a sibling temporary file and renames it over `path`, so readers
// never see a partial file.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);

}  // namespace wavederiv
