#include "wavederiv/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <system_error>
#include <vector>

#include "wavederiv/errors.hpp"
#include "wavederiv/keyvalue.hpp"

namespace wavederiv {

std::string signal_csv(const SampledSignal& signal, std::string_view value_name) {
  std::string out = "x," + std::string(value_name) + "\n";
  const Grid& grid = signal.grid();
  for (std::size_t i = 0; i < signal.size(); ++i) {
    out += format_real(grid.x(i));
    out += ',';
    out += format_real(signal[i]);
    out += '\n';
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

SampledSignal parse_signal_csv(std::string_view text) {
  std::vector<double> xs;
  std::vector<double> fs;
  bool header = true;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const std::string_view line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.empty()) continue;
    if (header) {
      header = false;
      continue;
    }
    const auto comma = line.find(',');
    if (comma == std::string_view::npos || line.find(',', comma + 1) != std::string_view::npos) {
      throw SpecError("line " + std::to_string(line_no) + ": expected two columns");
    }
    try {
      xs.push_back(parse_real(trim(line.substr(0, comma))));
      fs.push_back(parse_real(trim(line.substr(comma + 1))));
    } catch (const SpecError& e) {
      throw SpecError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (xs.size() < 2) throw SizeError("signal file holds fewer than 2 samples");
  const double dx = (xs.back() - xs.front()) / static_cast<double>(xs.size() - 1);
  if (!(dx > 0.0)) throw SpecError("abscissae must increase");
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (std::abs((xs[i] - xs[i - 1]) - dx) > 1e-6 * dx) {
      throw SpecError("abscissae are not uniformly spaced near x = " + format_real(xs[i]));
    }
  }
  return SampledSignal(Grid(xs.front(), dx, xs.size()), std::move(fs));
}

std::string plane_csv(const WaveletPlane& plane) {
  const Grid& grid = plane.grid();
  std::string out = "scale";
  for (std::size_t i = 0; i < grid.n; ++i) out += "," + format_real(grid.x(i));
  out += '\n';
  const ScaleGrid& scales = plane.scale_grid();
  for (std::size_t j = 0; j < scales.size(); ++j) {
    out += format_real(scales[j]);
    for (std::size_t i = 0; i < grid.n; ++i) out += "," + format_real(std::abs(plane.at(j, i)));
    out += '\n';
  }
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file_atomic(const std::filesystem::path& path, std::string_view contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write '" + tmp.string() + "'");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.close();
    if (!out) {
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      throw Error("failed writing '" + tmp.string() + "'");
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error("cannot move output into place at '" + path.string() + "'");
  }
}

}  // namespace wavederiv
