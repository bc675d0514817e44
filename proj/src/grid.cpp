#include "wavederiv/grid.hpp"

#include <cmath>
#include <string>

#include "wavederiv/errors.hpp"

namespace wavederiv {

Grid::Grid(double x0_, double dx_, std::size_t n_) : x0(x0_), dx(dx_), n(n_) {
  if (!(dx > 0.0) || !std::isfinite(dx) || !std::isfinite(x0)) {
    throw ParameterError("grid step must be finite and positive");
  }
  if (n < 2) throw SizeError("grid needs at least 2 samples");
}

std::vector<double> Grid::abscissae() const {
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = x(i);
  return out;
}

Grid Grid::covering(double a, double b, std::size_t n) {
  if (n < 2) throw SizeError("grid needs at least 2 samples");
  return Grid(a, (b - a) / static_cast<double>(n - 1), n);
}

SampledSignal::SampledSignal(Grid grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid_.n) {
    throw SizeError("signal has " + std::to_string(values_.size()) +
                    " values for a grid of " + std::to_string(grid_.n));
  }
  for (double v : values_) {
    if (!std::isfinite(v)) throw ParameterError("signal values must be finite");
  }
}

}  // namespace wavederiv
