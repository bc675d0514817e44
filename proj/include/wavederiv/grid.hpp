#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace wavederiv {

// Uniform sampling grid: abscissa i is x0 + i*dx.
struct Grid {
  double x0 = 0.0;
  double dx = 1.0;
  std::size_t n = 2;

  Grid() = default;
  Grid(double x0, double dx, std::size_t n);

  double x(std::size_t i) const { return x0 + static_cast<double>(i) * dx; }
  double x_last() const { return x(n - 1); }
  // Length of the sampled interval, (n - 1) * dx.
  double span() const { return static_cast<double>(n - 1) * dx; }
  // DFT period n * dx.
  double period() const { return static_cast<double>(n) * dx; }

  std::vector<double> abscissae() const;

  // Grid of n points covering [a, b] inclusive.
  static Grid covering(double a, double b, std::size_t n);

  friend bool operator==(const Grid&, const Grid&) = default;
};

// Sampled values on a uniform grid. Values are finite and grid.n long.
class SampledSignal {
 public:
  SampledSignal() = default;
  SampledSignal(Grid grid, std::vector<double> values);

  const Grid& grid() const { return grid_; }
  std::span<const double> values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }

  // Moves the values out; the signal is left empty.
  std::vector<double> release() && { return std::move(values_); }

  friend bool operator==(const SampledSignal&, const SampledSignal&) = default;

 private:
  Grid grid_;
  std::vector<double> values_;
};

}  // namespace wavederiv
