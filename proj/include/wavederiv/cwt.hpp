#pragma once

#include <complex>
#include <span>
#include <vector>

#include "wavederiv/grid.hpp"
#include "wavederiv/wavelet.hpp"

namespace wavederiv {

// Log-spaced scales a_j = a_max * 2^(-j/voices), largest first, down to the
// last one not below a_min. a_min() reports the smallest scale actually held.
class ScaleGrid {
 public:
  ScaleGrid(double a_min, double a_max, int voices);

  std::span<const double> scales() const { return scales_; }
  std::size_t size() const { return scales_.size(); }
  double operator[](std::size_t j) const { return scales_[j]; }
  double a_max() const { return scales_.front(); }
  double a_min() const { return scales_.back(); }
  int voices() const { return voices_; }
  // Width of the log cell around scale j, a_j ln 2 / voices.
  double cell_width(std::size_t j) const;

 private:
  std::vector<double> scales_;
  int voices_;
};

// Even reflection about the end samples (period 2(n-1)), or plain
// periodic wrap (period n).
enum class Boundary { Reflect, Periodic };

// Wavelet coefficients over scales x positions. Each row covers one full
// period of the extended signal: columns [0, n) are the grid positions, the
// remaining columns (Reflect only) hold the mirrored half, which synthesis
// needs near the boundaries.
class WaveletPlane {
 public:
  WaveletPlane(Grid grid, ScaleGrid scales, Boundary boundary);

  const Grid& grid() const { return grid_; }
  const ScaleGrid& scale_grid() const { return scales_; }
  Boundary boundary() const { return boundary_; }
  std::size_t period() const { return period_; }

  std::complex<double>& at(std::size_t scale, std::size_t position) {
    return values_[scale * period_ + position];
  }
  std::complex<double> at(std::size_t scale, std::size_t position) const {
    return values_[scale * period_ + position];
  }
  std::span<std::complex<double>> row(std::size_t scale) {
    return {values_.data() + scale * period_, period_};
  }
  std::span<const std::complex<double>> row(std::size_t scale) const {
    return {values_.data() + scale * period_, period_};
  }

 private:
  Grid grid_;
  ScaleGrid scales_;
  Boundary boundary_;
  std::size_t period_;
  std::vector<std::complex<double>> values_;
};

std::size_t extension_period(std::size_t n, Boundary boundary);

// W[j][i] = (1/a_j) sum_m conj(chi((x_m - b_i)/a_j)) f_m dx over the extended
// signal, i.e. the analysis of f by the family -d/dx psi_{a,b}, which equals
// the psi-analysis of f'. Requires the smallest scale >= 2 dx.
WaveletPlane analyze(const SampledSignal& signal, const Wavelet& chi, const ScaleGrid& scales,
                     Boundary boundary = Boundary::Reflect);

// Minimal scale for synthesis, constant or a_min(x) = 1 / (slope x + c).
struct ScaleCutoff {
  enum class Kind { Constant, Linear };
  Kind kind = Kind::Constant;
  double a_min = 0.0;
  double slope = 0.0;
  double c = 0.0;

  static ScaleCutoff constant(double a_min) { return {Kind::Constant, a_min, 0.0, 0.0}; }
  static ScaleCutoff linear(double slope, double c) { return {Kind::Linear, 0.0, slope, c}; }

  double at(double x) const { return kind == Kind::Constant ? a_min : 1.0 / (slope * x + c); }
};

// Per-scale synthesis terms, before the cutoff is applied:
// term[j][i] = Re( (da_j / a_j^3) / K * sum_m psi((x_i - b_m)/a_j) W[j][m] dx ).
class ScaleContributions {
 public:
  ScaleContributions(Grid grid, ScaleGrid scales);

  const Grid& grid() const { return grid_; }
  const ScaleGrid& scale_grid() const { return scales_; }
  std::span<double> row(std::size_t j) { return {values_.data() + j * grid_.n, grid_.n}; }
  std::span<const double> row(std::size_t j) const {
    return {values_.data() + j * grid_.n, grid_.n};
  }

 private:
  Grid grid_;
  ScaleGrid scales_;
  std::vector<double> values_;
};

ScaleContributions synthesis_contributions(const WaveletPlane& plane, const Wavelet& psi,
                                           double normalization);

// Sums the terms with a_j >= a_min(x_i) at every position. Throws
// ParameterError naming the position if the cutoff leaves no scale there.
SampledSignal accumulate(const ScaleContributions& terms, const ScaleCutoff& cutoff);

// accumulate(synthesis_contributions(plane, psi, normalization), cutoff).
SampledSignal synthesize_derivative(const WaveletPlane& plane, const Wavelet& psi,
                                    double normalization, const ScaleCutoff& cutoff);

// Half-width of the region near each end where synthesis feels the boundary.
double cone_of_influence(const ScaleGrid& scales, const Wavelet& wavelet);

}  // namespace wavederiv
