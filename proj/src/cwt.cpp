#include "wavederiv/cwt.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "wavederiv/errors.hpp"
#include "wavederiv/fft.hpp"

namespace wavederiv {

namespace {

using cplx = std::complex<double>;

// Relative slack so that a cutoff equal to a lattice scale keeps that scale.
constexpr double kScaleSlack = 1e-12;

std::size_t wrap(long index, std::size_t period) {
  const long p = static_cast<long>(period);
  long r = index % p;
  if (r < 0) r += p;
  return static_cast<std::size_t>(r);
}

std::vector<cplx> extend(const SampledSignal& signal, std::size_t period) {
  const auto v = signal.values();
  std::vector<cplx> out(period);
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < period; ++i) out[i] = i < n ? v[i] : v[period - i];
  return out;
}

// Periodized samples of scale(x) = weight * w(sign * m dx / a) at offsets
// m in [-D, D], laid out as a length-period circular kernel.
std::vector<cplx> periodized_kernel(const Wavelet& w, double a, double dx, std::size_t period,
                                    bool conjugate, bool reversed, double weight) {
  std::vector<cplx> kernel(period, 0.0);
  const auto reach = static_cast<long>(std::ceil(w.support_radius() * a / dx));
  for (long m = -reach; m <= reach; ++m) {
    cplx value = w(static_cast<double>(m) * dx / a);
    if (conjugate) value = std::conj(value);
    kernel[wrap(reversed ? -m : m, period)] += weight * value;
  }
  return kernel;
}

}  // namespace

ScaleGrid::ScaleGrid(double a_min, double a_max, int voices) : voices_(voices) {
  if (voices < 1) throw ParameterError("voices per octave must be >= 1");
  if (!(a_min > 0.0) || !(a_max > a_min) || !std::isfinite(a_max)) {
    throw ParameterError("scale grid needs a_max > a_min > 0 (got a_min = " +
                         std::to_string(a_min) + ", a_max = " + std::to_string(a_max) + ")");
  }
  for (int j = 0;; ++j) {
    const double a = a_max * std::exp2(-static_cast<double>(j) / voices);
    if (a < a_min * (1.0 - kScaleSlack)) break;
    scales_.push_back(a);
  }
}

double ScaleGrid::cell_width(std::size_t j) const {
  return scales_[j] * std::numbers::ln2 / static_cast<double>(voices_);
}

std::size_t extension_period(std::size_t n, Boundary boundary) {
  return boundary == Boundary::Reflect ? 2 * (n - 1) : n;
}

WaveletPlane::WaveletPlane(Grid grid, ScaleGrid scales, Boundary boundary)
    : grid_(grid),
      scales_(std::move(scales)),
      boundary_(boundary),
      period_(extension_period(grid.n, boundary)),
      values_(scales_.size() * period_, 0.0) {}

WaveletPlane analyze(const SampledSignal& signal, const Wavelet& chi, const ScaleGrid& scales,
                     Boundary boundary) {
  const Grid& grid = signal.grid();
  if (scales.a_min() < 2.0 * grid.dx * (1.0 - kScaleSlack)) {
    throw ParameterError("smallest scale " + std::to_string(scales.a_min()) +
                         " is below the resolvable limit 2 dx = " + std::to_string(2.0 * grid.dx));
  }
  WaveletPlane plane(grid, scales, boundary);
  const std::size_t period = plane.period();
  std::vector<cplx> data = extend(signal, period);
  fft::transform(data, fft::Direction::Forward);

  const double inv_period = 1.0 / static_cast<double>(period);
  for (std::size_t j = 0; j < scales.size(); ++j) {
    const double a = scales[j];
    // W[i] = sum_d h[d] f[i + d] with h[d] = conj(chi(d dx / a)) dx / a,
    // a circular convolution with the reversed kernel.
    auto kernel = periodized_kernel(chi, a, grid.dx, period, true, true, grid.dx / a);
    fft::transform(kernel, fft::Direction::Forward);
    auto out = plane.row(j);
    for (std::size_t i = 0; i < period; ++i) out[i] = kernel[i] * data[i];
    fft::transform(out, fft::Direction::Backward);
    for (auto& v : out) v *= inv_period;
  }
  return plane;
}

ScaleContributions::ScaleContributions(Grid grid, ScaleGrid scales)
    : grid_(grid), scales_(std::move(scales)), values_(scales_.size() * grid_.n, 0.0) {}

ScaleContributions synthesis_contributions(const WaveletPlane& plane, const Wavelet& psi,
                                           double normalization) {
  if (!(normalization > 0.0)) throw ParameterError("normalization constant must be positive");
  const Grid& grid = plane.grid();
  const ScaleGrid& scales = plane.scale_grid();
  const std::size_t period = plane.period();
  ScaleContributions terms(grid, scales);
  const double inv_period = 1.0 / static_cast<double>(period);

  std::vector<cplx> work(period);
  for (std::size_t j = 0; j < scales.size(); ++j) {
    const double a = scales[j];
    // s[i] = sum_e psi(e dx / a) dx W[i - e]
    auto kernel = periodized_kernel(psi, a, grid.dx, period, false, false, grid.dx);
    fft::transform(kernel, fft::Direction::Forward);
    const auto row = plane.row(j);
    std::copy(row.begin(), row.end(), work.begin());
    fft::transform(work, fft::Direction::Forward);
    for (std::size_t i = 0; i < period; ++i) work[i] *= kernel[i];
    fft::transform(work, fft::Direction::Backward);

    const double weight = scales.cell_width(j) / (a * a * a) / normalization * inv_period;
    auto out = terms.row(j);
    for (std::size_t i = 0; i < grid.n; ++i) out[i] = work[i].real() * weight;
  }
  return terms;
}

SampledSignal accumulate(const ScaleContributions& terms, const ScaleCutoff& cutoff) {
  const Grid& grid = terms.grid();
  const ScaleGrid& scales = terms.scale_grid();
  std::vector<double> out(grid.n, 0.0);
  for (std::size_t i = 0; i < grid.n; ++i) {
    const double a_cut = cutoff.at(grid.x(i));
    if (!(a_cut > 0.0) || !std::isfinite(a_cut)) {
      throw ParameterError("scale cutoff is not positive at x = " + std::to_string(grid.x(i)));
    }
    const double threshold = a_cut * (1.0 - kScaleSlack);
    if (scales[0] < threshold) {
      throw ParameterError("scale cutoff " + std::to_string(a_cut) + " excludes every scale at x = " +
                           std::to_string(grid.x(i)) + " (position " + std::to_string(i) + ")");
    }
    double acc = 0.0;
    for (std::size_t j = 0; j < scales.size() && scales[j] >= threshold; ++j) {
      acc += terms.row(j)[i];
    }
    out[i] = acc;
  }
  return SampledSignal(grid, std::move(out));
}

SampledSignal synthesize_derivative(const WaveletPlane& plane, const Wavelet& psi,
                                    double normalization, const ScaleCutoff& cutoff) {
  return accumulate(synthesis_contributions(plane, psi, normalization), cutoff);
}

double cone_of_influence(const ScaleGrid& scales, const Wavelet& wavelet) {
  return scales.a_max() * wavelet.support_radius();
}

}  // namespace wavederiv
