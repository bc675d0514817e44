#include "wavederiv/spectral.hpp"

#include <cmath>
#include <numbers>

#include "wavederiv/errors.hpp"
#include "wavederiv/fft.hpp"

namespace wavederiv {

FrequencyGrid frequency_grid(const Grid& grid) {
  const std::size_t n = grid.n;
  FrequencyGrid out;
  out.k.resize(n);
  out.nu.resize(n);
  out.nyquist_bin = n % 2 == 0 ? n / 2 : n;
  const double k_unit = 2.0 * std::numbers::pi / grid.period();
  for (std::size_t i = 0; i < n; ++i) {
    const double m = 2 * i < n ? static_cast<double>(i)
                               : static_cast<double>(i) - static_cast<double>(n);
    out.nu[i] = m;
    out.k[i] = m * k_unit;
  }
  return out;
}

Spectrum forward(const SampledSignal& signal) {
  Spectrum out{{signal.values().begin(), signal.values().end()}, signal.grid()};
  fft::transform(out.coefficients, fft::Direction::Forward);
  return out;
}

SampledSignal inverse(const Spectrum& spectrum) {
  std::vector<std::complex<double>> work = spectrum.coefficients;
  fft::transform(work, fft::Direction::Backward);
  const double scale = 1.0 / static_cast<double>(work.size());
  std::vector<double> values(work.size());
  for (std::size_t i = 0; i < work.size(); ++i) values[i] = work[i].real() * scale;
  return SampledSignal(spectrum.grid, std::move(values));
}

std::string_view to_string(FilterKind kind) {
  switch (kind) {
    case FilterKind::IdealLowPass:
      return "IdealLowPass";
    case FilterKind::GaussianLowPass:
      return "GaussianLowPass";
    case FilterKind::Differentiating:
      return "Differentiating";
    case FilterKind::DifferentiatingGaussian:
      return "DifferentiatingGaussian";
  }
  return "?";
}

bool is_differentiating(FilterKind kind) {
  return kind == FilterKind::Differentiating || kind == FilterKind::DifferentiatingGaussian;
}

std::complex<double> transfer(const SpectralFilter& filter, double k, double nu,
                              bool nyquist) {
  const double p = filter.param;
  switch (filter.kind) {
    case FilterKind::IdealLowPass:
      return std::abs(nu) <= p ? 1.0 : 0.0;
    case FilterKind::GaussianLowPass:
      return std::exp(-(nu / p) * (nu / p));
    case FilterKind::Differentiating:
      if (nyquist || std::abs(nu) > p) return 0.0;
      return {0.0, k};
    case FilterKind::DifferentiatingGaussian:
      if (nyquist) return 0.0;
      return {0.0, k * std::exp(-(nu / p) * (nu / p))};
  }
  return 0.0;
}

Spectrum apply_filter(const Spectrum& spectrum, const SpectralFilter& filter) {
  if (!(filter.param > 0.0) || !std::isfinite(filter.param)) {
    throw ParameterError("spectral filter parameter must be positive, got " +
                         std::to_string(filter.param));
  }
  const FrequencyGrid freq = frequency_grid(spectrum.grid);
  Spectrum out = spectrum;
  for (std::size_t i = 0; i < out.coefficients.size(); ++i) {
    out.coefficients[i] *= transfer(filter, freq.k[i], freq.nu[i], i == freq.nyquist_bin);
  }
  return out;
}

EndpointTrend endpoint_trend(const SampledSignal& signal) {
  const auto v = signal.values();
  return {v.front(), (v.back() - v.front()) / signal.grid().span()};
}

SampledSignal remove_trend(const SampledSignal& signal, const EndpointTrend& trend) {
  const auto v = signal.values();
  std::vector<double> out(v.size());
  const double dx = signal.grid().dx;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = v[i] - (trend.intercept + trend.slope * static_cast<double>(i) * dx);
  }
  return SampledSignal(signal.grid(), std::move(out));
}

SampledSignal add_trend(const SampledSignal& signal, const EndpointTrend& trend) {
  return remove_trend(signal, {-trend.intercept, -trend.slope});
}

}  // namespace wavederiv
