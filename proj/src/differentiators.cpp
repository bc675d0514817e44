#include "wavederiv/differentiators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "wavederiv/errors.hpp"

namespace wavederiv {

namespace {

std::vector<double> window_weights(Window window, double width, double dx) {
  if (!(width >= dx * (1.0 - 1e-12)) || !std::isfinite(width)) {
    throw ParameterError("window width " + std::to_string(width) + " is below the step " +
                         std::to_string(dx));
  }
  std::vector<double> w;
  if (window == Window::Rect) {
    auto m = static_cast<std::size_t>(std::lround(width / dx));
    if (m % 2 == 0) ++m;
    w.assign(m, 1.0 / static_cast<double>(m));
    return w;
  }
  const double sigma = width / (2.0 * std::sqrt(2.0 * std::numbers::ln2)) / dx;
  const auto half = static_cast<long>(std::ceil(4.0 * sigma));
  double total = 0.0;
  for (long k = -half; k <= half; ++k) {
    const double t = static_cast<double>(k) / sigma;
    w.push_back(std::exp(-0.5 * t * t));
    total += w.back();
  }
  for (auto& v : w) v /= total;
  return w;
}

bool is_smoothing(FilterKind kind) { return !is_differentiating(kind); }

SampledSignal with_values(const Grid& grid, std::vector<double> values) {
  return SampledSignal(grid, std::move(values));
}

}  // namespace

SampledSignal naive_fd(const SampledSignal& signal) {
  const std::size_t n = signal.size();
  if (n < 2) throw SizeError("finite difference needs at least 2 samples");
  const double dx = signal.grid().dx;
  const auto f = signal.values();
  std::vector<double> g(n);
  g[0] = (f[1] - f[0]) / dx;
  g[n - 1] = (f[n - 1] - f[n - 2]) / dx;
  for (std::size_t i = 1; i + 1 < n; ++i) g[i] = (f[i + 1] - f[i - 1]) / (2.0 * dx);
  return with_values(signal.grid(), std::move(g));
}

SampledSignal smooth_window(const SampledSignal& signal, Window window, double width) {
  const Grid& grid = signal.grid();
  const auto w = window_weights(window, width, grid.dx);
  const long half = static_cast<long>(w.size() / 2);
  const long n = static_cast<long>(signal.size());
  if (half > n - 1) {
    throw ParameterError("window of width " + std::to_string(width) +
                         " is wider than the signal");
  }
  const auto f = signal.values();
  auto ext = [&](long i) {
    if (i < 0) return 2.0 * f[0] - f[static_cast<std::size_t>(-i)];
    if (i >= n) return 2.0 * f[static_cast<std::size_t>(n - 1)] - f[static_cast<std::size_t>(2 * (n - 1) - i)];
    return f[static_cast<std::size_t>(i)];
  };
  std::vector<double> out(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) {
    double acc = 0.0;
    for (long k = -half; k <= half; ++k) acc += w[static_cast<std::size_t>(k + half)] * ext(i + k);
    out[static_cast<std::size_t>(i)] = acc;
  }
  return with_values(grid, std::move(out));
}

SampledSignal smooth_window_fd(const SampledSignal& signal, Window window, double width) {
  return naive_fd(smooth_window(signal, window, width));
}

SampledSignal fourier_smooth_fd(const SampledSignal& signal, FilterKind kind, double param,
                                TrendHandling trend) {
  if (!is_smoothing(kind)) {
    throw ParameterError("fourier_smooth_fd takes a low-pass filter, got " +
                         std::string(to_string(kind)));
  }
  const SpectralFilter filter{kind, param};
  if (trend == TrendHandling::Periodic) {
    return naive_fd(inverse(apply_filter(forward(signal), filter)));
  }
  const EndpointTrend line = endpoint_trend(signal);
  const SampledSignal smooth = inverse(apply_filter(forward(remove_trend(signal, line)), filter));
  return naive_fd(add_trend(smooth, line));
}

SampledSignal fourier_differentiate(const SampledSignal& signal, FilterKind kind, double param,
                                    TrendHandling trend) {
  if (!is_differentiating(kind)) {
    throw ParameterError("fourier_differentiate takes a differentiating filter, got " +
                         std::string(to_string(kind)));
  }
  const SpectralFilter filter{kind, param};
  if (trend == TrendHandling::Periodic) return inverse(apply_filter(forward(signal), filter));
  const EndpointTrend line = endpoint_trend(signal);
  const SampledSignal g = inverse(apply_filter(forward(remove_trend(signal, line)), filter));
  return add_trend(g, {line.slope, 0.0});
}

WaveletTerms wavelet_terms(const SampledSignal& signal, const WaveletPair& pair,
                           const ScaleGrid& scales) {
  const EndpointTrend line = endpoint_trend(signal);
  const WaveletPlane plane = analyze(remove_trend(signal, line), pair.chi, scales);
  return {synthesis_contributions(plane, pair.psi, pair.reconstruction), line};
}

SampledSignal finish_wavelet(const WaveletTerms& terms, const ScaleCutoff& cutoff) {
  return add_trend(accumulate(terms.terms, cutoff), {terms.trend.slope, 0.0});
}

SampledSignal wavelet_differentiate(const SampledSignal& signal, const WaveletPair& pair,
                                    const ScaleGrid& scales, const ScaleCutoff& cutoff) {
  return finish_wavelet(wavelet_terms(signal, pair, scales), cutoff);
}

const WaveletPair& method_wavelet_pair() {
  static const WaveletPair pair = morlet_pair();
  return pair;
}

namespace {

int voices_of(const MethodSpec& spec) {
  const double v = spec.param("voices");
  if (v < 1.0 || v != std::floor(v)) {
    throw ParameterError("voices must be a positive integer, got " + std::to_string(v));
  }
  return static_cast<int>(v);
}

}  // namespace

ScaleGrid method_scale_grid(const MethodSpec& spec, const Grid& grid) {
  const double a_max = spec.param("a_max");
  const int voices = voices_of(spec);
  if (spec.kind() == MethodKind::WaveletGlobal) {
    return ScaleGrid(spec.param("a_min"), a_max, voices);
  }
  if (spec.kind() != MethodKind::WaveletAdaptive) {
    throw SpecError(std::string(to_string(spec.kind())) + " has no scale grid");
  }
  const ScaleCutoff cutoff = method_cutoff(spec);
  // 1/(slope x + c) is monotone in x, so its extremes sit at the grid ends.
  const double left = cutoff.at(grid.x(0));
  const double right = cutoff.at(grid.x_last());
  if (!(left > 0.0) || !(right > 0.0) || !std::isfinite(left) || !std::isfinite(right)) {
    throw ParameterError("adaptive cutoff 1/(slope x + c) is not positive on the grid");
  }
  double smallest = std::min(left, right);
  smallest = std::max(smallest, 2.0 * grid.dx);
  smallest = std::min(smallest, a_max * std::exp2(-1.0 / voices));
  return ScaleGrid(smallest, a_max, voices);
}

ScaleCutoff method_cutoff(const MethodSpec& spec) {
  switch (spec.kind()) {
    case MethodKind::WaveletGlobal:
      return ScaleCutoff::constant(spec.param("a_min"));
    case MethodKind::WaveletAdaptive:
      return ScaleCutoff::linear(spec.param("slope"), spec.param("c"));
    default:
      throw SpecError(std::string(to_string(spec.kind())) + " has no scale cutoff");
  }
}

namespace {

TrendHandling trend_of(const MethodSpec& spec) {
  const double d = spec.param("detrend");
  if (d == 1.0) return TrendHandling::Detrend;
  if (d == 0.0) return TrendHandling::Periodic;
  throw ParameterError("detrend must be 0 or 1, got " + std::to_string(d));
}

}  // namespace

SampledSignal differentiate(const MethodSpec& spec, const SampledSignal& signal) {
  switch (spec.kind()) {
    case MethodKind::NaiveFD:
      return naive_fd(signal);
    case MethodKind::RectWindowFD:
      return smooth_window_fd(signal, Window::Rect, spec.param("width"));
    case MethodKind::GaussWindowFD:
      return smooth_window_fd(signal, Window::Gauss, spec.param("width"));
    case MethodKind::FourierLowpassFD:
      return fourier_smooth_fd(signal, FilterKind::IdealLowPass, spec.param("cutoff"),
                               trend_of(spec));
    case MethodKind::FourierGaussFD:
      return fourier_smooth_fd(signal, FilterKind::GaussianLowPass, spec.param("width"),
                               trend_of(spec));
    case MethodKind::DiffFilter:
      return fourier_differentiate(signal, FilterKind::Differentiating, spec.param("cutoff"),
                                   trend_of(spec));
    case MethodKind::DiffGaussFilter:
      return fourier_differentiate(signal, FilterKind::DifferentiatingGaussian,
                                   spec.param("width"), trend_of(spec));
    case MethodKind::WaveletGlobal:
    case MethodKind::WaveletAdaptive:
      return wavelet_differentiate(signal, method_wavelet_pair(),
                                   method_scale_grid(spec, signal.grid()), method_cutoff(spec));
  }
  throw SpecError("unknown method kind");
}

double support_margin(const MethodSpec& spec, const Grid& grid) {
  double margin = 10.0 * grid.dx;
  switch (spec.kind()) {
    case MethodKind::RectWindowFD:
    case MethodKind::GaussWindowFD:
      margin = std::max(margin, spec.param("width"));
      break;
    case MethodKind::WaveletGlobal:
    case MethodKind::WaveletAdaptive:
      margin = std::max(margin, spec.param("a_max") * method_wavelet_pair().psi.support_radius());
      break;
    default:
      break;
  }
  return margin;
}

}  // namespace wavederiv
