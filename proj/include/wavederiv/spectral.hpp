#pragma once

#include <complex>
#include <span>
#include <string_view>
#include <vector>

#include "wavederiv/grid.hpp"

namespace wavederiv {

// DFT coefficients of a sampled signal, standard ordering, together with the
// physical grid they came from.
struct Spectrum {
  std::vector<std::complex<double>> coefficients;
  Grid grid;
};

// Angular frequency k (radians per signal unit) and integer frequency
// nu = k * L / (2 pi) per DFT bin, with L = n * dx the transform period, so
// nu is the signed bin index.
struct FrequencyGrid {
  std::vector<double> k;
  std::vector<double> nu;
  // Bin holding the Nyquist frequency when n is even, otherwise n.
  std::size_t nyquist_bin = 0;
};

FrequencyGrid frequency_grid(const Grid& grid);

Spectrum forward(const SampledSignal& signal);
// Real part of the inverse transform; imaginary residue is discarded.
SampledSignal inverse(const Spectrum& spectrum);

enum class FilterKind { IdealLowPass, GaussianLowPass, Differentiating, DifferentiatingGaussian };

std::string_view to_string(FilterKind kind);
bool is_differentiating(FilterKind kind);

// param is a cutoff nu_0 for the ideal kinds and a width w for the Gaussian
// kinds, both in integer-frequency units.
struct SpectralFilter {
  FilterKind kind = FilterKind::IdealLowPass;
  double param = 1.0;
};

// H at one bin.
//   IdealLowPass            [|nu| <= p]
//   GaussianLowPass         exp(-(nu/p)^2)
//   Differentiating         ik [|nu| <= p]
//   DifferentiatingGaussian ik exp(-(nu/p)^2)
// The Nyquist bin of an even-length transform has no well-defined sign for
// ik; the differentiating kinds map it to 0.
std::complex<double> transfer(const SpectralFilter& filter, double k, double nu,
                              bool nyquist);

Spectrum apply_filter(const Spectrum& spectrum, const SpectralFilter& filter);

// Line through the first and last sample.
struct EndpointTrend {
  double intercept = 0.0;  // value at the first sample
  double slope = 0.0;      // per signal unit
};

EndpointTrend endpoint_trend(const SampledSignal& signal);
// Signal minus its endpoint line; both ends of the result are zero.
SampledSignal remove_trend(const SampledSignal& signal, const EndpointTrend& trend);
SampledSignal add_trend(const SampledSignal& signal, const EndpointTrend& trend);

}  // namespace wavederiv
