#pragma once

#include "wavederiv/cwt.hpp"
#include "wavederiv/grid.hpp"
#include "wavederiv/method_spec.hpp"
#include "wavederiv/spectral.hpp"
#include "wavederiv/wavelet.hpp"

namespace wavederiv {

// Centered difference (f[i+1] - f[i-1]) / (2 dx) in the interior, one-sided
// differences at the two ends. Output abscissae equal input abscissae.
SampledSignal naive_fd(const SampledSignal& signal);

enum class Window { Rect, Gauss };

// Convolution with a unit-area window. Rect spans round(width/dx) samples,
// forced odd; Gauss has full width at half maximum `width` and is cut at
// 4 standard deviations. The signal is continued past each end by point
// reflection, f(-j) = 2 f(0) - f(j), which leaves linear signals unchanged.
SampledSignal smooth_window(const SampledSignal& signal, Window window, double width);
SampledSignal smooth_window_fd(const SampledSignal& signal, Window window, double width);

// How a non-periodic signal enters a DFT-based method.
enum class TrendHandling {
  Periodic,  // transform the samples as they are
  Detrend,   // remove the endpoint line first, restore it (or its slope) after
};

// FFT -> low-pass (IdealLowPass or GaussianLowPass) -> inverse FFT -> naive_fd.
SampledSignal fourier_smooth_fd(const SampledSignal& signal, FilterKind kind, double param,
                                TrendHandling trend = TrendHandling::Detrend);

// FFT -> ik times low-pass (Differentiating or DifferentiatingGaussian) ->
// inverse FFT. With Detrend the slope of the endpoint line is added back.
SampledSignal fourier_differentiate(const SampledSignal& signal, FilterKind kind, double param,
                                    TrendHandling trend = TrendHandling::Detrend);

// Per-scale synthesis terms of a detrended signal, reusable across cutoffs.
struct WaveletTerms {
  ScaleContributions terms;
  EndpointTrend trend;
};

WaveletTerms wavelet_terms(const SampledSignal& signal, const WaveletPair& pair,
                           const ScaleGrid& scales);
SampledSignal finish_wavelet(const WaveletTerms& terms, const ScaleCutoff& cutoff);

// Analysis with pair.chi, synthesis with pair.psi down to the cutoff. The
// endpoint line is removed before analysis and its slope added to the result:
// a synthesis over [a_min, a_max] carries no constant component.
SampledSignal wavelet_differentiate(const SampledSignal& signal, const WaveletPair& pair,
                                    const ScaleGrid& scales, const ScaleCutoff& cutoff);

// Scale grid and cutoff a wavelet MethodSpec uses on a given grid.
ScaleGrid method_scale_grid(const MethodSpec& spec, const Grid& grid);
ScaleCutoff method_cutoff(const MethodSpec& spec);
// Pair used by the wavelet kinds (Morlet, w0 = 2 pi).
const WaveletPair& method_wavelet_pair();

// Dispatches on spec.kind(). Output grid equals input grid.
SampledSignal differentiate(const MethodSpec& spec, const SampledSignal& signal);

// Width of the region at each end influenced by the method's nonlocal
// support, before any capping: max(window width, a_max * support, 10 dx).
double support_margin(const MethodSpec& spec, const Grid& grid);

}  // namespace wavederiv
