#pragma once

// Reference implementations and pinned constants for the test suites. The
// sums here are written straight from the definitions, O(n^2) where needed,
// and share no code with the library's transforms.

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "wavederiv/cwt.hpp"
#include "wavederiv/grid.hpp"
#include "wavederiv/wavelet.hpp"

namespace oracle {

using cplx = std::complex<double>;

// Chirp integrals from 0, 30-digit quadrature.
inline constexpr double kChirpIntegralQuarter = -0.001155315691846731393;
inline constexpr double kChirpIntegralHalf = 0.01921680533303901902;
inline constexpr double kChirpIntegralOne = 0.0045654388778790729701;
inline constexpr double kChirpAtQuarter = 0.7071067811865475244;

// Admissibility constants of the shipped pairs (closed forms).
inline constexpr double kAdmissibilityGaussDerivative = 0.88622692545275801365;  // sqrt(pi)/2
inline constexpr double kAdmissibilityMorlet = 1.7724538509055160273;            // sqrt(pi)
// (1/2) * integral |psi_hat(k)|^2 / |k| dk.
inline constexpr double kReconstructionMorlet = 0.89790730829053753103;
inline constexpr double kReconstructionGaussDerivative = std::numbers::pi;

inline std::vector<cplx> dft(const std::vector<cplx>& x, int sign = -1) {
  const std::size_t n = x.size();
  std::vector<cplx> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    cplx acc = 0.0;
    for (std::size_t m = 0; m < n; ++m) {
      const double phase = sign * 2.0 * std::numbers::pi *
                           static_cast<double>((k * m) % n) / static_cast<double>(n);
      acc += x[m] * cplx(std::cos(phase), std::sin(phase));
    }
    out[k] = acc;
  }
  return out;
}

// Even extension of f about both end samples, periodic with 2(n-1).
inline double reflected(const std::vector<double>& f, long i) {
  const long n = static_cast<long>(f.size());
  const long period = 2 * (n - 1);
  long r = i % period;
  if (r < 0) r += period;
  return r < n ? f[static_cast<std::size_t>(r)] : f[static_cast<std::size_t>(period - r)];
}

// (1/a) sum_m conj(chi((x_m - b_i)/a)) f_ext(x_m) dx at grid position i.
inline cplx cwt_direct(const std::vector<double>& f, double dx, const wavederiv::Wavelet& chi,
                       double a, std::size_t i) {
  const long reach = static_cast<long>(std::ceil(chi.support_radius() * a / dx)) + 2;
  cplx acc = 0.0;
  for (long m = -reach; m <= reach; ++m) {
    acc += std::conj(chi(static_cast<double>(m) * dx / a)) *
           reflected(f, static_cast<long>(i) + m);
  }
  return acc * dx / a;
}

// Rectangle-rule synthesis of one scale's term at grid position i from the
// full analysis row over the reflected period.
inline double synthesis_term_direct(const std::vector<double>& f, double dx,
                                    const wavederiv::WaveletPair& pair,
                                    const wavederiv::ScaleGrid& scales, std::size_t j,
                                    std::size_t i) {
  const double a = scales[j];
  const long reach = static_cast<long>(std::ceil(pair.psi.support_radius() * a / dx)) + 2;
  cplx acc = 0.0;
  for (long q = -reach; q <= reach; ++q) {
    const long b = static_cast<long>(i) - q;
    // W at b over the reflected period: analysis is even-periodic in b.
    const long n = static_cast<long>(f.size());
    const long period = 2 * (n - 1);
    long r = b % period;
    if (r < 0) r += period;
    acc += pair.psi(static_cast<double>(q) * dx / a) *
           cwt_direct(f, dx, pair.chi, a, static_cast<std::size_t>(r));
  }
  const double cell = a * std::numbers::ln2 / scales.voices();
  return (acc * dx).real() * cell / (a * a * a) / pair.reconstruction;
}

}  // namespace oracle
