#include "wavederiv/wavelet.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

#include "wavederiv/errors.hpp"

namespace wavederiv {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDecay = 1e-12;
constexpr double kZeroMean = 1e-8;
constexpr double kFourierStep = 0.01;
constexpr double kNumericStep = 1e-6;

// Samples of a wavelet on the trapezoid nodes of [-R, R].
struct Samples {
  std::vector<double> x;
  std::vector<std::complex<double>> v;
  double h = 0.0;

  explicit Samples(const Wavelet& w) {
    const double r = w.support_radius();
    const auto half = static_cast<long>(std::ceil(r / kFourierStep));
    h = r / static_cast<double>(half);
    for (long j = -half; j <= half; ++j) {
      x.push_back(static_cast<double>(j) * h);
      v.push_back(w(x.back()));
    }
  }

  std::complex<double> fourier(double k) const {
    std::complex<double> acc = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) acc += v[j] * std::polar(1.0, -k * x[j]);
    // End nodes carry |psi| <= 1e-12, so the half weights are immaterial.
    return acc * h;
  }
};

double max_abs_beyond(const Wavelet::Function& f, double r, double extent) {
  double worst = 0.0;
  for (double x = r; x <= r + extent; x += 0.01) {
    worst = std::max({worst, std::abs(f(x)), std::abs(f(-x))});
  }
  return worst;
}

template <class F>
double integrate(F&& f, double a, double b) {
  using boost::math::quadrature::gauss_kronrod;
  return gauss_kronrod<double, 31>::integrate(std::forward<F>(f), a, b, 20, 1e-11);
}

// Integral over the real line of an integrand that is negligible (below
// 1e-14 of its peak) outside a bounded band.
template <class F>
double integrate_band(F&& f) {
  constexpr double kStep = 0.25;
  constexpr double kScan = 100.0;
  double peak = 0.0;
  std::vector<std::pair<double, double>> scan;
  for (double k = -kScan; k <= kScan; k += kStep) {
    if (k == 0.0) continue;
    const double v = std::abs(f(k));
    scan.emplace_back(k, v);
    peak = std::max(peak, v);
  }
  if (peak == 0.0) return 0.0;
  double lo = 0.0;
  double hi = 0.0;
  for (auto [k, v] : scan) {
    if (v >= 1e-14 * peak) {
      lo = std::min(lo, k - kStep);
      hi = std::max(hi, k + kStep);
    }
  }
  double total = 0.0;
  if (lo < 0.0) total += integrate(f, lo, 0.0);
  if (hi > 0.0) total += integrate(f, 0.0, hi);
  return total;
}

double support_for(const Wavelet::Function& f, double start) {
  for (double r = start; r <= 4.0 * start; r += 0.05) {
    if (max_abs_beyond(f, r, 2.0) <= kDecay) return r;
  }
  throw InvalidWavelet("derivative does not decay within 4x the wavelet support");
}

}  // namespace

Wavelet::Wavelet(std::string label, Function evaluate, double support_radius)
    : label_(std::move(label)), evaluate_(std::move(evaluate)), support_radius_(support_radius) {
  if (!evaluate_) throw InvalidWavelet("wavelet '" + label_ + "' has no function");
  if (!(support_radius_ > 0.0)) throw InvalidWavelet("support radius must be positive");
}

std::complex<double> Wavelet::fourier(double k) const { return Samples(*this).fourier(k); }

void check_wavelet(const Wavelet& wavelet) {
  const double r = wavelet.support_radius();
  const auto half = static_cast<long>(std::ceil(r / 1e-3));
  const double h = r / static_cast<double>(half);
  std::complex<double> mean = 0.0;
  for (long j = -half; j <= half; ++j) mean += wavelet(static_cast<double>(j) * h);
  mean *= h;
  if (std::abs(mean) > kZeroMean) {
    throw InvalidWavelet("wavelet '" + wavelet.label() + "' has nonzero mean " +
                         std::to_string(std::abs(mean)));
  }
  const auto f = [&wavelet](double x) { return wavelet(x); };
  if (max_abs_beyond(f, r, r) > kDecay) {
    throw InvalidWavelet("wavelet '" + wavelet.label() + "' does not decay below 1e-12 beyond " +
                         std::to_string(r));
  }
}

AdmissibilityForms admissibility_forms(const Wavelet& chi, const Wavelet& psi) {
  const Samples cs(chi);
  const Samples ps(psi);

  const double at_zero = std::abs(ps.fourier(0.0)) * std::abs(cs.fourier(0.0));
  const double near_peak = std::abs(ps.fourier(1.0)) * std::abs(cs.fourier(1.0));
  if (at_zero > 1e-14 * std::max(near_peak, 1.0)) {
    throw InvalidWavelet("admissibility integral diverges at k = 0 for (" + chi.label() + ", " +
                         psi.label() + ")");
  }

  AdmissibilityForms out;
  out.cross = integrate_band([&](double k) {
                return std::abs(ps.fourier(k)) * std::abs(cs.fourier(k)) / std::abs(k);
              }) /
              (2.0 * kPi);
  out.energy = integrate_band([&](double k) { return std::norm(ps.fourier(k)); }) / (2.0 * kPi);
  return out;
}

double admissibility_constant(const Wavelet& chi, const Wavelet& psi) {
  const auto forms = admissibility_forms(chi, psi);
  if (!(forms.cross > 0.0) || !std::isfinite(forms.cross)) {
    throw InvalidWavelet("admissibility constant is not finite and positive");
  }
  if (std::abs(forms.cross - forms.energy) > 1e-6 * forms.cross) {
    throw InvalidWavelet("admissibility forms disagree (" + std::to_string(forms.cross) + " vs " +
                         std::to_string(forms.energy) + "); chi is not -psi'");
  }
  return forms.cross;
}

double reconstruction_constant(const Wavelet& psi) {
  const Samples ps(psi);
  const double at_zero = std::norm(ps.fourier(0.0));
  if (at_zero > 1e-14) {
    throw InvalidWavelet("reconstruction integral diverges at k = 0 for " + psi.label());
  }
  const double k_value =
      integrate_band([&](double k) { return std::norm(ps.fourier(k)) / std::abs(k); }) / 2.0;
  if (!(k_value > 0.0) || !std::isfinite(k_value)) {
    throw InvalidWavelet("reconstruction constant is not finite and positive");
  }
  return k_value;
}

WaveletPair derivative_pair(const Wavelet& psi, std::optional<Wavelet::Function> derivative) {
  check_wavelet(psi);
  Wavelet::Function chi_fn;
  if (derivative) {
    chi_fn = [d = *derivative](double x) { return -d(x); };
  } else {
    chi_fn = [psi](double x) {
      return -(psi(x + kNumericStep) - psi(x - kNumericStep)) / (2.0 * kNumericStep);
    };
  }
  Wavelet chi("-d/dx " + psi.label(), chi_fn, support_for(chi_fn, psi.support_radius()));
  check_wavelet(chi);
  const double c = admissibility_constant(chi, psi);
  const double k = reconstruction_constant(psi);
  return WaveletPair{std::move(chi), psi, c, k};
}

Wavelet morlet(double omega0) {
  return Wavelet(
      "morlet",
      [omega0](double x) { return std::polar(std::exp(-0.5 * x * x), omega0 * x); }, 7.5);
}

Wavelet gaussian_derivative() {
  return Wavelet(
      "gaussian-derivative", [](double x) { return std::complex<double>(-x * std::exp(-0.5 * x * x)); },
      7.75);
}

WaveletPair morlet_pair(double omega0) {
  auto build = [](double w0) {
    return derivative_pair(morlet(w0), [w0](double x) {
      // d/dx exp(i w0 x - x^2/2) = (i w0 - x) psi(x)
      return std::complex<double>(-x, w0) * std::polar(std::exp(-0.5 * x * x), w0 * x);
    });
  };
  if (omega0 == 2.0 * kPi) {
    static const WaveletPair standard = build(2.0 * kPi);
    return standard;
  }
  return build(omega0);
}

WaveletPair gaussian_derivative_pair() {
  static const WaveletPair pair = derivative_pair(gaussian_derivative(), [](double x) {
    return std::complex<double>((x * x - 1.0) * std::exp(-0.5 * x * x));
  });
  return pair;
}

WaveletPair pair_by_name(const std::string& name) {
  if (name == "morlet") return morlet_pair();
  if (name == "gaussian-derivative") return gaussian_derivative_pair();
  throw SpecError("unknown wavelet '" + name + "' (morlet|gaussian-derivative)");
}

}  // namespace wavederiv
