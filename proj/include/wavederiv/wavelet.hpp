#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <string>

namespace wavederiv {

// A mother wavelet sampled through an arbitrary callable. support_radius is
// the |x| beyond which the function is treated as zero (|psi| <= 1e-12).
class Wavelet {
 public:
  using Function = std::function<std::complex<double>(double)>;

  Wavelet(std::string label, Function evaluate, double support_radius);

  std::complex<double> operator()(double x) const { return evaluate_(x); }
  const std::string& label() const { return label_; }
  double support_radius() const { return support_radius_; }

  // psi_hat(k) = integral psi(x) exp(-ikx) dx, trapezoid rule on the support.
  std::complex<double> fourier(double k) const;

 private:
  std::string label_;
  Function evaluate_;
  double support_radius_;
};

// Throws InvalidWavelet unless |integral psi| <= 1e-8 and |psi| <= 1e-12 beyond
// the support radius.
void check_wavelet(const Wavelet& wavelet);

// Analysis wavelet chi = -psi' bound to its synthesis wavelet psi.
struct WaveletPair {
  Wavelet chi;
  Wavelet psi;
  // (1/2pi) integral |psi_hat||chi_hat|/|k| dk.
  double admissibility = 0.0;
  // (1/2) integral |psi_hat|^2/|k| dk: the normalization that turns the
  // discretized synthesis into the derivative.
  double reconstruction = 0.0;
};

// Builds chi = -psi'. With no derivative supplied psi' is a centered
// difference at step 1e-6.
WaveletPair derivative_pair(const Wavelet& psi,
                            std::optional<Wavelet::Function> derivative = std::nullopt);

// Both forms of the admissibility integral; they must agree to 1e-6 relative.
struct AdmissibilityForms {
  double cross = 0.0;   // (1/2pi) integral |psi_hat||chi_hat|/|k|
  double energy = 0.0;  // (1/2pi) integral |psi_hat|^2
};

AdmissibilityForms admissibility_forms(const Wavelet& chi, const Wavelet& psi);
// The cross form; throws InvalidWavelet when it diverges at k = 0 or the two
// forms disagree.
double admissibility_constant(const Wavelet& chi, const Wavelet& psi);
double reconstruction_constant(const Wavelet& psi);

// exp(i w0 x) exp(-x^2/2), default w0 = 2 pi.
Wavelet morlet(double omega0 = 6.283185307179586);
// -x exp(-x^2/2); its pair's chi is the Mexican hat (1 - x^2) exp(-x^2/2).
Wavelet gaussian_derivative();

WaveletPair morlet_pair(double omega0 = 6.283185307179586);
WaveletPair gaussian_derivative_pair();
// "morlet" or "gaussian-derivative".
WaveletPair pair_by_name(const std::string& name);

}  // namespace wavederiv
