#include "wavederiv/signals.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <random>
#include <string>
#include <tuple>

#include "wavederiv/errors.hpp"

namespace wavederiv {

namespace {

constexpr double kPi = std::numbers::pi;
// Slack for abscissae that land a rounding error outside the domain.
constexpr double kDomainSlack = 1e-12;

double chirp(double x) {
  return std::sin(2.0 * kPi * x * (10.0 * x + 10.0)) *
         (1.0 - 0.5 * std::cos(6.0 * kPi * x));
}

double step(double x) { return x <= 0.0 ? -2.0 : 1.0; }

void check_domain(Model model, double x) {
  if (!domain_of(model).contains(x)) {
    throw DomainError("x = " + std::to_string(x) + " outside the " +
                      std::string(to_string(model)) + " domain");
  }
}

double clamp_to_domain(Model model, double x) {
  const Domain d = domain_of(model);
  return std::clamp(x, d.lo, d.hi);
}

double chirp_integral(double a, double b) {
  using boost::math::quadrature::gauss_kronrod;
  if (a == b) return 0.0;
  // Panels shorter than the fastest oscillation converge in one or two levels.
  const auto panels = static_cast<int>(std::ceil(std::abs(b - a) * 64.0));
  const double h = (b - a) / panels;
  double sum = 0.0;
  for (int k = 0; k < panels; ++k) {
    const double lo = a + k * h;
    const double hi = k + 1 == panels ? b : lo + h;
    sum += gauss_kronrod<double, 31>::integrate(chirp, lo, hi, 10, 1e-12);
  }
  return sum;
}

using GridKey = std::tuple<double, double, std::size_t>;

std::shared_ptr<const std::vector<double>> chirp_table(const Grid& grid) {
  static std::mutex mutex;
  static std::map<GridKey, std::shared_ptr<const std::vector<double>>> cache;
  const GridKey key{grid.x0, grid.dx, grid.n};
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }

  using boost::math::quadrature::gauss_kronrod;
  auto table = std::make_shared<std::vector<double>>(grid.n);
  double left = clamp_to_domain(Model::Chirp, grid.x(0));
  double acc = chirp_integral(0.0, left);
  (*table)[0] = acc;
  for (std::size_t i = 1; i < grid.n; ++i) {
    const double right = clamp_to_domain(Model::Chirp, grid.x(i));
    // One oscillation spans many samples, so a fixed 15-point rule per cell
    // is exact to rounding.
    acc += gauss_kronrod<double, 15>::integrate(chirp, left, right, 0);
    (*table)[i] = acc;
    left = right;
  }

  std::lock_guard lock(mutex);
  if (cache.size() > 64) cache.clear();
  return cache.emplace(key, std::move(table)).first->second;
}

void check_grid(Model model, const Grid& grid) {
  const Domain d = domain_of(model);
  if (!d.contains(grid.x(0)) || !d.contains(grid.x_last())) {
    throw DomainError("grid [" + std::to_string(grid.x(0)) + ", " +
                      std::to_string(grid.x_last()) + "] escapes the " +
                      std::string(to_string(model)) + " domain");
  }
}

}  // namespace

bool Domain::contains(double x) const {
  return x >= lo - kDomainSlack && x <= hi + kDomainSlack;
}

Domain domain_of(Model model) {
  switch (model) {
    case Model::Chirp:
      return {0.0, 1.0};
    case Model::Step:
      return {-1.0, 1.0};
  }
  throw DomainError("unknown model");
}

std::string_view to_string(Model model) {
  return model == Model::Chirp ? "chirp" : "step";
}

Model parse_model(std::string_view name) {
  if (name == "chirp") return Model::Chirp;
  if (name == "step") return Model::Step;
  throw SpecError("unknown model '" + std::string(name) + "' (chirp|step)");
}

Grid default_grid(Model model) {
  const Domain d = domain_of(model);
  const auto n = static_cast<std::size_t>(std::lround((d.hi - d.lo) / 0.001)) + 1;
  return Grid::covering(d.lo, d.hi, n);
}

double true_derivative(Model model, double x) {
  check_domain(model, x);
  return model == Model::Chirp ? chirp(x) : step(x);
}

double true_antiderivative(Model model, double x) {
  check_domain(model, x);
  x = clamp_to_domain(model, x);
  if (model == Model::Step) {
    return x <= 0.0 ? -2.0 * (x + 1.0) : -2.0 + x;
  }
  return chirp_integral(0.0, x);
}

std::vector<double> antiderivative_table(Model model, const Grid& grid) {
  check_grid(model, grid);
  if (model == Model::Chirp) return *chirp_table(grid);
  std::vector<double> out(grid.n);
  for (std::size_t i = 0; i < grid.n; ++i) {
    out[i] = true_antiderivative(model, grid.x(i));
  }
  return out;
}

std::vector<double> derivative_table(Model model, const Grid& grid) {
  check_grid(model, grid);
  std::vector<double> out(grid.n);
  for (std::size_t i = 0; i < grid.n; ++i) {
    out[i] = true_derivative(model, grid.x(i));
  }
  return out;
}

std::string_view to_string(NoiseReference ref) {
  return ref == NoiseReference::MaxAbs ? "max" : "mean";
}

NoiseReference parse_noise_reference(std::string_view name) {
  if (name == "max") return NoiseReference::MaxAbs;
  if (name == "mean") return NoiseReference::MeanAbs;
  throw SpecError("unknown noise reference '" + std::string(name) + "' (max|mean)");
}

std::vector<double> uniform_noise(std::size_t n, double amplitude,
                                  std::uint64_t seed, std::uint64_t realization) {
  if (!(amplitude >= 0.0)) throw ParameterError("noise amplitude must be >= 0");
  // mt19937_64 and seed_seq are fully specified by the standard, so the
  // stream is identical across platforms.
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(realization),
                    static_cast<std::uint32_t>(realization >> 32),
                    0x9e3779b9u};
  std::mt19937_64 engine(seq);
  std::vector<double> out(n);
  for (auto& v : out) {
    const double u = static_cast<double>(engine() >> 11) * 0x1.0p-53;
    v = amplitude * (2.0 * u - 1.0);
  }
  return out;
}

double noise_amplitude(std::span<const double> clean, const NoiseSpec& noise) {
  if (!(noise.mu >= 0.0)) throw ParameterError("noise level mu must be >= 0");
  if (clean.empty() || noise.mu == 0.0) return 0.0;
  double ref = 0.0;
  if (noise.reference == NoiseReference::MaxAbs) {
    for (double v : clean) ref = std::max(ref, std::abs(v));
  } else {
    for (double v : clean) ref += std::abs(v);
    ref /= static_cast<double>(clean.size());
  }
  return noise.mu * ref;
}

SampledSignal sample_clean(Model model, const Grid& grid) {
  return SampledSignal(grid, antiderivative_table(model, grid));
}

SampledSignal sample_noisy(Model model, const Grid& grid, const NoiseSpec& noise) {
  std::vector<double> values = antiderivative_table(model, grid);
  const double amplitude = noise_amplitude(values, noise);
  if (amplitude > 0.0) {
    const auto xi = uniform_noise(grid.n, amplitude, noise.seed, noise.realization);
    for (std::size_t i = 0; i < grid.n; ++i) values[i] += xi[i];
  }
  return SampledSignal(grid, std::move(values));
}

}  // namespace wavederiv
