#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "wavederiv/grid.hpp"

namespace wavederiv {

// The two benchmark signals. Chirp lives on [0, 1], Step on [-1, 1].
enum class Model { Chirp, Step };

struct Domain {
  double lo;
  double hi;
  bool contains(double x) const;
};

Domain domain_of(Model model);
std::string_view to_string(Model model);
Model parse_model(std::string_view name);

// Benchmark grid: step 0.001 over the model's domain.
Grid default_grid(Model model);

// g(x). Chirp: sin(2 pi x (10x + 10)) (1 - cos(6 pi x) / 2); Step: -2 for
// x <= 0, +1 otherwise.
double true_derivative(Model model, double x);

// f(x) = integral of g from the left end of the domain.
double true_antiderivative(Model model, double x);

// f at every grid abscissa. For the chirp the table is computed once per grid
// and shared read-only between callers.
std::vector<double> antiderivative_table(Model model, const Grid& grid);
std::vector<double> derivative_table(Model model, const Grid& grid);

// What the relative noise level mu multiplies.
enum class NoiseReference {
  MaxAbs,   // A = mu * max_i |f(x_i)|
  MeanAbs,  // A = mu * mean_i |f(x_i)|
};

std::string_view to_string(NoiseReference ref);
NoiseReference parse_noise_reference(std::string_view name);

struct NoiseSpec {
  double mu = 0.0;
  std::uint64_t seed = 0;
  std::uint64_t realization = 0;
  NoiseReference reference = NoiseReference::MaxAbs;
};

// i.i.d. uniform samples on [-amplitude, amplitude]. The stream depends only on
// (seed, realization), so ensemble members can be drawn in any order.
std::vector<double> uniform_noise(std::size_t n, double amplitude,
                                  std::uint64_t seed, std::uint64_t realization);

// Bound A used for the given clean samples.
double noise_amplitude(std::span<const double> clean, const NoiseSpec& noise);

SampledSignal sample_clean(Model model, const Grid& grid);
SampledSignal sample_noisy(Model model, const Grid& grid, const NoiseSpec& noise);

}  // namespace wavederiv
