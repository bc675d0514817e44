#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wavederiv/grid.hpp"
#include "wavederiv/method_spec.hpp"
#include "wavederiv/signals.hpp"

namespace wavederiv {

enum class MaskMode { Full, Interior };

std::string_view to_string(MaskMode mode);
MaskMode parse_mask_mode(std::string_view name);

struct ErrorReport {
  double sigma = 0.0;
  std::size_t n_points = 0;
  double masked_margin = 0.0;  // x-units dropped at each end
};

// sigma = sqrt(sum (g_n - g(x_n))^2 / sum g(x_n)^2). Interior drops the
// points closer than `margin` to either end of the grid.
ErrorReport rms_error(const SampledSignal& estimate, Model model, MaskMode mask,
                      double margin = 0.0);

// support_margin of the method, capped at a tenth of the grid span.
double default_margin(const MethodSpec& spec, const Grid& grid);

// Real values lo .. hi, geometrically spaced, both ends included.
std::vector<double> log_space(double lo, double hi, std::size_t count);

struct SweepSpec {
  MethodSpec method{MethodKind::NaiveFD};
  std::string swept_param;  // empty for kinds without parameters
  std::vector<double> values;
  Model model = Model::Chirp;
  std::optional<Grid> grid;  // default_grid(model) when empty
  std::vector<NoiseSpec> seeds;
  MaskMode mask = MaskMode::Full;

  // Throws SpecError unless values are nonempty and strictly monotone, seeds
  // nonempty and swept_param a parameter of the method.
  void validate() const;
  Grid resolved_grid() const;
  MethodSpec method_at(double value) const;
};

// seed, seed..., realization 0 .. count-1, all at level mu.
std::vector<NoiseSpec> ensemble(double mu, std::size_t count, std::uint64_t seed = 1,
                                NoiseReference reference = NoiseReference::MaxAbs);

struct SweepPoint {
  double param = 0.0;
  double sigma_mean = 0.0;
  double sigma_std = 0.0;  // sample standard deviation, 0 for one realization
  std::size_t n = 0;
};

struct SweepResult {
  std::vector<SweepPoint> points;
  // sigma of every cell, value-major: raw[v * seeds + s].
  std::vector<double> raw;
  std::size_t optimum = 0;  // index into points

  double param_opt() const { return points[optimum].param; }
  double sigma_opt() const { return points[optimum].sigma_mean; }
  double sigma_std_opt() const { return points[optimum].sigma_std; }
};

// jobs = 0 uses the hardware concurrency. Results do not depend on jobs.
SweepResult run_sweep(const SweepSpec& spec, unsigned jobs = 0);

// Same as run_sweep but differentiates every cell from scratch; the default
// path reuses wavelet planes across cutoff values.
SweepResult run_sweep_direct(const SweepSpec& spec, unsigned jobs = 0);

// "param,sigma_mean,sigma_std,n"
std::string sweep_csv(const SweepResult& result);

// Flat key=value sweep description, e.g.
//   kind=GaussWindowFD
//   sweep=width
//   values=log:0.0035:0.035:20
//   model=chirp
//   mu=0.3
//   realizations=20
// Other keys: seed (first seed, default 1), mask (full | interior),
// noise_ref (max | mean); any remaining key is a method parameter. values
// is either a comma-separated list or log:lo:hi:count.
SweepSpec parse_sweep_config(std::string_view text);

// One row of the benchmark table: a sweep setup and the published numbers.
struct Table1Entry {
  MethodKind kind;
  Model model;
  std::string config_name;  // file stem under configs/table1
  SweepSpec sweep;          // seeds left empty
  std::optional<double> ref_sigma;
  std::optional<double> ref_param;
};

const std::vector<Table1Entry>& table1_entries();

// Noise level of the benchmark rows: 0.3 for the chirp, 0.1 for the step.
double table1_mu(Model model);

struct Table1Row {
  const Table1Entry* entry;
  SweepResult result;
};

struct Table1Options {
  unsigned jobs = 0;
  MaskMode mask = MaskMode::Full;
  std::optional<double> mu;  // overrides each entry's noise level
};

struct Table1Report {
  std::vector<Table1Row> rows;
};

// Runs every entry with the given noise streams; each NoiseSpec's mu is
// replaced by the entry's (or options.mu).
Table1Report table1_report(std::span<const NoiseSpec> seeds, const Table1Options& options = {});

// One row per method with columns ex1_* (chirp) and ex2_* (step):
// param_opt, sigma_mean, sigma_std, sigma_ref. Rows not run and absent
// reference values are left empty.
std::string table1_csv(const Table1Report& report);
std::string table1_text(const Table1Report& report);

}  // namespace wavederiv
