// Command-line front end: benchmark data, differentiation, sweeps, Table 1.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "wavederiv/cwt.hpp"
#include "wavederiv/differentiators.hpp"
#include "wavederiv/errors.hpp"
#include "wavederiv/evaluation.hpp"
#include "wavederiv/io.hpp"
#include "wavederiv/keyvalue.hpp"
#include "wavederiv/signals.hpp"

namespace fs = std::filesystem;
using namespace wavederiv;

namespace {

constexpr int kUsage = 2;
constexpr int kFailure = 1;

// Input problems found before any computation starts.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require_file(const std::string& path) {
  if (!fs::is_regular_file(path)) throw UsageError("no such file: " + path);
}

void require_parent(const fs::path& out) {
  const fs::path parent = out.parent_path();
  if (!parent.empty() && !fs::is_directory(parent)) {
    throw UsageError("output directory does not exist: " + parent.string());
  }
}

template <class F>
auto as_usage(F f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

struct GenerateArgs {
  std::string model = "chirp";
  double mu = 0.0;
  std::uint64_t seed = 1;
  std::uint64_t realization = 0;
  std::string noise_ref = "max";
  std::string out;
};

struct DiffArgs {
  std::string in;
  std::string method;
  std::string out;
  std::string model;
  std::string mask = "interior";
};

struct SweepArgs {
  std::string config;
  std::string out;
};

struct Table1Args {
  std::size_t seeds = 20;
  std::uint64_t seed = 1;
  std::string mask = "full";
  std::string out;
};

struct PlaneArgs {
  std::string in;
  std::string wavelet = "morlet";
  double a_min = 0.006;
  double a_max = 0.1;
  int voices = 16;
  std::string out;
};

int run_generate(const GenerateArgs& a) {
  require_parent(a.out);
  const Model model = as_usage([&] { return parse_model(a.model); });
  const NoiseReference ref = as_usage([&] { return parse_noise_reference(a.noise_ref); });
  if (!(a.mu >= 0.0)) throw UsageError("--mu must be non-negative");
  const SampledSignal s =
      sample_noisy(model, default_grid(model), {a.mu, a.seed, a.realization, ref});
  write_file_atomic(a.out, signal_csv(s, "f"));
  return 0;
}

int run_diff(const DiffArgs& a) {
  require_file(a.in);
  require_parent(a.out);
  const MethodSpec spec = as_usage([&] { return MethodSpec::parse(a.method); });
  const MaskMode mask = as_usage([&] { return parse_mask_mode(a.mask); });
  std::optional<Model> model;
  if (!a.model.empty()) model = as_usage([&] { return parse_model(a.model); });
  const SampledSignal input = as_usage([&] { return parse_signal_csv(read_file(a.in)); });
  const SampledSignal g = differentiate(spec, input);
  std::optional<ErrorReport> report;
  if (model) {
    const double margin = mask == MaskMode::Interior ? default_margin(spec, g.grid()) : 0.0;
    report = rms_error(g, *model, mask, margin);
  }
  write_file_atomic(a.out, signal_csv(g, "g"));
  if (report) {
    std::printf("sigma=%s n=%zu margin=%s\n", format_real(report->sigma).c_str(),
                report->n_points, format_real(report->masked_margin).c_str());
  }
  return 0;
}

int run_sweep_cmd(const SweepArgs& a, unsigned jobs) {
  require_file(a.config);
  require_parent(a.out);
  const SweepSpec spec = as_usage([&] { return parse_sweep_config(read_file(a.config)); });
  const SweepResult result = run_sweep(spec, jobs);
  write_file_atomic(a.out, sweep_csv(result));
  return 0;
}

int run_table1(const Table1Args& a, unsigned jobs) {
  if (a.seeds == 0) throw UsageError("--seeds must be at least 1");
  const MaskMode mask = as_usage([&] { return parse_mask_mode(a.mask); });
  const fs::path dir = a.out;
  if (fs::exists(dir) && !fs::is_directory(dir)) {
    throw UsageError("--out is not a directory: " + dir.string());
  }
  const auto seeds = ensemble(0.0, a.seeds, a.seed);
  Table1Options options;
  options.jobs = jobs;
  options.mask = mask;
  const Table1Report report = table1_report(seeds, options);
  fs::create_directories(dir / "fig2");
  for (const auto& row : report.rows) {
    write_file_atomic(dir / "fig2" / (row.entry->config_name + ".csv"), sweep_csv(row.result));
  }
  write_file_atomic(dir / "table1.txt", table1_text(report));
  write_file_atomic(dir / "table1.csv", table1_csv(report));
  std::fputs(table1_text(report).c_str(), stdout);
  return 0;
}

int run_plane(const PlaneArgs& a) {
  require_file(a.in);
  require_parent(a.out);
  const WaveletPair pair = as_usage([&] { return pair_by_name(a.wavelet); });
  const ScaleGrid scales = as_usage([&] { return ScaleGrid(a.a_min, a.a_max, a.voices); });
  const SampledSignal input = as_usage([&] { return parse_signal_csv(read_file(a.in)); });
  write_file_atomic(a.out, plane_csv(analyze(input, pair.chi, scales)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Noise-robust numerical differentiation benchmarks"};
  app.require_subcommand(1);
  app.fallthrough();
  unsigned jobs = 0;
  app.add_option("--jobs", jobs, "Worker threads for sweeps (0 = all cores)")
      ->envname("WAVEDERIV_JOBS");

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Sample a benchmark signal with noise");
  generate->add_option("--model", gen.model, "chirp | step")->required();
  generate->add_option("--mu", gen.mu, "Relative noise level");
  generate->add_option("--seed", gen.seed, "Noise seed");
  generate->add_option("--realization", gen.realization, "Noise stream within the seed");
  generate->add_option("--noise-ref", gen.noise_ref, "max | mean");
  generate->add_option("--out", gen.out, "Output CSV")->required();

  DiffArgs diff;
  auto* diff_cmd = app.add_subcommand("diff", "Differentiate a sampled signal");
  diff_cmd->add_option("--in", diff.in, "Input CSV (x,f)")->required();
  diff_cmd->add_option("--method", diff.method, "Method, e.g. \"kind=GaussWindowFD;width=0.011\"")
      ->required();
  diff_cmd->add_option("--out", diff.out, "Output CSV (x,g)")->required();
  diff_cmd->add_option("--model", diff.model, "Print sigma against this model's derivative");
  diff_cmd->add_option("--mask", diff.mask, "interior | full");

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Run a parameter sweep from a config file");
  sweep_cmd->add_option("--config", sweep.config, "Sweep config")->required();
  sweep_cmd->add_option("--out", sweep.out, "Output CSV")->required();

  Table1Args t1;
  auto* table1 = app.add_subcommand("table1", "Reproduce the benchmark table and sweep curves");
  table1->add_option("--seeds", t1.seeds, "Noise realizations per sweep cell");
  table1->add_option("--seed", t1.seed, "Base seed");
  table1->add_option("--mask", t1.mask, "full | interior");
  table1->add_option("--out", t1.out, "Output directory")->required();

  PlaneArgs plane;
  auto* plane_cmd = app.add_subcommand("wavelet-plane", "Write |W| over scales and positions");
  plane_cmd->add_option("--in", plane.in, "Input CSV (x,f)")->required();
  plane_cmd->add_option("--wavelet", plane.wavelet, "morlet | gaussian-derivative");
  plane_cmd->add_option("--a-min", plane.a_min, "Smallest scale");
  plane_cmd->add_option("--a-max", plane.a_max, "Largest scale");
  plane_cmd->add_option("--voices", plane.voices, "Scales per octave");
  plane_cmd->add_option("--out", plane.out, "Output CSV")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*generate) return run_generate(gen);
    if (*diff_cmd) return run_diff(diff);
    if (*sweep_cmd) return run_sweep_cmd(sweep, jobs);
    if (*table1) return run_table1(t1, jobs);
    if (*plane_cmd) return run_plane(plane);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}
