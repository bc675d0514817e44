// Acceptance checks 1-11. Prints one PASS/FAIL line per criterion; the exit
// status is nonzero when any selected criterion fails.
//
//   acceptance            run all
//   acceptance 4 7        run the listed criteria

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <numbers>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "../oracles.hpp"
#include "wavederiv/cwt.hpp"
#include "wavederiv/differentiators.hpp"
#include "wavederiv/evaluation.hpp"
#include "wavederiv/keyvalue.hpp"
#include "wavederiv/signals.hpp"
#include "wavederiv/spectral.hpp"
#include "wavederiv/wavelet.hpp"

using namespace wavederiv;
using std::numbers::pi;

namespace {

// Pinned tolerances.
constexpr double kRoundTripTol = 1e-10;
constexpr double kRoundTripSeconds = 1.0;
constexpr double kSineDerivativeTol = 1e-8;
constexpr double kAdmissibilityTol = 1e-6;
constexpr double kWaveletSigmaMax = 0.05;
constexpr double kWaveletSeconds = 30.0;
constexpr double kLinearTol = 1e-9;
constexpr double kRefSigmaTol = 0.30;
constexpr double kBoundaryFailureMin = 0.5;
constexpr double kOptimumFactor = 2.0;
constexpr std::size_t kEnsemble = 20;

struct Outcome {
  bool pass;
  std::string detail;
};

std::string num(double v, int digits = 3) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

unsigned jobs_from_env() {
  if (const char* env = std::getenv("WAVEDERIV_JOBS")) return static_cast<unsigned>(std::atoi(env));
  return 0;
}

Outcome spectral_round_trip() {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(20240101);
  std::normal_distribution<double> d;
  double worst = 0.0;
  int count = 0;
  for (std::size_t n : {64u, 1000u, 2001u}) {
    for (int r = 0; r < 100; ++r) {
      std::vector<double> v(n);
      for (auto& x : v) x = d(rng);
      const SampledSignal s(Grid(0.0, 1.0 / n, n), v);
      const auto back = inverse(forward(s));
      double err = 0.0, norm = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        err += (back[i] - v[i]) * (back[i] - v[i]);
        norm += v[i] * v[i];
      }
      worst = std::max(worst, std::sqrt(err / norm));
      ++count;
    }
  }
  const double t = seconds_since(t0);
  return {worst <= kRoundTripTol && t < kRoundTripSeconds,
          std::to_string(count) + " signals, worst relative error " + num(worst) + ", " + num(t) + " s"};
}

Outcome spectral_derivative() {
  const std::size_t n = 1000;
  const Grid g(0.0, 1.0 / n, n);
  double worst = 0.0;
  for (double nu : {1.0, 5.0, 17.0}) {
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = std::sin(2 * pi * nu * g.x(i));
    const auto d = inverse(apply_filter(forward(SampledSignal(g, v)), {FilterKind::Differentiating, n / 2.0}));
    for (std::size_t i = 0; i < n; ++i) {
      worst = std::max(worst, std::abs(d[i] - 2 * pi * nu * std::cos(2 * pi * nu * g.x(i))) / (2 * pi * nu));
    }
  }
  return {worst <= kSineDerivativeTol, "nu in {1,5,17}, worst relative error " + num(worst)};
}

Outcome admissibility() {
  const WaveletPair gd = gaussian_derivative_pair();
  const double err = std::abs(gd.admissibility - oracle::kAdmissibilityGaussDerivative);
  bool forms_ok = true;
  std::string forms;
  for (const char* name : {"gaussian-derivative", "morlet"}) {
    const WaveletPair p = pair_by_name(name);
    const auto f = admissibility_forms(p.chi, p.psi);
    const double rel = std::abs(f.cross - f.energy) / f.energy;
    forms_ok = forms_ok && rel <= kAdmissibilityTol;
    forms += std::string(", ") + name + " forms differ by " + num(rel, 2);
  }
  return {err <= kAdmissibilityTol && forms_ok,
          "C = " + num(gd.admissibility, 9) + " vs sqrt(pi)/2 (error " + num(err, 2) + ")" + forms};
}

Outcome wavelet_consistency() {
  const auto t0 = std::chrono::steady_clock::now();
  const Grid g = default_grid(Model::Chirp);
  const auto s = sample_clean(Model::Chirp, g);
  const MethodSpec spec(MethodKind::WaveletGlobal, {{"a_min", 0.006}, {"a_max", 0.1}, {"voices", 16}});
  const auto d = differentiate(spec, s);
  const auto r = rms_error(d, Model::Chirp, MaskMode::Interior, default_margin(spec, g));
  const double t = seconds_since(t0);
  return {r.sigma <= kWaveletSigmaMax && t < kWaveletSeconds,
          "n = " + std::to_string(g.n) + ", interior sigma " + num(r.sigma) + ", " + num(t) + " s"};
}

Outcome noise_amplification() {
  const Grid g = default_grid(Model::Chirp);
  const double amp = 0.05;
  double worst_ratio = 0.0;
  bool ok = true;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const auto d = naive_fd(SampledSignal(g, uniform_noise(g.n, amp, seed, 0)));
    for (double v : d.values()) {
      ok = ok && std::abs(v) <= 2 * amp / g.dx;
      worst_ratio = std::max(worst_ratio, std::abs(v) / (2 * amp / g.dx));
    }
  }
  return {ok, "50 seeds, max |g| / (2A/dx) = " + num(worst_ratio, 6)};
}

Outcome linearity_and_exactness() {
  const Grid g = default_grid(Model::Chirp);
  const std::vector<MethodSpec> specs = {
      MethodSpec(MethodKind::NaiveFD),
      MethodSpec(MethodKind::RectWindowFD, {{"width", 0.018}}),
      MethodSpec(MethodKind::GaussWindowFD, {{"width", 0.011}}),
      MethodSpec(MethodKind::FourierLowpassFD, {{"cutoff", 32}}),
      MethodSpec(MethodKind::FourierGaussFD, {{"width", 40}}),
      MethodSpec(MethodKind::DiffFilter, {{"cutoff", 32}}),
      MethodSpec(MethodKind::DiffGaussFilter, {{"width", 40}}),
      MethodSpec(MethodKind::WaveletGlobal, {{"a_min", 0.03}, {"a_max", 0.1}, {"voices", 16}}),
      MethodSpec(MethodKind::WaveletAdaptive, {{"slope", 20}, {"c", 18}, {"a_max", 0.1}, {"voices", 16}}),
  };
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> a(g.n), b(g.n), mix(g.n), line(g.n);
  for (std::size_t i = 0; i < g.n; ++i) {
    a[i] = u(rng);
    b[i] = u(rng);
    mix[i] = 2.0 * a[i] - 0.75 * b[i];
    line[i] = 0.3 + 1.7 * g.x(i);
  }
  double worst_lin = 0.0, worst_exact = 0.0;
  for (const auto& spec : specs) {
    const double margin = default_margin(spec, g);
    const auto da = differentiate(spec, SampledSignal(g, a));
    const auto db = differentiate(spec, SampledSignal(g, b));
    const auto dm = differentiate(spec, SampledSignal(g, mix));
    const auto dl = differentiate(spec, SampledSignal(g, line));
    double err = 0.0, norm = 0.0;
    for (std::size_t i = 0; i < g.n; ++i) {
      if (g.x(i) < margin || g.x(i) > 1.0 - margin) continue;
      const double expect = 2.0 * da[i] - 0.75 * db[i];
      err = std::max(err, std::abs(dm[i] - expect));
      norm = std::max(norm, std::abs(expect));
      worst_exact = std::max(worst_exact, std::abs(dl[i] - 1.7) / 1.7);
    }
    worst_lin = std::max(worst_lin, err / norm);
  }
  return {worst_lin <= kLinearTol && worst_exact <= kLinearTol,
          "9 kinds, linearity " + num(worst_lin, 2) + ", linear-signal error " + num(worst_exact, 2)};
}

// Table 1 run shared by criteria 7-11.
struct TableRun {
  Table1Report report;
  double seconds;
  unsigned jobs;
};

const TableRun& table_run() {
  static const TableRun run = [] {
    const auto t0 = std::chrono::steady_clock::now();
    Table1Options opt;
    opt.jobs = jobs_from_env();
    const auto seeds = ensemble(0.0, kEnsemble);
    TableRun r{table1_report(seeds, opt), 0.0, opt.jobs};
    r.seconds = seconds_since(t0);
    return r;
  }();
  return run;
}

const SweepResult& row(MethodKind k, Model m) {
  for (const auto& r : table_run().report.rows) {
    if (r.entry->kind == k && r.entry->model == m) return r.result;
  }
  std::fprintf(stderr, "missing table row\n");
  std::abort();
}

bool within(double value, double reference, double rel) {
  return std::abs(value - reference) <= rel * reference;
}

std::string short_name(MethodKind k) {
  switch (k) {
    case MethodKind::RectWindowFD: return "Rect";
    case MethodKind::GaussWindowFD: return "Gauss";
    case MethodKind::FourierLowpassFD: return "FLP";
    case MethodKind::FourierGaussFD: return "FG";
    case MethodKind::DiffFilter: return "DF";
    case MethodKind::DiffGaussFilter: return "DG";
    case MethodKind::WaveletGlobal: return "WG";
    case MethodKind::WaveletAdaptive: return "WA";
    default: return std::string(to_string(k));
  }
}

Outcome sigma_checks(Model model, const std::vector<std::pair<MethodKind, double>>& targets, std::string& detail) {
  bool ok = true;
  for (const auto& [k, ref] : targets) {
    const double s = row(k, model).sigma_opt();
    const bool good = within(s, ref, kRefSigmaTol);
    ok = ok && good;
    detail += " " + short_name(k) + " " + num(s) + "/" + num(ref, 2) + (good ? "" : "(x)");
  }
  return {ok, detail};
}

Outcome table_example1() {
  using K = MethodKind;
  std::string detail;
  Outcome o = sigma_checks(Model::Chirp,
                           {{K::RectWindowFD, 0.42}, {K::GaussWindowFD, 0.31}, {K::FourierLowpassFD, 0.16},
                            {K::FourierGaussFD, 0.16}, {K::DiffFilter, 0.18}, {K::DiffGaussFilter, 0.3},
                            {K::WaveletGlobal, 0.15}},
                           detail);
  const double wa = row(K::WaveletAdaptive, Model::Chirp).sigma_opt();
  const double wg = row(K::WaveletGlobal, Model::Chirp).sigma_opt();
  const bool adaptive_ok = wa <= wg && within(wa, 0.12, kRefSigmaTol);
  detail += " WA " + num(wa) + "/0.12" + (adaptive_ok ? "" : "(x)") + " (WA <= WG: " + (wa <= wg ? "yes" : "no") + ")";
  detail += "; " + num(table_run().seconds) + " s on " +
            (table_run().jobs ? std::to_string(table_run().jobs) : std::string("all")) + " workers";
  return {o.pass && adaptive_ok, "sigma/ref:" + detail};
}

Outcome table_example2() {
  using K = MethodKind;
  std::string detail;
  Outcome o = sigma_checks(Model::Step,
                           {{K::RectWindowFD, 0.31}, {K::GaussWindowFD, 0.25}, {K::DiffFilter, 0.27},
                            {K::DiffGaussFilter, 0.32}, {K::WaveletGlobal, 0.2}},
                           detail);
  bool fails_ok = true;
  for (K k : {K::FourierLowpassFD, K::FourierGaussFD}) {
    const double s = row(k, Model::Step).sigma_opt();
    const bool good = s > kBoundaryFailureMin;
    fails_ok = fails_ok && good;
    detail += " " + short_name(k) + " " + num(s) + ">0.5" + (good ? "" : "(x)");
  }
  return {o.pass && fails_ok, "sigma/ref:" + detail};
}

Outcome ranking() {
  using K = MethodKind;
  const Model c = Model::Chirp;
  double best_wavelet = std::min(row(K::WaveletGlobal, c).sigma_opt(), row(K::WaveletAdaptive, c).sigma_opt());
  double best_other = INFINITY;
  for (K k : {K::RectWindowFD, K::GaussWindowFD, K::FourierLowpassFD, K::FourierGaussFD, K::DiffFilter,
              K::DiffGaussFilter}) {
    best_other = std::min(best_other, row(k, c).sigma_opt());
  }
  bool ok = best_wavelet < best_other;
  std::string detail = "ex1 best wavelet " + num(best_wavelet) + " < best other " + num(best_other);
  for (Model m : {Model::Chirp, Model::Step}) {
    const double g = row(K::GaussWindowFD, m).sigma_opt();
    const double r = row(K::RectWindowFD, m).sigma_opt();
    ok = ok && g <= r;
    detail += std::string(m == c ? "; ex1" : "; ex2") + " Gauss " + num(g) + " <= Rect " + num(r);
  }
  return {ok, detail};
}

Outcome optimum_location() {
  using K = MethodKind;
  const std::vector<std::tuple<K, Model, double>> targets = {
      {K::RectWindowFD, Model::Chirp, 0.018}, {K::RectWindowFD, Model::Step, 0.14},
      {K::GaussWindowFD, Model::Chirp, 0.011}, {K::GaussWindowFD, Model::Step, 0.31},
      {K::DiffFilter, Model::Chirp, 32},       {K::DiffFilter, Model::Step, 8},
  };
  bool ok = true;
  std::string detail = "optimum/ref:";
  for (const auto& [k, m, ref] : targets) {
    const double p = row(k, m).param_opt();
    const bool good = p <= kOptimumFactor * ref && p >= ref / kOptimumFactor;
    ok = ok && good;
    detail += " " + short_name(k) + (m == Model::Chirp ? "1 " : "2 ") + num(p) + "/" + num(ref, 2) + (good ? "" : "(x)");
  }
  return {ok, detail};
}

Outcome u_shape() {
  bool ok = true;
  std::size_t count = 0;
  std::string bad;
  for (const auto& r : table_run().report.rows) {
    const auto& pts = r.result.points;
    const double lo = pts.front().sigma_mean;
    const double hi = pts.back().sigma_mean;
    const double best = r.result.sigma_opt();
    const bool good = best < lo && best < hi;
    ok = ok && good;
    ++count;
    if (!good) bad += " " + r.entry->config_name;
  }
  return {ok, std::to_string(count) + " sweeps" + (bad.empty() ? ", all with an interior minimum" : ", flat or monotone:" + bad)};
}

}  // namespace

int main(int argc, char** argv) {
  const std::map<int, std::pair<const char*, std::function<Outcome()>>> criteria = {
      {1, {"spectral round trip", spectral_round_trip}},
      {2, {"spectral derivative exactness", spectral_derivative}},
      {3, {"admissibility constant", admissibility}},
      {4, {"wavelet derivative consistency", wavelet_consistency}},
      {5, {"noise amplification bound", noise_amplification}},
      {6, {"linearity and linear exactness", linearity_and_exactness}},
      {7, {"table 1 example 1", table_example1}},
      {8, {"table 1 example 2", table_example2}},
      {9, {"ranking", ranking}},
      {10, {"optimum localization", optimum_location}},
      {11, {"U-shaped sweeps", u_shape}},
  };
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) {
    const int c = std::atoi(argv[i]);
    if (!criteria.contains(c)) {
      std::fprintf(stderr, "unknown criterion '%s'\n", argv[i]);
      return 2;
    }
    selected.insert(c);
  }
  if (selected.empty()) {
    for (const auto& [id, _] : criteria) selected.insert(id);
  }
  int failures = 0;
  for (int id : selected) {
    const auto& [name, check] = criteria.at(id);
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    failures += !o.pass;
    std::printf("criterion %2d %s  %s: %s\n", id, o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
