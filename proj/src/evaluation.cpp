#include "wavederiv/evaluation.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <thread>

#include "wavederiv/differentiators.hpp"
#include "wavederiv/errors.hpp"
#include "wavederiv/keyvalue.hpp"

namespace wavederiv {

std::string_view to_string(MaskMode mode) {
  return mode == MaskMode::Full ? "full" : "interior";
}

MaskMode parse_mask_mode(std::string_view name) {
  if (name == "full") return MaskMode::Full;
  if (name == "interior") return MaskMode::Interior;
  throw SpecError("unknown mask mode '" + std::string(name) + "' (expected full or interior)");
}

ErrorReport rms_error(const SampledSignal& estimate, Model model, MaskMode mask, double margin) {
  const Grid& grid = estimate.grid();
  const Domain domain = domain_of(model);
  if (!domain.contains(grid.x(0)) || !domain.contains(grid.x_last())) {
    throw DomainError("estimate grid [" + format_real(grid.x(0)) + ", " +
                      format_real(grid.x_last()) + "] leaves the domain of " +
                      std::string(to_string(model)));
  }
  if (mask == MaskMode::Full) margin = 0.0;
  if (!(margin >= 0.0)) throw ParameterError("mask margin must be non-negative");
  const auto truth = derivative_table(model, grid);
  const auto g = estimate.values();
  const double lo = grid.x(0) + margin * (1.0 - 1e-12);
  const double hi = grid.x_last() - margin * (1.0 - 1e-12);
  double num = 0.0;
  double den = 0.0;
  std::size_t count = 0;
  for (std::size_t i = 0; i < grid.n; ++i) {
    const double x = grid.x(i);
    if (x < lo || x > hi) continue;
    const double d = g[i] - truth[i];
    num += d * d;
    den += truth[i] * truth[i];
    ++count;
  }
  if (count == 0) throw MetricError("mask leaves no points to evaluate");
  if (den == 0.0) throw MetricError("true derivative vanishes on every evaluated point");
  return {std::sqrt(num / den), count, margin};
}

double default_margin(const MethodSpec& spec, const Grid& grid) {
  return std::min(support_margin(spec, grid), 0.1 * grid.span());
}

std::vector<double> log_space(double lo, double hi, std::size_t count) {
  if (count == 0) throw SpecError("log_space needs at least one value");
  if (!(lo > 0.0) || !(hi > 0.0)) throw SpecError("log_space bounds must be positive");
  if (count == 1) return {lo};
  std::vector<double> out(count);
  const double l0 = std::log(lo);
  const double l1 = std::log(hi);
  for (std::size_t i = 0; i < count; ++i) {
    out[i] = std::exp(l0 + (l1 - l0) * static_cast<double>(i) / static_cast<double>(count - 1));
  }
  out.front() = lo;
  out.back() = hi;
  return out;
}

void SweepSpec::validate() const {
  if (values.empty()) throw SpecError("sweep needs at least one value");
  if (seeds.empty()) throw SpecError("sweep needs at least one noise realization");
  for (double v : values) {
    if (!std::isfinite(v)) throw SpecError("sweep values must be finite");
  }
  if (values.size() > 1) {
    const bool up = values[1] > values[0];
    for (std::size_t i = 1; i < values.size(); ++i) {
      if (up ? !(values[i] > values[i - 1]) : !(values[i] < values[i - 1])) {
        throw SpecError("sweep values must be strictly monotone");
      }
    }
  }
  if (swept_param.empty()) {
    if (values.size() != 1) {
      throw SpecError("a sweep without a parameter takes exactly one value");
    }
  } else if (!method.params().contains(swept_param)) {
    throw SpecError(std::string(to_string(method.kind())) + " has no parameter '" +
                    swept_param + "' to sweep");
  }
}

Grid SweepSpec::resolved_grid() const { return grid ? *grid : default_grid(model); }

MethodSpec SweepSpec::method_at(double value) const {
  return swept_param.empty() ? method : method.with(swept_param, value);
}

std::vector<NoiseSpec> ensemble(double mu, std::size_t count, std::uint64_t seed,
                                NoiseReference reference) {
  std::vector<NoiseSpec> out;
  out.reserve(count);
  for (std::size_t r = 0; r < count; ++r) out.push_back({mu, seed, r, reference});
  return out;
}

namespace {

// Runs body(i) for i in [0, count) on up to `jobs` threads. The first
// exception (lowest index among those thrown) is rethrown.
template <class Body>
void parallel_for(std::size_t count, unsigned jobs, Body body) {
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, count));
  std::vector<std::exception_ptr> errors(count);
  auto run = [&](std::size_t i) {
    try {
      body(i);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };
  if (jobs <= 1) {
    for (std::size_t i = 0; i < count; ++i) run(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < jobs; ++w) {
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) run(i);
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

[[noreturn]] void rethrow_cell(const SweepSpec& spec, double value, const NoiseSpec& noise) {
  std::string where = "sweep cell (";
  where += spec.swept_param.empty() ? "value" : spec.swept_param;
  where += "=" + format_real(value) + ", seed=" + std::to_string(noise.seed) +
           ", realization=" + std::to_string(noise.realization) + "): ";
  try {
    throw;
  } catch (const SweepCellError&) {
    throw;
  } catch (const std::exception& e) {
    throw SweepCellError(where + e.what(), value, noise.seed, noise.realization);
  }
}

double cell_sigma(const SweepSpec& spec, const Grid& grid, const MethodSpec& method,
                  const SampledSignal& estimate) {
  const double margin = spec.mask == MaskMode::Interior ? default_margin(method, grid) : 0.0;
  return rms_error(estimate, spec.model, spec.mask, margin).sigma;
}

SweepResult aggregate(const SweepSpec& spec, std::vector<double> raw) {
  const std::size_t ns = spec.seeds.size();
  SweepResult result;
  result.raw = std::move(raw);
  for (std::size_t v = 0; v < spec.values.size(); ++v) {
    double sum = 0.0;
    for (std::size_t s = 0; s < ns; ++s) sum += result.raw[v * ns + s];
    const double mean = sum / static_cast<double>(ns);
    double ss = 0.0;
    for (std::size_t s = 0; s < ns; ++s) {
      const double d = result.raw[v * ns + s] - mean;
      ss += d * d;
    }
    const double sd = ns > 1 ? std::sqrt(ss / static_cast<double>(ns - 1)) : 0.0;
    result.points.push_back({spec.values[v], mean, sd, ns});
  }
  std::size_t best = 0;
  for (std::size_t v = 1; v < result.points.size(); ++v) {
    const auto& p = result.points[v];
    const auto& b = result.points[best];
    if (p.sigma_mean < b.sigma_mean || (p.sigma_mean == b.sigma_mean && p.param < b.param)) {
      best = v;
    }
  }
  result.optimum = best;
  return result;
}

bool is_cutoff_param(const SweepSpec& spec) {
  switch (spec.method.kind()) {
    case MethodKind::WaveletGlobal:
      return spec.swept_param == "a_min";
    case MethodKind::WaveletAdaptive:
      return spec.swept_param == "c" || spec.swept_param == "slope";
    default:
      return false;
  }
}

// Lattice holding every scale any swept value asks for. Each value's own
// lattice is a prefix of it, so per-scale terms and their partial sums match.
ScaleGrid union_lattice(const SweepSpec& spec, const Grid& grid) {
  const ScaleGrid first = method_scale_grid(spec.method_at(spec.values.front()), grid);
  double smallest = first.a_min();
  for (double v : spec.values) {
    smallest = std::min(smallest, method_scale_grid(spec.method_at(v), grid).a_min());
  }
  return ScaleGrid(smallest, first.a_max(), first.voices());
}

}  // namespace

SweepResult run_sweep_direct(const SweepSpec& spec, unsigned jobs) {
  spec.validate();
  const Grid grid = spec.resolved_grid();
  const std::size_t ns = spec.seeds.size();
  std::vector<double> raw(spec.values.size() * ns);
  parallel_for(raw.size(), jobs, [&](std::size_t cell) {
    const double value = spec.values[cell / ns];
    const NoiseSpec& noise = spec.seeds[cell % ns];
    try {
      const MethodSpec method = spec.method_at(value);
      const SampledSignal data = sample_noisy(spec.model, grid, noise);
      raw[cell] = cell_sigma(spec, grid, method, differentiate(method, data));
    } catch (...) {
      rethrow_cell(spec, value, noise);
    }
  });
  return aggregate(spec, std::move(raw));
}

SweepResult run_sweep(const SweepSpec& spec, unsigned jobs) {
  spec.validate();
  if (!is_cutoff_param(spec)) return run_sweep_direct(spec, jobs);
  const Grid grid = spec.resolved_grid();
  const std::size_t ns = spec.seeds.size();
  std::vector<double> raw(spec.values.size() * ns);
  parallel_for(ns, jobs, [&](std::size_t s) {
    const NoiseSpec& noise = spec.seeds[s];
    std::size_t v = 0;
    try {
      const ScaleGrid lattice = union_lattice(spec, grid);
      const SampledSignal data = sample_noisy(spec.model, grid, noise);
      const WaveletTerms terms = wavelet_terms(data, method_wavelet_pair(), lattice);
      for (; v < spec.values.size(); ++v) {
        const MethodSpec method = spec.method_at(spec.values[v]);
        method_scale_grid(method, grid);  // same validation as the direct path
        raw[v * ns + s] = cell_sigma(spec, grid, method, finish_wavelet(terms, method_cutoff(method)));
      }
    } catch (...) {
      rethrow_cell(spec, spec.values[std::min(v, spec.values.size() - 1)], noise);
    }
  });
  return aggregate(spec, std::move(raw));
}

std::string sweep_csv(const SweepResult& result) {
  std::string out = "param,sigma_mean,sigma_std,n\n";
  for (const auto& p : result.points) {
    out += format_real(p.param) + "," + format_real(p.sigma_mean) + "," +
           format_real(p.sigma_std) + "," + std::to_string(p.n) + "\n";
  }
  return out;
}

namespace {

std::vector<double> parse_values(std::string_view text) {
  if (text.starts_with("log:")) {
    std::vector<std::string_view> parts;
    std::string_view rest = text.substr(4);
    while (true) {
      const auto colon = rest.find(':');
      parts.push_back(rest.substr(0, colon));
      if (colon == std::string_view::npos) break;
      rest = rest.substr(colon + 1);
    }
    if (parts.size() != 3) throw SpecError("values=log:lo:hi:count expects three fields");
    const double count = parse_real(parts[2]);
    if (count < 1.0 || count != std::floor(count)) {
      throw SpecError("log value count must be a positive integer");
    }
    return log_space(parse_real(parts[0]), parse_real(parts[1]),
                     static_cast<std::size_t>(count));
  }
  std::vector<double> out;
  std::string_view rest = text;
  while (true) {
    const auto comma = rest.find(',');
    out.push_back(parse_real(rest.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return out;
}

std::uint64_t parse_count(std::string_view key, std::string_view text) {
  const double v = parse_real(text);
  if (v < 0.0 || v != std::floor(v) || v > 9.0e15) {
    throw SpecError(std::string(key) + " must be a non-negative integer");
  }
  return static_cast<std::uint64_t>(v);
}

}  // namespace

SweepSpec parse_sweep_config(std::string_view text) {
  std::optional<MethodKind> kind;
  std::map<std::string, double, std::less<>> params;
  SweepSpec spec;
  double mu = 0.0;
  std::uint64_t seed = 1;
  std::uint64_t realizations = 1;
  NoiseReference reference = NoiseReference::MaxAbs;
  bool have_values = false;
  for (const auto& [key, value] : parse_key_values(text)) {
    if (key == "kind") {
      kind = parse_method_kind(value);
    } else if (key == "sweep") {
      spec.swept_param = value;
    } else if (key == "values") {
      spec.values = parse_values(value);
      have_values = true;
    } else if (key == "model") {
      spec.model = parse_model(value);
    } else if (key == "mu") {
      mu = parse_real(value);
    } else if (key == "seed") {
      seed = parse_count(key, value);
    } else if (key == "realizations") {
      realizations = parse_count(key, value);
    } else if (key == "mask") {
      spec.mask = parse_mask_mode(value);
    } else if (key == "noise_ref") {
      reference = parse_noise_reference(value);
    } else {
      if (params.contains(key)) throw SpecError("duplicate key '" + key + "'");
      params.emplace(key, parse_real(value));
    }
  }
  if (!kind) throw SpecError("sweep config needs kind=<method>");
  if (!(mu >= 0.0)) throw SpecError("mu must be non-negative");
  if (!spec.swept_param.empty() && !params.contains(spec.swept_param)) {
    // The swept parameter may be omitted from the fixed set; seed it with the
    // first value so required-parameter checks pass.
    if (have_values && !spec.values.empty()) params.emplace(spec.swept_param, spec.values.front());
  }
  spec.method = MethodSpec(*kind, std::move(params));
  if (!have_values && spec.swept_param.empty()) spec.values = {0.0};
  spec.seeds = ensemble(mu, realizations, seed, reference);
  spec.validate();
  return spec;
}

namespace {

Table1Entry make_entry(MethodKind kind, Model model, std::string name,
                       std::map<std::string, double, std::less<>> fixed, std::string swept,
                       double lo, double hi, std::optional<double> ref_sigma,
                       std::optional<double> ref_param) {
  Table1Entry e{kind, model, std::move(name), {}, ref_sigma, ref_param};
  e.sweep.values = log_space(lo, hi, 20);
  fixed.emplace(swept, e.sweep.values.front());
  e.sweep.method = MethodSpec(kind, std::move(fixed));
  e.sweep.swept_param = std::move(swept);
  e.sweep.model = model;
  return e;
}

}  // namespace

double table1_mu(Model model) { return model == Model::Chirp ? 0.3 : 0.1; }

const std::vector<Table1Entry>& table1_entries() {
  using K = MethodKind;
  static const std::vector<Table1Entry> entries = [] {
    const Model c = Model::Chirp;
    const Model s = Model::Step;
    std::vector<Table1Entry> v;
    v.push_back(make_entry(K::RectWindowFD, c, "ex1_rect_window", {}, "width", 0.006, 0.06, 0.42, 0.018));
    v.push_back(make_entry(K::GaussWindowFD, c, "ex1_gauss_window", {}, "width", 0.0035, 0.035, 0.31, 0.011));
    v.push_back(make_entry(K::FourierLowpassFD, c, "ex1_fourier_lowpass", {{"detrend", 0}}, "cutoff", 10, 100, 0.16, std::nullopt));
    v.push_back(make_entry(K::FourierGaussFD, c, "ex1_fourier_gauss", {{"detrend", 0}}, "width", 10, 150, 0.16, std::nullopt));
    v.push_back(make_entry(K::DiffFilter, c, "ex1_diff_filter", {}, "cutoff", 10, 100, 0.18, 32));
    v.push_back(make_entry(K::DiffGaussFilter, c, "ex1_diff_gauss_filter", {}, "width", 10, 150, 0.3, std::nullopt));
    v.push_back(make_entry(K::WaveletGlobal, c, "ex1_wavelet_global", {{"a_max", 0.1}, {"voices", 16}}, "a_min", 0.0062, 0.08, 0.15, std::nullopt));
    v.push_back(make_entry(K::WaveletAdaptive, c, "ex1_wavelet_adaptive", {{"slope", 20}, {"a_max", 0.1}, {"voices", 16}}, "c", 11, 110, 0.12, std::nullopt));
    v.push_back(make_entry(K::RectWindowFD, s, "ex2_rect_window", {}, "width", 0.012, 1.4, 0.31, 0.14));
    v.push_back(make_entry(K::GaussWindowFD, s, "ex2_gauss_window", {}, "width", 0.012, 1.0, 0.25, 0.31));
    v.push_back(make_entry(K::FourierLowpassFD, s, "ex2_fourier_lowpass", {{"detrend", 0}}, "cutoff", 0.5, 1000, 0.8, std::nullopt));
    v.push_back(make_entry(K::FourierGaussFD, s, "ex2_fourier_gauss", {{"detrend", 0}}, "width", 1, 300, 0.7, std::nullopt));
    v.push_back(make_entry(K::DiffFilter, s, "ex2_diff_filter", {}, "cutoff", 1.5, 150, 0.27, 8));
    v.push_back(make_entry(K::DiffGaussFilter, s, "ex2_diff_gauss_filter", {}, "width", 1, 150, 0.32, std::nullopt));
    v.push_back(make_entry(K::WaveletGlobal, s, "ex2_wavelet_global", {{"a_max", 4}, {"voices", 16}}, "a_min", 0.015, 2, 0.2, std::nullopt));
    for (auto& e : v) e.sweep.seeds.clear();
    return v;
  }();
  return entries;
}

Table1Report table1_report(std::span<const NoiseSpec> seeds, const Table1Options& options) {
  if (seeds.empty()) throw SpecError("table1 needs at least one noise realization");
  Table1Report report;
  for (const auto& entry : table1_entries()) {
    SweepSpec sweep = entry.sweep;
    sweep.mask = options.mask;
    sweep.seeds.assign(seeds.begin(), seeds.end());
    for (auto& n : sweep.seeds) n.mu = options.mu.value_or(table1_mu(entry.model));
    report.rows.push_back({&entry, run_sweep(sweep, options.jobs)});
  }
  return report;
}

namespace {

const Table1Row* find_row(const Table1Report& report, MethodKind kind, Model model) {
  for (const auto& row : report.rows) {
    if (row.entry->kind == kind && row.entry->model == model) return &row;
  }
  return nullptr;
}

std::optional<double> ref_sigma(MethodKind kind, Model model) {
  for (const auto& e : table1_entries()) {
    if (e.kind == kind && e.model == model) return e.ref_sigma;
  }
  return std::nullopt;
}

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

}  // namespace

std::string table1_csv(const Table1Report& report) {
  std::string out = "method";
  for (const char* ex : {"ex1", "ex2"}) {
    for (const char* col : {"param_opt", "sigma_mean", "sigma_std", "sigma_ref"}) {
      out += std::string(",") + ex + "_" + col;
    }
  }
  out += "\n";
  for (MethodKind kind : all_method_kinds()) {
    if (kind == MethodKind::NaiveFD) continue;
    out += std::string(to_string(kind));
    for (Model model : {Model::Chirp, Model::Step}) {
      if (const Table1Row* row = find_row(report, kind, model)) {
        out += "," + format_real(row->result.param_opt()) + "," +
               format_real(row->result.sigma_opt()) + "," +
               format_real(row->result.sigma_std_opt()) + ",";
      } else {
        out += ",,,,";
      }
      if (auto p = ref_sigma(kind, model)) out += fixed(*p, 15);
    }
    out += "\n";
  }
  return out;
}

std::string table1_text(const Table1Report& report) {
  char line[256];
  std::string out;
  std::snprintf(line, sizeof line, "%-18s | %-34s | %-34s\n", "method",
                "example 1 (chirp, mu=0.3)", "example 2 (step, mu=0.1)");
  out += line;
  std::snprintf(line, sizeof line, "%-18s | %9s %16s %7s | %9s %16s %7s\n", "", "param",
                "sigma", "ref", "param", "sigma", "ref");
  out += line;
  out += std::string(92, '-') + "\n";
  for (MethodKind kind : all_method_kinds()) {
    if (kind == MethodKind::NaiveFD) continue;
    std::snprintf(line, sizeof line, "%-18s", std::string(to_string(kind)).c_str());
    out += line;
    for (Model model : {Model::Chirp, Model::Step}) {
      const Table1Row* row = find_row(report, kind, model);
      const auto ref = ref_sigma(kind, model);
      const std::string p = ref ? fixed(*ref, 2) : "-";
      if (row) {
        const std::string s = fixed(row->result.sigma_opt(), 3) + "+-" +
                              fixed(row->result.sigma_std_opt(), 2);
        std::snprintf(line, sizeof line, " | %9s %16s %7s", fixed(row->result.param_opt(), 4).c_str(),
                      s.c_str(), p.c_str());
      } else {
        std::snprintf(line, sizeof line, " | %9s %16s %7s", "-", "-", p.c_str());
      }
      out += line;
    }
    out += "\n";
  }
  return out;
}

}  // namespace wavederiv
