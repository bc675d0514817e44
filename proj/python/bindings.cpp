#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wavederiv/cwt.hpp"
#include "wavederiv/differentiators.hpp"
#include "wavederiv/errors.hpp"
#include "wavederiv/evaluation.hpp"
#include "wavederiv/signals.hpp"
#include "wavederiv/spectral.hpp"
#include "wavederiv/wavelet.hpp"

namespace py = pybind11;
using namespace wavederiv;

namespace {

using Array = py::array_t<double, py::array::c_style | py::array::forcecast>;

Array to_array(std::span<const double> v) {
  Array out(static_cast<py::ssize_t>(v.size()));
  std::copy(v.begin(), v.end(), out.mutable_data());
  return out;
}

SampledSignal from_array(double x0, double dx, const Array& values) {
  if (values.ndim() != 1) throw SizeError("expected a 1-d array of samples");
  const auto n = static_cast<std::size_t>(values.shape(0));
  std::vector<double> v(values.data(), values.data() + n);
  return SampledSignal(Grid(x0, dx, n), std::move(v));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Regularized numerical differentiation of noisy samples";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<ParameterError>(m, "ParameterError", base.ptr());
  py::register_exception<SizeError>(m, "SizeError", base.ptr());
  py::register_exception<InvalidWavelet>(m, "InvalidWavelet", base.ptr());
  py::register_exception<SpecError>(m, "SpecError", base.ptr());
  py::register_exception<MetricError>(m, "MetricError", base.ptr());
  py::register_exception<SweepCellError>(m, "SweepCellError", base.ptr());

  m.def("default_grid", [](const std::string& model) {
    const Grid g = default_grid(parse_model(model));
    return py::make_tuple(g.x0, g.dx, g.n);
  }, py::arg("model"), "(x0, dx, n) of the benchmark grid");

  m.def("true_derivative", [](const std::string& model, const Array& x) {
    const Model md = parse_model(model);
    Array out(x.size());
    for (py::ssize_t i = 0; i < x.size(); ++i) out.mutable_data()[i] = true_derivative(md, x.data()[i]);
    return out;
  }, py::arg("model"), py::arg("x"));

  m.def("sample", [](const std::string& model, double mu, std::uint64_t seed,
                     std::uint64_t realization, const std::string& noise_ref) {
    const Model md = parse_model(model);
    const SampledSignal s = sample_noisy(md, default_grid(md),
                                         {mu, seed, realization, parse_noise_reference(noise_ref)});
    return py::make_tuple(to_array(s.grid().abscissae()), to_array(s.values()));
  }, py::arg("model"), py::arg("mu") = 0.0, py::arg("seed") = 1, py::arg("realization") = 0,
     py::arg("noise_ref") = "max", "Benchmark samples (x, f) with uniform noise");

  m.def("differentiate", [](const std::string& method, const Array& f, double dx, double x0) {
    const MethodSpec spec = MethodSpec::parse(method);
    const SampledSignal s = from_array(x0, dx, f);
    SampledSignal g;
    {
      py::gil_scoped_release release;
      g = differentiate(spec, s);
    }
    return to_array(g.values());
  }, py::arg("method"), py::arg("f"), py::arg("dx"), py::arg("x0") = 0.0,
     "Derivative estimate on the input grid, method given as \"kind=...;param=...\"");

  m.def("rms_error", [](const Array& g, const std::string& model, double dx, double x0,
                        const std::string& mask, double margin) {
    return rms_error(from_array(x0, dx, g), parse_model(model), parse_mask_mode(mask), margin).sigma;
  }, py::arg("g"), py::arg("model"), py::arg("dx"), py::arg("x0") = 0.0,
     py::arg("mask") = "full", py::arg("margin") = 0.0);

  m.def("spectral_filter", [](const Array& f, double dx, const std::string& kind, double param) {
    static const std::map<std::string, FilterKind, std::less<>> kinds = {
        {"lowpass", FilterKind::IdealLowPass},
        {"gauss", FilterKind::GaussianLowPass},
        {"diff", FilterKind::Differentiating},
        {"diff-gauss", FilterKind::DifferentiatingGaussian}};
    const auto it = kinds.find(kind);
    if (it == kinds.end()) throw SpecError("unknown filter kind '" + kind + "'");
    const SampledSignal out = inverse(apply_filter(forward(from_array(0.0, dx, f)), {it->second, param}));
    return to_array(out.values());
  }, py::arg("f"), py::arg("dx"), py::arg("kind"), py::arg("param"));

  m.def("admissibility_constant", [](const std::string& wavelet) {
    const WaveletPair p = pair_by_name(wavelet);
    return p.admissibility;
  }, py::arg("wavelet"));

  m.def("wavelet_plane", [](const Array& f, double dx, double a_min, double a_max, int voices,
                            const std::string& wavelet) {
    const WaveletPair pair = pair_by_name(wavelet);
    const ScaleGrid scales(a_min, a_max, voices);
    const SampledSignal s = from_array(0.0, dx, f);
    const WaveletPlane plane = analyze(s, pair.chi, scales);
    const auto n = static_cast<py::ssize_t>(s.size());
    py::array_t<double> out({static_cast<py::ssize_t>(scales.size()), n});
    auto view = out.mutable_unchecked<2>();
    for (std::size_t j = 0; j < scales.size(); ++j) {
      for (py::ssize_t i = 0; i < n; ++i) view(j, i) = std::abs(plane.at(j, static_cast<std::size_t>(i)));
    }
    return py::make_tuple(to_array(scales.scales()), out);
  }, py::arg("f"), py::arg("dx"), py::arg("a_min"), py::arg("a_max"), py::arg("voices") = 16,
     py::arg("wavelet") = "morlet", "(scales, |W|) with one row per scale");

  m.def("run_sweep", [](const std::string& config, unsigned jobs) {
    const SweepSpec spec = parse_sweep_config(config);
    SweepResult r;
    {
      py::gil_scoped_release release;
      r = run_sweep(spec, jobs);
    }
    py::list points;
    for (const auto& p : r.points) {
      py::dict d;
      d["param"] = p.param;
      d["sigma_mean"] = p.sigma_mean;
      d["sigma_std"] = p.sigma_std;
      d["n"] = p.n;
      points.append(d);
    }
    return py::make_tuple(points, r.param_opt(), r.sigma_opt());
  }, py::arg("config"), py::arg("jobs") = 0,
     "Sweep from key=value config text; returns (points, param_opt, sigma_opt)");

  m.def("method_kinds", [] {
    std::vector<std::string> out;
    for (MethodKind k : all_method_kinds()) out.emplace_back(to_string(k));
    return out;
  });
}
