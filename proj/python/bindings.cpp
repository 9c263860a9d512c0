#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <tuple>
#include <vector>

#include "expann/detection.hpp"
#include "expann/expspace.hpp"
#include "expann/operators.hpp"
#include "expann/oracle.hpp"
#include "expann/subdivision.hpp"

namespace py = pybind11;
using namespace expann;

namespace {

using PyFreq = std::pair<Complex, Complex>;
using PyTerm = std::pair<Complex, PyFreq>;

FrequencyVector to_freq(const PyFreq& g) { return FrequencyVector(g.first, g.second); }
PyFreq from_freq(const FrequencyVector& g) { return {g.g1().value(), g.g2().value()}; }

ExponentialSum to_sum(const std::vector<PyTerm>& terms) {
  std::vector<Term> out;
  for (const auto& [coeff, freq] : terms) out.push_back({coeff, to_freq(freq)});
  return ExponentialSum(std::move(out));
}

std::vector<PyTerm> from_sum(const ExponentialSum& f) {
  std::vector<PyTerm> out;
  for (const Term& t : f.terms()) out.emplace_back(t.coeff, from_freq(t.freq));
  return out;
}

Axis to_axis(const std::string& name) {
  if (name == "x") return Axis::X;
  if (name == "y") return Axis::Y;
  throw Error(ErrorKind::InvalidArgument, "axis must be 'x' or 'y'");
}

oracle::FrequencyKind to_kind(const std::string& name) {
  if (name == "any") return oracle::FrequencyKind::Any;
  if (name == "real") return oracle::FrequencyKind::Real;
  if (name == "imaginary") return oracle::FrequencyKind::Imaginary;
  if (name == "mixed") return oracle::FrequencyKind::Mixed;
  throw Error(ErrorKind::InvalidArgument, "kind must be any, real, imaginary or mixed");
}

Sequence to_sequence(const std::vector<Complex>& values, int level, int origin) {
  return Sequence{level, origin, values};
}

}  // namespace

PYBIND11_MODULE(_expann, m) {
  m.doc() = "Annihilation operators, frequency detection and exponential four-point refinement";

  py::register_exception<Error>(m, "ExpannError", PyExc_ValueError);

  py::class_<GridSamples>(m, "Grid")
      .def(py::init([](int level, std::pair<int, int> origin, int width, int height,
                       std::vector<Complex> values) {
             return GridSamples(level, Window{{origin.first, origin.second}, width, height},
                                std::move(values));
           }),
           py::arg("level"), py::arg("origin"), py::arg("width"), py::arg("height"), py::arg("values"))
      .def_property_readonly("level", &GridSamples::level)
      .def_property_readonly("origin", [](const GridSamples& s) {
        return std::make_pair(s.origin().i, s.origin().j);
      })
      .def_property_readonly("width", &GridSamples::width)
      .def_property_readonly("height", &GridSamples::height)
      .def_property_readonly("values", [](const GridSamples& s) {
        return std::vector<Complex>(s.values().begin(), s.values().end());
      })
      .def("at", [](const GridSamples& s, int i, int j) { return s.at({i, j}); })
      .def("max_abs", &GridSamples::max_abs)
      .def("__repr__", [](const GridSamples& s) {
        return "Grid(level=" + std::to_string(s.level()) + ", origin=(" + std::to_string(s.origin().i) +
               ", " + std::to_string(s.origin().j) + "), width=" + std::to_string(s.width()) +
               ", height=" + std::to_string(s.height()) + ")";
      });

  py::class_<DetectionReport>(m, "DetectionReport")
      .def_property_readonly("classification",
                             [](const DetectionReport& r) { return std::string(to_string(r.classification)); })
      .def_property_readonly("gamma", [](const DetectionReport& r) { return from_freq(r.gamma); })
      .def_property_readonly("constant_axes", [](const DetectionReport& r) {
        return std::make_pair(r.constant_axis[0], r.constant_axis[1]);
      })
      .def_property_readonly("cosh", [](const DetectionReport& r) {
        std::vector<Complex> out;
        for (const CoshEstimate& e : r.estimates) out.push_back(e.value);
        return out;
      })
      .def_readonly("residual", &DetectionReport::residual)
      .def_readonly("reason", &DetectionReport::reason);

  m.def("evaluate", [](const std::vector<PyTerm>& terms, double x, double y) {
    return to_sum(terms).evaluate({x, y});
  }, py::arg("terms"), py::arg("x"), py::arg("y"));

  m.def("sample", [](const std::vector<PyTerm>& terms, int level, std::pair<int, int> origin, int width,
                     int height) {
    return sample(to_sum(terms), level, Window{{origin.first, origin.second}, width, height});
  }, py::arg("terms"), py::arg("level"), py::arg("origin"), py::arg("width"), py::arg("height"));

  m.def("symmetric_set", [](const PyFreq& g) {
    std::vector<PyFreq> out;
    for (const FrequencyVector& mu : symmetric_set(to_freq(g))) out.push_back(from_freq(mu));
    return out;
  }, py::arg("gamma"));

  m.def("delta_apply", [](const PyFreq& g, std::pair<int, int> step, const GridSamples& s) {
    return delta_apply(to_freq(g), IntegerStep(step.first, step.second), s);
  }, py::arg("gamma"), py::arg("step"), py::arg("grid"));

  m.def("chain_residual", [](const std::vector<std::pair<PyFreq, std::pair<int, int>>>& factors,
                             const GridSamples& s) {
    std::vector<DeltaFactor> chain;
    for (const auto& [g, step] : factors) chain.push_back({to_freq(g), IntegerStep(step.first, step.second)});
    return grid_residual(AnnihilatorChain(std::move(chain)), s);
  }, py::arg("factors"), py::arg("grid"));

  m.def("reduced_residual", [](const GridSamples& s, const PyFreq& g, const std::string& axis,
                               std::pair<int, int> extra_step) {
    return grid_residual(
        reduced_chain_for_symmetric_set(to_freq(g), to_axis(axis), IntegerStep(extra_step.first, extra_step.second)),
        s);
  }, py::arg("grid"), py::arg("gamma"), py::arg("axis") = "x", py::arg("extra_step") = std::make_pair(1, 1));

  m.def("detect", [](const GridSamples& s, std::optional<std::pair<int, int>> alpha, const std::string& mode,
                     double tol_den, double tol_im, double tol_res) {
    DetectionOptions opts;
    if (mode == "robust") {
      opts.mode = DetectionMode::Robust;
    } else if (mode != "single") {
      throw Error(ErrorKind::InvalidArgument, "mode must be 'single' or 'robust'");
    }
    opts.tol_den = tol_den;
    opts.tol_im = tol_im;
    opts.tol_res = tol_res;
    const Index2 base = alpha ? Index2{alpha->first, alpha->second} : s.origin() + Index2{1, 1};
    return detect(s, base, opts);
  }, py::arg("grid"), py::arg("alpha") = std::nullopt, py::arg("mode") = "single",
     py::arg("tol_den") = 1e-10, py::arg("tol_im") = 1e-9, py::arg("tol_res") = 1e-8);

  m.def("synthesize_rule", [](Complex c_half) {
    const InsertionRule r = synthesize_rule(c_half);
    return std::make_pair(r.outer, r.inner);
  }, py::arg("c_half"));

  m.def("refine", [](const std::vector<Complex>& values, int level, int origin, Complex gamma, int rounds) {
    const Sequence out = refine_with_frequency(to_sequence(values, level, origin), Frequency(gamma), rounds).data;
    return std::make_tuple(out.values, out.level, out.origin);
  }, py::arg("values"), py::arg("level"), py::arg("origin"), py::arg("gamma"), py::arg("rounds") = 1);

  m.def("auto_refine", [](const std::vector<Complex>& values, int level, int origin, int rounds) {
    const AutoRefineResult r = auto_refine(to_sequence(values, level, origin), rounds);
    return std::make_tuple(r.data.values, r.data.level, r.data.origin, r.gamma.value());
  }, py::arg("values"), py::arg("level"), py::arg("origin"), py::arg("rounds") = 1);

  m.def("random_instance", [](std::uint64_t seed, int level, const std::string& kind) {
    oracle::RandomSpec spec;
    spec.seed = seed;
    spec.level = level;
    spec.kind = to_kind(kind);
    oracle::RandomInstance inst = oracle::random_instance(spec);
    return std::make_tuple(from_freq(inst.gamma), from_sum(inst.sum), inst.grid);
  }, py::arg("seed"), py::arg("level") = 0, py::arg("kind") = "any");

  m.def("exhaustive_annihilation_check", [](const std::vector<PyTerm>& terms,
                                            const std::vector<PyFreq>& gammas, int step_bound) {
    std::vector<FrequencyVector> members;
    for (const PyFreq& g : gammas) members.push_back(to_freq(g));
    return oracle::exhaustive_annihilation_check(to_sum(terms), FrequencySet(std::move(members)), step_bound);
  }, py::arg("terms"), py::arg("gammas"), py::arg("step_bound") = 2);
}
