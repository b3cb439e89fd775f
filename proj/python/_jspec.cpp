// Python bindings. Documents cross the boundary as JSON text in the same
// schemas the command-line tool uses.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "jspec/checks.hpp"
#include "jspec/dayconv.hpp"
#include "jspec/equivalence.hpp"
#include "jspec/io.hpp"
#include "jspec/spectra.hpp"
#include "jspec/topo.hpp"

namespace py = pybind11;
using namespace jspec;

namespace {

using Pair = std::pair<std::size_t, std::size_t>;

JObject obj(const Pair& p) { return {p.first, p.second}; }
Window win(const Pair& p) { return {p.first, p.second}; }
std::string dump(const Json& j) { return dump_json(j); }

JFunctor any_functor(const std::string& text) {
  const Json j = parse_json(text);
  if (schema_of(j) == "tdatum.v1") return tdatum_to_functor(tdatum_from_json(j));
  return jfunctor_from_json(j);
}

}  // namespace

PYBIND11_MODULE(_jspec, m) {
  m.doc() = "Combinatorics of the category J, T-data, Day convolution and prolonged spectra";
  py::register_exception<SchemaError>(m, "SchemaError", PyExc_ValueError);

  m.def("count_hom", [](Pair a, Pair b) { return count_hom(obj(a), obj(b)); }, py::arg("src"), py::arg("dst"));
  m.def("enumerate_hom", [](Pair a, Pair b) {
    Json out = Json::array();
    for (const auto& f : enumerate_hom(obj(a), obj(b))) out.push_back(to_json(f));
    return dump(out);
  }, py::arg("src"), py::arg("dst"));
  m.def("compose", [](const std::string& g, const std::string& f) {
    return dump(to_json(compose_j(morphism_from_json(parse_json(g)), morphism_from_json(parse_json(f)))));
  }, py::arg("g"), py::arg("f"));
  m.def("decompose", [](const std::string& f) {
    const Decomposition d = decompose(morphism_from_json(parse_json(f)));
    return dump({{"a", to_json(d.a)}, {"b", to_json(d.b)}, {"p", d.p}});
  }, py::arg("f"));

  m.def("validate_functor", [](const std::string& F) {
    return dump(to_json(validate_functor(jfunctor_from_json(parse_json(F)))));
  });
  m.def("validate_tdatum", [](const std::string& D) {
    return dump(to_json(validate_tdatum(tdatum_from_json(parse_json(D)))));
  });
  m.def("tdatum_to_functor", [](const std::string& D) {
    return dump(to_json(tdatum_to_functor(tdatum_from_json(parse_json(D))).materialize()));
  });
  m.def("functor_to_tdatum", [](const std::string& F) {
    return dump(to_json(functor_to_tdatum(jfunctor_from_json(parse_json(F)))));
  });
  m.def("random_tdatum", [](Pair w, std::uint64_t seed) { return dump(to_json(random_tdatum(win(w), seed))); },
        py::arg("window"), py::arg("seed") = kDefaultSeed);

  m.def("day_convolve", [](const std::string& X, const std::string& Y, Pair at, bool classes) {
    return dump(to_json(day_convolve(any_functor(X), any_functor(Y), obj(at)), classes));
  }, py::arg("X"), py::arg("Y"), py::arg("at"), py::arg("classes") = false);
  m.def("compare_monoidal", [](const std::string& X, const std::string& Y, Pair at) {
    return dump(to_json(compare_monoidal(any_functor(X), any_functor(Y), obj(at)).report));
  }, py::arg("X"), py::arg("Y"), py::arg("at"));

  m.def("prolong", [](const std::string& D, const std::vector<std::string>& K) {
    return dump(to_json(f_K_spt(tdatum_from_json(parse_json(D)), FinCarrier(K))));
  }, py::arg("datum"), py::arg("K"));
  m.def("validate_spectrum", [](const std::string& S, std::size_t p_max) {
    return dump(to_json(validate_spectrum(spectrum_from_json(parse_json(S)), p_max)));
  }, py::arg("spectrum"), py::arg("p_max") = 2);

  m.def("components", [](Pair w) {
    std::map<std::pair<std::size_t, std::size_t>, long> out;
    for (const auto& [a, d] : components(win(w))) out.emplace(std::make_pair(a.m, a.n), d);
    return out;
  }, py::arg("window"));
  m.def("components_dot", [](Pair w) { return components_dot(win(w)); }, py::arg("window"));

  m.def("run_suite", [](Pair w, std::uint64_t seed, std::size_t samples) {
    std::vector<Report> reports;
    {
      py::gil_scoped_release release;
      reports = run_suite({win(w), seed, samples});
    }
    Json out = Json::array();
    for (const auto& r : reports) out.push_back(to_json(r));
    return dump(out);
  }, py::arg("window") = Pair{2, 2}, py::arg("seed") = kDefaultSeed, py::arg("samples") = 5);
}
