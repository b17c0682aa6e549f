#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cdv/report.hpp"

namespace py = pybind11;

namespace {

cdv::SingularityType type_of(const std::string& name) { return cdv::parse_type(name); }

std::string analyze_json(const std::string& text, std::uint64_t seed, std::optional<int> truncation,
                         std::optional<int> max_weight) {
  cdv::AnalysisOptions opts;
  opts.seed = seed;
  opts.truncation_degree = truncation;
  opts.max_coord = max_weight;
  return cdv::analysis_json(cdv::analyze(cdv::parse_polynomial(text), opts)).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Discrepancy-one weighted blowups over cDV points";

  py::register_exception<cdv::ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<cdv::NormalFormError>(m, "NormalFormError", PyExc_ValueError);

  m.def("normalize", [](const std::string& text) { return cdv::parse_polynomial(text).to_string(); },
        "Parse a polynomial in x, y, z, t and print it back in canonical order.");
  m.def(
      "classify",
      [](const std::string& text, std::optional<int> truncation) {
        return cdv::classify_type(cdv::parse_polynomial(text), truncation).to_string();
      },
      py::arg("polynomial"), py::arg("truncation") = py::none());
  m.def("analyze_json", &analyze_json, py::arg("polynomial"), py::arg("seed") = 0,
        py::arg("truncation") = py::none(), py::arg("max_weight") = py::none());
  m.def(
      "lemmas_json", [](const std::string& type, int max_m) { return cdv::lemmas_json(type_of(type), max_m).dump(); },
      py::arg("type"), py::arg("max_m") = 32);
  m.def("candidate_weights", [](const std::string& type) {
    std::vector<std::array<int, 4>> out;
    for (const auto& w : cdv::candidate_weights(type_of(type))) out.push_back(w.values());
    return out;
  });
  m.def(
      "weights",
      [](const std::string& text, std::optional<int> max_coord) {
        const auto d = cdv::build_diagram(cdv::parse_polynomial(text));
        std::vector<std::array<int, 4>> out;
        for (const auto& w : cdv::enumerate_weights(d, max_coord ? *max_coord : cdv::default_max_coord(d)))
          out.push_back(w.values());
        return out;
      },
      py::arg("polynomial"), py::arg("max_coord") = py::none());
  m.def("genus", [](const std::string& text) { return cdv::polygon_genus(cdv::parse_polynomial(text)).genus; },
        "Interior lattice points of the Newton polygon of a polynomial in two variables.");
  m.def(
      "corpus_json",
      [](std::uint64_t seed) {
        cdv::AnalysisOptions opts;
        opts.seed = seed;
        return cdv::corpus_json(cdv::run_corpus(cdv::generate_corpus(seed), opts)).dump();
      },
      py::arg("seed") = 0);
}
