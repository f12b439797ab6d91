#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "gisemi/embedding.hpp"
#include "gisemi/errors.hpp"
#include "gisemi/expression.hpp"
#include "gisemi/graph_io.hpp"
#include "gisemi/polycyclic.hpp"
#include "gisemi/report.hpp"
#include "gisemi/verify.hpp"

namespace py = pybind11;
using namespace gisemi;

namespace {
  Arity arity_from(py::object const& arity) {
    if (py::isinstance<py::str>(arity)) {
      auto text = arity.cast<std::string>();
      if (text != "omega") {
        throw InputError("arity must be a natural number or 'omega', got " + text);
      }
      return Arity::unbounded();
    }
    auto n = arity.cast<long long>();
    if (n < 0) {
      throw InputError("arity must be a natural number");
    }
    return Arity::finite(static_cast<std::size_t>(n));
  }

  std::string run_suite(Graph const& g, std::string const& suite, VerifyOptions const& options) {
    if (suite == "axioms") {
      return to_json(verify_axioms(g, options.max_len));
    }
    if (suite == "embedding") {
      return to_json(verify_embedding_suite(g, options.max_len));
    }
    if (suite == "p2") {
      return to_json(verify_p2(g, options.max_len));
    }
    if (suite == "confluence") {
      return to_json(verify_confluence(options));
    }
    if (suite == "topology") {
      return to_json(verify_topology(g, options.max_len, options.trunc));
    }
    if (suite == "all") {
      return to_json(verify_all(g, options));
    }
    throw InputError("unknown suite " + suite);
  }
}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Graph inverse semigroups and polycyclic monoids";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def_static(
          "builtin", [](std::string const& name) { return builtin_graph(name); }, py::arg("name"))
      .def_static(
          "from_json",
          [](std::string const& text, std::string const& label) {
            return parse_graph_json(text, label);
          },
          py::arg("text"), py::arg("label") = "")
      .def_static(
          "load", [](std::string const& path) { return load_graph_file(path); }, py::arg("path"))
      .def_property_readonly("label", &Graph::label)
      .def_property_readonly("vertex_count", &Graph::vertex_count)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def("to_json", [](Graph const& g) { return graph_to_json(g); })
      .def(
          "paths",
          [](Graph const& g, std::size_t max_len) {
            std::vector<std::string> out;
            for (auto const& p : enumerate_paths(g, max_len)) {
              out.push_back(format_path(g, p));
            }
            return out;
          },
          py::arg("max_len"))
      .def(
          "reduce",
          [](Graph const& g, std::string const& expr) {
            return format_element(g, parse_element(g, expr));
          },
          py::arg("expr"))
      .def(
          "mul",
          [](Graph const& g, std::string const& a, std::string const& b) {
            return format_element(g, gis_multiply(g, parse_element(g, a), parse_element(g, b)));
          },
          py::arg("a"), py::arg("b"))
      .def(
          "invert",
          [](Graph const& g, std::string const& expr) {
            return format_element(g, gis_invert(parse_element(g, expr)));
          },
          py::arg("expr"))
      .def(
          "embed",
          [](Graph const& g, std::string const& expr, bool p2) {
            auto spec = default_spec(g);
            auto x    = parse_element(g, expr);
            return format_poly(p2 ? embed_countable_into_p2(spec, x) : embed_element(spec, x));
          },
          py::arg("expr"), py::arg("p2") = false)
      .def(
          "verify",
          [](Graph const& g, std::string const& suite, std::size_t max_len, std::size_t trunc,
             std::uint64_t seed) {
            VerifyOptions options;
            options.max_len = max_len;
            options.trunc   = trunc;
            options.seed    = seed;
            return run_suite(g, suite, options);
          },
          py::arg("suite"), py::arg("max_len") = 3, py::arg("trunc") = 5, py::arg("seed") = 1);

  m.def(
      "poly_reduce",
      [](py::object const& arity, std::string const& word) {
        return format_poly(poly_reduce(arity_from(arity), parse_letters(word)));
      },
      py::arg("arity"), py::arg("word"));
  m.def(
      "poly_multiply",
      [](std::string const& a, std::string const& b) {
        return format_poly(poly_multiply(parse_poly(a), parse_poly(b)));
      },
      py::arg("a"), py::arg("b"));
  m.def("prefix_code_word", &prefix_code_word, py::arg("i"));
  m.def(
      "verify_confluence",
      [](std::uint64_t seed, std::size_t samples) {
        VerifyOptions options;
        options.seed               = seed;
        options.confluence_samples = samples;
        return to_json(verify_confluence(options));
      },
      py::arg("seed") = 1, py::arg("samples") = 10000);
}
