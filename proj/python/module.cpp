#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "srgddg/assembly.hpp"
#include "srgddg/cli.hpp"
#include "srgddg/coclique.hpp"
#include "srgddg/errors.hpp"
#include "srgddg/exact.hpp"
#include "srgddg/galois.hpp"
#include "srgddg/graph6.hpp"
#include "srgddg/io.hpp"
#include "srgddg/iso.hpp"
#include "srgddg/theory.hpp"

namespace py = pybind11;
using namespace srgddg;

namespace {

// Structured results cross the boundary as JSON text; the Python package
// decodes them.
std::string srg_json(const Graph& g) {
  auto p = srg_params(g);
  if (!p) return "null";
  return io::srg_to_json(p.value()).dump();
}

std::string decompose_json(const Graph& g, bool all, std::uint64_t budget) {
  DecomposeOptions opts;
  opts.first_only = !all;
  opts.node_budget = budget;
  auto res = decompose(g, opts);
  io::Json out{{"cocliques_examined", res.cocliques_examined},
               {"budget_exceeded", res.budget_exceeded},
               {"decompositions", io::Json::array()},
               {"outside_pattern", io::Json::array()}};
  for (const auto& d : res.decompositions) out["decompositions"].push_back(io::decomposition_to_json(d));
  for (const auto& o : res.outside_pattern)
    out["outside_pattern"].push_back(io::Json{{"coclique", o.coclique.members()}, {"ddg", io::ddg_to_json(o.params)}});
  return out.dump();
}

std::string cases_json(std::int64_t v, std::int64_t k, std::int64_t l, std::int64_t mu) {
  auto p = make_srg_params(v, k, l, mu);
  if (!p) throw Error(ErrorCode::InvalidArgument, p.error());
  io::Json out = io::Json::array();
  for (const auto& m : theory::match_cases(p.value())) {
    io::Json j{{"case", m.case_id}, {"verdict", theory::to_string(m.verdict)}, {"filter", m.filter},
               {"reason", m.reason}};
    auto put = [&](const char* key, const std::optional<std::int64_t>& x) {
      j[key] = x ? io::Json(*x) : io::Json(nullptr);
    };
    put("V", m.V);
    put("K", m.K);
    put("lambda1", m.lambda1);
    put("lambda2", m.lambda2);
    put("m", m.m);
    put("n", m.n);
    out.push_back(std::move(j));
  }
  return out.dump();
}

std::string feasible_json(std::int64_t s_min, std::int64_t s_max, std::int64_t n_max) {
  io::Json out = io::Json::array();
  for (const auto& row : theory::enumerate_feasible(s_min, s_max, n_max)) {
    const auto& f = row.family;
    out.push_back(io::Json{{"s", f.s},
                           {"n", f.n},
                           {"m", f.m},
                           {"srg", io::srg_to_json(f.srg)},
                           {"ddg", io::ddg_to_json(f.ddg)},
                           {"handshake_ok", row.handshake_ok}});
  }
  return out.dump();
}

std::vector<std::pair<std::int64_t, std::int64_t>> spectrum(const Graph& g) {
  auto s = exact::integral_spectrum(exact::IntMatrix::adjacency(g));
  if (!s) throw Error(ErrorCode::NonIntegral, "spectrum is not integral; unsplit factor " +
                                                  s.error().unsplit_factor.to_string());
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (const auto& e : s.value().entries) out.emplace_back(e.value, e.multiplicity);
  return out;
}

Graph construct(const Graph& delta, const std::vector<std::vector<int>>& classes,
                const std::vector<std::vector<int>>& blocks, const std::vector<int>& phi) {
  io::Json jc = classes;
  auto partition = io::partition_from_json(jc, delta.order());
  io::Json jd{{"v", static_cast<int>(blocks.size())}, {"blocks", blocks}};
  return construct_gamma(delta, partition, io::design_from_json(jd), phi);
}

py::tuple run_cli(const std::vector<std::string>& args, const std::string& input) {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = cli::run(args, in, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_srgddg, m) {
  m.doc() = "Strongly regular graphs, Hoffman cocliques and divisible design graphs";
  static py::exception<Error> error(m, "SrgddgError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      std::string msg = std::string(to_string(e.code())) + ": " + e.what();
      PyErr_SetString(error.ptr(), msg.c_str());
    }
  });

  py::class_<Graph>(m, "Graph")
      .def_static("from_graph6", [](const std::string& s) { return graph6::decode(s); })
      .def_static("from_edges",
                  [](int order, const std::vector<std::pair<int, int>>& edges) { return Graph::from_edges(order, edges); })
      .def("graph6", [](const Graph& g) { return graph6::encode(g); })
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("label", &Graph::label)
      .def("edges", &Graph::edges)
      .def("edge_count", &Graph::edge_count)
      .def("adjacent", &Graph::adjacent)
      .def("neighbors", [](const Graph& g, int v) { return g.neighbors(v).members(); })
      .def("complement", &Graph::complement)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "<Graph " + (g.label().empty() ? std::string("unnamed") : g.label()) + " on " +
               std::to_string(g.order()) + " vertices>";
      });

  m.def("petersen", &gen::petersen);
  m.def("triangular", &gen::triangular);
  m.def("grid", &gen::grid);
  m.def("complete", &gen::complete);
  m.def("edgeless", &gen::edgeless);
  m.def("cycle", &gen::cycle);
  m.def("path", &gen::path);
  m.def("prism", &gen::prism);
  m.def("composition", &composition);
  m.def(
      "symplectic_complement",
      [](int d, int q) {
        auto pp = theory::prime_power(q);
        if (!pp) throw Error(ErrorCode::InvalidArgument, "q is not a prime power");
        return galois::symplectic_complement(
            d, galois::FiniteField(static_cast<std::uint32_t>(pp->first), static_cast<std::uint32_t>(pp->second)));
      },
      py::arg("d"), py::arg("q"));

  m.def("_srg_params", &srg_json);
  m.def("spectrum", &spectrum, "Integral spectrum as (eigenvalue, multiplicity), descending");
  m.def(
      "hoffman_cocliques",
      [](const Graph& g) {
        auto p = srg_params(g);
        if (!p) throw Error(ErrorCode::InvalidArgument, "not a strongly regular graph");
        std::vector<std::vector<int>> out;
        for (const auto& s : hoffman_cocliques(g, p.value()).sets) out.push_back(s.members());
        return out;
      });
  m.def("_decompose", &decompose_json, py::arg("g"), py::arg("all") = true, py::arg("budget") = 100'000'000ULL);
  m.def("_match_cases", &cases_json);
  m.def("_feasible", &feasible_json);
  m.def("construct", &construct, py::arg("delta"), py::arg("classes"), py::arg("blocks"), py::arg("phi"));
  m.def("certificate", [](const Graph& g) { return canonical_form(g).certificate; });
  m.def("are_isomorphic", [](const Graph& a, const Graph& b) { return are_isomorphic(a, b); });
  m.def("run_cli", &run_cli, py::arg("args"), py::arg("stdin") = std::string());
}
