// Thin pybind11 layer. Big integers and rationals cross as decimal strings;
// the Python package turns them into int / Fraction.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "codegree/bounds.hpp"
#include "codegree/core.hpp"
#include "codegree/errors.hpp"
#include "codegree/families.hpp"
#include "codegree/props.hpp"
#include "codegree/report.hpp"
#include "codegree/search.hpp"
#include "codegree/text_format.hpp"
#include "codegree/verify.hpp"

namespace py = pybind11;
using namespace codegree;

namespace {

Hypergraph make(int n, int k, const std::vector<std::vector<int>> &edges) {
  std::vector<VertexSet> sets;
  sets.reserve(edges.size());
  for (const auto &e : edges)
    sets.push_back(VertexSet::of(e));
  return Hypergraph(n, k, std::move(sets));
}

std::vector<std::vector<int>> edge_lists(const Hypergraph &h) {
  std::vector<std::vector<int>> out;
  out.reserve(h.size());
  for (VertexSet e : h.edges())
    out.push_back(e.vertices());
  return out;
}

FamilySpec family_spec(const std::string &kind, int n, int k, int param) {
  if (kind == "empty")
    return FamilySpec::empty(n, k);
  if (kind == "complete")
    return FamilySpec::complete(n, k);
  if (kind == "star")
    return FamilySpec::star(n, k, param);
  if (kind == "b")
    return FamilySpec::b(n, k, param);
  if (kind == "hm")
    return FamilySpec::hilton_milner(n, k, param);
  if (kind == "a")
    return FamilySpec::a(n, k, param);
  if (kind == "fano")
    return FamilySpec::fano();
  throw ParameterError("unknown family kind " + kind);
}

std::string search_json(int n, int k, const std::vector<std::string> &constraints, const std::string &mode,
                        std::optional<int> nontrivial_below, bool use_l1_caps, std::uint64_t node_budget,
                        int workers) {
  SearchProblem p;
  p.n = n;
  p.k = k;
  std::vector<Constraint> parts;
  for (const auto &c : constraints)
    parts.push_back(parse_constraint(c));
  p.constraint = parts.size() == 1 ? parts.front() : Constraint::all_of(parts);
  if (mode == "brute")
    p.mode = SearchMode::BruteForce;
  else if (mode != "bnb")
    throw ParameterError("mode must be bnb or brute");
  p.nontrivial_below = nontrivial_below;
  p.use_l1_caps = use_l1_caps;
  p.limits.node_budget = node_budget;
  p.limits.workers = workers;
  SearchResult r;
  {
    py::gil_scoped_release release;
    r = max_co2(p);
  }
  Json out = search_outputs_json(r);
  out["certified"] = r.certified;
  out["stats"] = search_stats_json(r.stats);
  return out.dump();
}

std::string verify_json(const std::string &claim, int n, int k, int s, int t, bool run_search) {
  ClaimParams p;
  p.n = n;
  p.k = k;
  p.s = s;
  p.t = t;
  p.run_search = run_search;
  ClaimReport c;
  {
    py::gil_scoped_release release;
    c = verify_claim(claim, p);
  }
  Json out = claim_outputs_json(c);
  out["verdict"] = std::string(verdict_name(c.verdict));
  return out.dump();
}

} // namespace

PYBIND11_MODULE(_core, m) {
  py::register_exception<ParameterError>(m, "ParameterError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<Hypergraph>(m, "Hypergraph")
      .def(py::init(&make), py::arg("n"), py::arg("k"), py::arg("edges") = std::vector<std::vector<int>>{})
      .def_property_readonly("n", &Hypergraph::n)
      .def_property_readonly("k", &Hypergraph::k)
      .def_property_readonly("edges", &edge_lists)
      .def("__len__", &Hypergraph::size)
      .def("__eq__", [](const Hypergraph &a, const Hypergraph &b) { return a == b; })
      .def("text", &format_hypergraph)
      .def_static("parse", [](const std::string &text) { return parse_hypergraph(text); })
      .def("__repr__", [](const Hypergraph &h) {
        return "Hypergraph(n=" + std::to_string(h.n()) + ", k=" + std::to_string(h.k()) +
               ", edges=" + std::to_string(h.size()) + ")";
      });

  m.def("family", [](const std::string &kind, int n, int k, int param) { return build(family_spec(kind, n, k, param)); },
        py::arg("kind"), py::arg("n") = 7, py::arg("k") = 3, py::arg("param") = 1);
  m.def("co2", [](const Hypergraph &h) { return to_string(co2(h)); });
  m.def("square_sum", [](const Hypergraph &h, int ell) { return to_string(codegree_square_sum(h, ell)); });
  m.def("co2_star_closed", [](int n, int k, int t) { return co2_star_closed(n, k, t).str(); });
  m.def("co2_b_closed", [](int n, int k, int s) { return co2_B_closed(n, k, s).str(); });

  m.def("is_t_intersecting", [](const Hypergraph &h, int t) { return is_t_intersecting(h, t); });
  m.def("is_d_wise_t_intersecting",
        [](const Hypergraph &h, int d, int t) { return is_d_wise_t_intersecting(h, d, t); });
  m.def("matching_number", [](const Hypergraph &h) { return matching_number(h); });
  m.def("covering_number", [](const Hypergraph &h) { return covering_number(h); });
  m.def("contains_pattern", [](const Hypergraph &h, const std::string &kind, int length) {
    return contains_pattern(h, PatternSpec{parse_pattern_kind(kind), length});
  });

  m.def("bey", [](const Hypergraph &h, int ell) { return bound_report_json(check_bey(h, ell)).dump(); });
  m.def("sigma_upper", [](const std::string &pi, int k) { return to_string(sigma_upper(parse_rational(pi), k)); });

  m.def("search", &search_json, py::arg("n"), py::arg("k"), py::arg("constraints"), py::arg("mode") = "bnb",
        py::arg("nontrivial_below") = std::nullopt, py::arg("use_l1_caps") = true,
        py::arg("node_budget") = SearchLimits{}.node_budget, py::arg("workers") = 1);
  m.def("verify", &verify_json, py::arg("claim"), py::arg("n"), py::arg("k"), py::arg("s") = 2, py::arg("t") = 1,
        py::arg("run_search") = true);
  m.def("claim_names", [] {
    std::vector<std::string> out;
    for (auto name : claim_names())
      out.emplace_back(name);
    return out;
  });
}
