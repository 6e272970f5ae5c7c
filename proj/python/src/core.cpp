// Python bindings: graphs as a class, everything structured comes back as
// dicts decoded from the library's JSON.

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "koszul/bar.hpp"
#include "koszul/errors.hpp"
#include "koszul/fixtures.hpp"
#include "koszul/graph.hpp"
#include "koszul/graph_io.hpp"
#include "koszul/koszul.hpp"
#include "koszul/pair_ideal.hpp"

namespace py = pybind11;
using namespace koszul;

namespace {

py::object loads(const std::string& s) { return py::module_::import("json").attr("loads")(s); }

GbLimits gb_limits(std::size_t cap) {
  GbLimits l;
  l.max_elements = cap;
  return l;
}

TermOrder pick_order(const std::string& name, int m, int n) {
  if (name == "lex") return order_iii(m, n);
  if (name == "revlex") return order_iv(m, n);
  throw std::invalid_argument("order must be 'lex' or 'revlex', got '" + name + "'");
}

template <class F>
std::vector<std::string> format_all(const PolyRing<F>& R, const std::vector<Polynomial<F>>& ps, const TermOrder& o) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(R.format(p, &o));
  return out;
}

template <class F>
std::vector<std::string> gb_of_pair(const F& field, const Graph& g1, const Graph& g2, const std::string& order,
                                    std::size_t cap) {
  const int m = g1.vertex_count(), n = g2.vertex_count();
  const auto R = grid_ring(field, m, n);
  const auto o = pick_order(order, m, n);
  return format_all(R, buchberger_reduced(R, pair_ideal_generators(g1, g2, R), o, gb_limits(cap)).elements, o);
}

template <class F>
std::vector<std::string> colon_in_grid(const F& field, int m, int n, const std::vector<std::string>& gens,
                                       const std::string& by, const std::string& order, std::size_t cap) {
  const auto R = grid_ring(field, m, n);
  const auto o = pick_order(order, m, n);
  std::vector<Polynomial<F>> ps;
  for (const auto& s : gens) ps.push_back(R.parse(s));
  return format_all(R, colon_by(R, ps, R.parse(by), o, gb_limits(cap)), o);
}

template <class Fn>
auto with_field(std::uint32_t p, Fn&& fn) {
  if (p == 0) return fn(RationalField());
  return fn(PrimeField(p));
}

py::dict quotients(const Graph& g1, const Graph& g2, std::uint32_t p, bool all_steps, std::size_t cap) {
  const int m = g1.vertex_count(), n = g2.vertex_count();
  const auto R = grid_ring(PrimeField(p), m, n);
  const auto o = order_iv(m, n);
  const auto rep = linear_quotients_check(g1, g2, R, !all_steps, gb_limits(cap));
  py::list steps;
  for (const auto& s : rep.steps) {
    py::dict d;
    d["variable"] = py::make_tuple(s.row, s.col);
    d["linear"] = s.linear;
    d["max_degree"] = s.max_gb_degree;
    d["linear_part"] = format_all(R, s.linear_part, o);
    d["witness"] = s.witness ? py::object(py::str(R.format(*s.witness, &o))) : py::object(py::none());
    steps.append(d);
  }
  py::dict out;
  out["ok"] = rep.ok();
  out["steps"] = steps;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Koszul pairs of graphs: closedness, pair verdicts, Groebner bases and Betti numbers";

  static py::exception<CapExceeded> cap_exc(m, "CapExceeded", PyExc_RuntimeError);
  static py::exception<ParseError> parse_exc(m, "ParseError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr e) {
    try {
      if (e) std::rethrow_exception(e);
    } catch (const CapExceeded& x) {
      PyErr_SetString(cap_exc.ptr(), x.what());
    } catch (const ParseError& x) {
      PyErr_SetString(parse_exc.ptr(), x.what());
    }
  });

  py::class_<Graph>(m, "Graph")
      .def(py::init<int, std::vector<Edge>>(), py::arg("n"), py::arg("edges") = std::vector<Edge>{})
      .def_static("complete", &Graph::complete)
      .def_static("path", &Graph::path)
      .def_static("cycle", &Graph::cycle)
      .def_static("net", &net_graph)
      .def_static("sun", &sun_graph)
      .def_static("parse", [](const std::string& text) { return parse_graph(text); })
      .def_static("read", &read_graph_file)
      .def_property_readonly("n", &Graph::vertex_count)
      .def_property_readonly("edges", &Graph::edges)
      .def("adjacent", &Graph::adjacent)
      .def("connected", &Graph::connected)
      .def("components", &Graph::components)
      .def("induced", &Graph::induced)
      .def("relabel", [](const Graph& g, std::vector<Vertex> perm) { return relabel(g, Labeling(std::move(perm))); })
      .def("to_json", &graph_to_json)
      .def("to_edge_list", &graph_to_edge_list)
      .def(py::self == py::self)
      .def("__repr__", [](const Graph& g) { return "Graph(" + graph_to_json(g) + ")"; });

  m.def("is_closed", [](const Graph& g) { return loads(certificate_to_json(is_closed(g))); },
        "Closedness certificate: a closed labeling with facets, or an obstruction.");
  m.def("closed_labeling", [](const Graph& g) -> std::optional<std::vector<Vertex>> {
    auto l = closed_labeling(g);
    if (!l) return std::nullopt;
    return l->labeling.perm();
  });
  m.def("verify_closed_labeling",
        [](const Graph& g, std::vector<Vertex> perm) { return verify_closed_labeling(g, Labeling(std::move(perm))); });
  m.def("brute_force_closed", [](const Graph& g) -> std::optional<std::vector<Vertex>> {
    auto l = brute_force_closed(g);
    if (!l) return std::nullopt;
    return l->perm();
  });

  m.def("decide_pair", [](const Graph& g1, const Graph& g2) { return loads(verdict_to_json(decide_pair(g1, g2))); });
  m.def(
      "cross_check",
      [](const Graph& g1, const Graph& g2, std::uint32_t p, std::size_t cap_gb) {
        CheckConfig c;
        c.prime = p;
        c.gb = gb_limits(cap_gb);
        const auto v = decide_pair(g1, g2);
        const auto r = cross_check(g1, g2, v, c);
        return loads(verdict_to_json(v, &r));
      },
      py::arg("g1"), py::arg("g2"), py::arg("p") = PrimeField::kDefaultPrime,
      py::arg("cap_gb") = GbLimits{}.max_elements);

  m.def(
      "groebner_basis",
      [](const Graph& g1, const Graph& g2, const std::string& order, std::uint32_t p, std::size_t cap_gb) {
        return with_field(p, [&](const auto& f) { return gb_of_pair(f, g1, g2, order, cap_gb); });
      },
      py::arg("g1"), py::arg("g2"), py::arg("order") = "lex", py::arg("p") = PrimeField::kDefaultPrime,
      py::arg("cap_gb") = GbLimits{}.max_elements, "Reduced GB of the pair ideal; p = 0 means the rationals.");
  m.def(
      "pair_generators",
      [](const Graph& g1, const Graph& g2) {
        const auto R = grid_ring(PrimeField(), g1.vertex_count(), g2.vertex_count());
        const auto o = order_iii(g1.vertex_count(), g2.vertex_count());
        return format_all(R, pair_ideal_generators(g1, g2, R), o);
      },
      py::arg("g1"), py::arg("g2"));
  m.def(
      "colon",
      [](int rows, int cols, const std::vector<std::string>& gens, const std::string& by, const std::string& order,
         std::uint32_t p, std::size_t cap_gb) {
        return with_field(p, [&](const auto& f) { return colon_in_grid(f, rows, cols, gens, by, order, cap_gb); });
      },
      py::arg("rows"), py::arg("cols"), py::arg("generators"), py::arg("by"), py::arg("order") = "lex",
      py::arg("p") = PrimeField::kDefaultPrime, py::arg("cap_gb") = GbLimits{}.max_elements,
      "Reduced GB of (I : f) in the rows x cols grid ring.");
  m.def("linear_quotients", &quotients, py::arg("g1"), py::arg("g2"), py::arg("p") = PrimeField::kDefaultPrime,
        py::arg("all_steps") = false, py::arg("cap_gb") = GbLimits{}.max_elements);

  m.def(
      "betti",
      [](const Graph& g1, const Graph& g2, int i, int j, std::uint32_t p, std::size_t cap_bar) {
        BarLimits l;
        l.max_dimension = cap_bar;
        auto bar = pair_bar_complex(g1, g2, p, l);
        return bar.betti(i, j);
      },
      py::arg("g1"), py::arg("g2"), py::arg("i"), py::arg("j"), py::arg("p") = PrimeField::kDefaultPrime,
      py::arg("cap_bar") = BarLimits{}.max_dimension);
  m.def(
      "koszul_probe",
      [](const Graph& g1, const Graph& g2, int i_max, int j_max, std::uint32_t p, std::size_t cap_bar) {
        BarLimits l;
        l.max_dimension = cap_bar;
        auto bar = pair_bar_complex(g1, g2, p, l);
        const auto r = koszul_probe(bar, i_max, j_max);
        py::dict d;
        d["nonzero"] = r.nonzero ? py::object(py::make_tuple(r.nonzero->first, r.nonzero->second)) : py::none();
        d["scanned"] = r.scanned;
        d["stopped_by_cap"] = r.stopped_by_cap ? py::object(py::str(*r.stopped_by_cap)) : py::none();
        return d;
      },
      py::arg("g1"), py::arg("g2"), py::arg("i_max"), py::arg("j_max"), py::arg("p") = PrimeField::kDefaultPrime,
      py::arg("cap_bar") = BarLimits{}.max_dimension);

  m.def(
      "verify_paper",
      [](bool stretch, std::size_t cap_bar) {
        FixtureConfig cfg;
        cfg.stretch = stretch;
        cfg.bar.max_dimension = cap_bar;
        return loads(verify_fixture_suite(cfg).to_json());
      },
      py::arg("stretch") = false, py::arg("cap_bar") = BarLimits{}.max_dimension);
}
