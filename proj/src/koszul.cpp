#include "koszul/koszul.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "koszul/pair_ideal.hpp"

namespace koszul {

namespace {

using json = nlohmann::ordered_json;
using PF = PrimeField;

std::string vertex_set(const std::vector<Vertex>& vs) {
  std::string s = "{";
  for (std::size_t k = 0; k < vs.size(); ++k) s += (k ? "," : "") + std::to_string(vs[k]);
  return s + "}";
}

ComponentVerdict decide_component(const Graph& g1, const Graph& g2, const std::vector<Vertex>& c1,
                                  const std::vector<Vertex>& c2) {
  ComponentVerdict v;
  v.left = c1;
  v.right = c2;
  const int m = static_cast<int>(c1.size()), n = static_cast<int>(c2.size());
  if (m == 1 || n == 1) {
    v.status = PairStatus::Koszul;
    v.reason = "single-vertex component, the factor is a polynomial ring";
    return v;
  }
  if (m == 2 || n == 2) {
    v.status = PairStatus::OutOfScope;
    v.reason = "two-vertex component, the factor is a classical binomial edge ideal";
    return v;
  }
  const Graph a = g1.induced(c1), b = g2.induced(c2);
  const bool ca = is_complete(a), cb = is_complete(b);
  auto map_back = [](const std::vector<Vertex>& local, const std::vector<Vertex>& comp) {
    std::vector<Vertex> out;
    for (Vertex x : local) out.push_back(comp[x - 1]);
    return out;
  };
  if (!ca && !cb) {
    v.status = PairStatus::NotKoszul;
    v.reason = "neither graph complete";
    auto pa = find_induced_p3(a), pb = find_induced_p3(b);
    if (pa) v.left_p3 = map_back({(*pa)[0], (*pa)[1], (*pa)[2]}, c1);
    if (pb) v.right_p3 = map_back({(*pb)[0], (*pb)[1], (*pb)[2]}, c2);
    return v;
  }
  const auto cert_a = is_closed(a), cert_b = is_closed(b);
  if (cb && is_closed_certificate(cert_a)) {
    v.status = PairStatus::Koszul;
    v.reason = ca ? "G1 complete, G2 complete" : "G1 closed, G2 complete";
    return v;
  }
  if (ca && is_closed_certificate(cert_b)) {
    v.status = PairStatus::Koszul;
    v.reason = "G1 complete, G2 closed";
    return v;
  }
  // Exactly one side is complete and the other is not closed.
  v.status = PairStatus::NotKoszul;
  const bool left_bad = cb;
  const auto& cert = left_bad ? cert_a : cert_b;
  v.obstruction_side = left_bad ? 1 : 2;
  v.obstruction_kind = certificate_kind(cert);
  v.obstruction = map_back(witness_vertices(cert), left_bad ? c1 : c2);
  v.reason = left_bad ? "G2 complete but G1 not closed (" + v.obstruction_kind + ")"
                      : "G1 complete but G2 not closed (" + v.obstruction_kind + ")";
  return v;
}

json labeling_json(const Labeling& l) { return l.perm(); }

json facets_json(const IntervalFacetList& f) {
  json out = json::array();
  for (const auto& iv : f) out.push_back({iv.lo, iv.hi});
  return out;
}

json certificate_json(const ClosednessCertificate& c) {
  json j;
  j["kind"] = certificate_kind(c);
  if (const auto* cl = std::get_if<ClosedLabeling>(&c)) {
    j["labeling"] = labeling_json(cl->labeling);
    j["facets"] = facets_json(cl->facets);
  } else {
    j["witness"] = witness_vertices(c);
  }
  return j;
}

json cross_json(const CrossCheckReport& r) {
  json j;
  j["labeling1"] = labeling_json(r.labeling1);
  j["labeling2"] = labeling_json(r.labeling2);
  auto opt_bool = [](bool performed, bool value) { return performed ? json(value) : json(nullptr); };
  j["gb_lex_quadratic"] = opt_bool(r.lex_performed, r.gb_lex_quadratic);
  j["gb_lex_max_degree"] = r.lex_performed ? json(r.lex_max_degree) : json(nullptr);
  j["gb_revlex_quadratic"] = opt_bool(r.revlex_performed, r.gb_revlex_quadratic);
  j["gb_revlex_max_degree"] = r.revlex_performed ? json(r.revlex_max_degree) : json(nullptr);
  j["linear_quotients_ok"] = opt_bool(r.quotients_performed, r.linear_quotients_ok);
  if (r.quotient_failure) {
    j["linear_quotients_failure"] = {{"variable", "x[" + std::to_string(r.quotient_failure->first) + "," +
                                                      std::to_string(r.quotient_failure->second) + "]"},
                                     {"witness", r.quotient_witness}};
  }
  if (r.exhaustive_performed)
    j["exhaustive_lex"] = {{"labelings", r.exhaustive_labelings}, {"all_non_quadratic", r.exhaustive_all_fail}};
  j["notes"] = r.notes;
  j["consistent"] = r.consistent;
  return j;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string to_string(PairStatus s) {
  switch (s) {
    case PairStatus::Koszul: return "Koszul";
    case PairStatus::NotKoszul: return "NotKoszul";
    case PairStatus::OutOfScope: return "OutOfScope";
  }
  return "?";
}

PairVerdict decide_pair(const Graph& g1, const Graph& g2) {
  PairVerdict v;
  v.cert1 = is_closed(g1);
  v.cert2 = is_closed(g2);
  for (const auto& c1 : g1.components())
    for (const auto& c2 : g2.components()) v.components.push_back(decide_component(g1, g2, c1, c2));

  const ComponentVerdict* first_bad = nullptr;
  const ComponentVerdict* first_open = nullptr;
  for (const auto& c : v.components) {
    if (c.status == PairStatus::NotKoszul && !first_bad) first_bad = &c;
    if (c.status == PairStatus::OutOfScope && !first_open) first_open = &c;
  }
  const ComponentVerdict* cite = first_bad ? first_bad : first_open;
  v.status = first_bad ? PairStatus::NotKoszul : first_open ? PairStatus::OutOfScope : PairStatus::Koszul;
  if (v.components.size() == 1)
    v.reason = v.components.front().reason;
  else if (!cite)
    v.reason = "every component pair is Koszul";
  else
    v.reason = "component pair " + vertex_set(cite->left) + " x " + vertex_set(cite->right) + ": " + cite->reason;

  v.c_universal = g1.connected() && g2.connected() && g1.vertex_count() >= 3 && g2.vertex_count() >= 3 &&
                  is_complete(g1) && is_complete(g2);
  return v;
}

std::vector<std::pair<Graph, Labeling>> distinct_relabelings(const Graph& g) {
  std::vector<Vertex> perm(g.vertex_count());
  std::iota(perm.begin(), perm.end(), 1);
  std::set<std::vector<Edge>> seen;
  std::vector<std::pair<Graph, Labeling>> out;
  do {
    Labeling lab(perm);
    Graph h = relabel(g, lab);
    if (seen.insert(h.edges()).second) out.emplace_back(std::move(h), std::move(lab));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

bool quadratic_under_lex(const Graph& g1, const Graph& g2, const CheckConfig& config) {
  const int m = g1.vertex_count(), n = g2.vertex_count();
  auto ring = grid_ring(PF(config.prime), m, n);
  GbLimits limits = config.gb;
  limits.max_degree = 2;
  try {
    buchberger_reduced(ring, pair_ideal_generators(g1, g2, ring), order_iii(m, n), limits);
    return true;
  } catch (const DegreeCapExceeded&) {
    return false;
  }
}

CrossCheckReport cross_check(const Graph& g1, const Graph& g2, const PairVerdict& verdict,
                             const CheckConfig& config) {
  CrossCheckReport r;
  const int m = g1.vertex_count(), n = g2.vertex_count();
  r.labeling1 = Labeling::identity(m);
  r.labeling2 = Labeling::identity(n);
  if (verdict.status == PairStatus::OutOfScope) {
    r.notes.push_back("verdict out of scope, no algebraic check applies");
    return r;
  }
  const bool koszul = verdict.status == PairStatus::Koszul;
  if (koszul) {
    const auto* l1 = std::get_if<ClosedLabeling>(&verdict.cert1);
    const auto* l2 = std::get_if<ClosedLabeling>(&verdict.cert2);
    if (!l1 || !l2) {
      r.notes.push_back("Koszul verdict without closed labelings on both graphs");
      r.consistent = false;
      return r;
    }
    r.labeling1 = l1->labeling;
    r.labeling2 = l2->labeling;
  }
  const Graph h1 = relabel(g1, r.labeling1), h2 = relabel(g2, r.labeling2);
  const auto ring = grid_ring(PF(config.prime), m, n);
  const auto J = pair_ideal_generators(h1, h2, ring);

  try {
    auto gb = buchberger_reduced(ring, J, order_iii(m, n), config.gb);
    r.lex_performed = true;
    r.lex_max_degree = gb.max_degree();
    r.gb_lex_quadratic = r.lex_max_degree <= 2;
  } catch (const CapExceeded& e) {
    r.notes.push_back(std::string("lex GB skipped: ") + e.what());
  }
  try {
    auto gb = buchberger_reduced(ring, J, order_iv(m, n), config.gb);
    r.revlex_performed = true;
    r.revlex_max_degree = gb.max_degree();
    r.gb_revlex_quadratic = r.revlex_max_degree <= 2;
  } catch (const CapExceeded& e) {
    r.notes.push_back(std::string("revlex GB skipped: ") + e.what());
  }
  if (g1.connected() && g2.connected()) {
    try {
      auto lq = linear_quotients_check(h1, h2, ring, true, config.gb);
      r.quotients_performed = true;
      r.linear_quotients_ok = lq.ok();
      if (lq.first_failure) {
        const auto& step = lq.steps[*lq.first_failure];
        r.quotient_failure = std::make_pair(step.row, step.col);
        if (step.witness) {
          const auto order = order_iv(m, n);
          r.quotient_witness = ring.format(*step.witness, &order);
        }
      }
    } catch (const CapExceeded& e) {
      r.notes.push_back(std::string("linear quotients skipped: ") + e.what());
    }
  } else {
    r.notes.push_back("linear quotients checked for connected graphs only");
  }

  if (!koszul) {
    if (m > config.exhaustive_max_vertices || n > config.exhaustive_max_vertices) {
      r.notes.push_back("exhaustive labelings skipped: more than " + std::to_string(config.exhaustive_max_vertices) +
                        " vertices");
    } else {
      auto d1 = distinct_relabelings(g1), d2 = distinct_relabelings(g2);
      if (d1.size() * d2.size() > config.labeling_cap) {
        r.notes.push_back("exhaustive labelings skipped: " + std::to_string(d1.size() * d2.size()) +
                          " labeling pairs exceed the cap " + std::to_string(config.labeling_cap));
      } else {
        try {
          r.exhaustive_all_fail = true;
          for (const auto& a : d1) {
            for (const auto& b : d2) {
              ++r.exhaustive_labelings;
              if (quadratic_under_lex(a.first, b.first, config)) {
                r.exhaustive_all_fail = false;
                r.notes.push_back("quadratic lex GB under labelings " + json(a.second.perm()).dump() + " and " +
                                  json(b.second.perm()).dump());
                break;
              }
            }
            if (!r.exhaustive_all_fail) break;
          }
          r.exhaustive_performed = true;
        } catch (const CapExceeded& e) {
          r.notes.push_back(std::string("exhaustive labelings skipped: ") + e.what());
        }
      }
    }
  }

  auto agrees = [&](bool performed, bool value) { return !performed || value == koszul; };
  r.consistent = agrees(r.lex_performed, r.gb_lex_quadratic) && agrees(r.revlex_performed, r.gb_revlex_quadratic) &&
                 agrees(r.quotients_performed, r.linear_quotients_ok) &&
                 (!r.exhaustive_performed || r.exhaustive_all_fail);
  return r;
}

CUniversalResult c_universal_classify(const Graph& g1, const Graph& g2, const CheckConfig& config) {
  if (!g1.connected() || !g2.connected() || g1.vertex_count() < 3 || g2.vertex_count() < 3)
    throw std::invalid_argument("c-universal classification needs connected graphs on at least 3 vertices");
  CUniversalResult out;
  const bool c1 = is_complete(g1), c2 = is_complete(g2);
  if (c1 && c2) {
    out.universal = true;
    return out;
  }
  CUniversalObstruction ob;
  ob.side = c2 ? 1 : 2;
  const Graph& bad = ob.side == 1 ? g1 : g2;
  const Graph& other = ob.side == 1 ? g2 : g1;
  auto p3 = find_induced_p3(bad);
  if (!p3) throw std::logic_error("connected non-complete graph without an induced path");
  ob.a = (*p3)[0];
  ob.b = (*p3)[1];
  ob.c = (*p3)[2];
  ob.u = other.edges().front().first;
  ob.w = other.edges().front().second;

  const int m = g1.vertex_count(), n = g2.vertex_count();
  const Grid grid{m, n};
  const auto ring = grid_ring(PF(config.prime), m, n);
  const auto order = order_iv(m, n);
  Polynomial<PF> g, h1, h2, x;
  if (ob.side == 2) {
    g = minor(ring, n, ob.u, ob.w, ob.a, ob.c);
    h1 = minor(ring, n, ob.u, ob.w, ob.a, ob.b);
    h2 = minor(ring, n, ob.u, ob.w, ob.b, ob.c);
    x = ring.variable(grid.index(ob.w, ob.b));
  } else {
    g = minor(ring, n, ob.a, ob.c, ob.u, ob.w);
    h1 = minor(ring, n, ob.a, ob.b, ob.u, ob.w);
    h2 = minor(ring, n, ob.b, ob.c, ob.u, ob.w);
    x = ring.variable(grid.index(ob.b, ob.w));
  }
  ob.minor = ring.format(g, &order);
  ob.multiplier = ring.format(x);
  auto gb = buchberger_reduced(ring, pair_ideal_generators(g1, g2, ring), order, config.gb);
  ob.product_in_ideal = ideal_contains(ring, gb, ring.mul(x, g));
  ob.minor_outside_ideal = !ideal_contains(ring, gb, g);
  auto local = colon_by(ring, {h1, h2}, x, order, config.gb);
  ob.local_colon_nonlinear = std::none_of(local.begin(), local.end(), [](const auto& p) { return p.degree() <= 1; });
  out.obstruction = ob;
  return out;
}

std::string certificate_to_json(const ClosednessCertificate& c) { return certificate_json(c).dump(); }

std::string verdict_to_json(const PairVerdict& v, const CrossCheckReport* cross) {
  json j;
  j["status"] = to_string(v.status);
  j["reason"] = v.reason;
  j["certificates"] = {{"G1", certificate_json(v.cert1)}, {"G2", certificate_json(v.cert2)}};
  j["c_universal"] = v.c_universal;
  json comps = json::array();
  for (const auto& c : v.components) {
    json cj;
    cj["G1_vertices"] = c.left;
    cj["G2_vertices"] = c.right;
    cj["status"] = to_string(c.status);
    cj["reason"] = c.reason;
    if (c.obstruction_side)
      cj["obstruction"] = {{"graph", c.obstruction_side}, {"kind", c.obstruction_kind}, {"witness", c.obstruction}};
    if (!c.left_p3.empty()) cj["G1_induced_path"] = c.left_p3;
    if (!c.right_p3.empty()) cj["G2_induced_path"] = c.right_p3;
    comps.push_back(std::move(cj));
  }
  j["components"] = std::move(comps);
  if (cross) j["cross_check"] = cross_json(*cross);
  return j.dump(2);
}

std::string verdict_to_text(const PairVerdict& v, const CrossCheckReport* cross) {
  std::ostringstream out;
  out << "status: " << to_string(v.status) << "\n";
  out << "reason: " << v.reason << "\n";
  auto cert_line = [&](const char* name, const ClosednessCertificate& c) {
    out << name << ": ";
    if (const auto* cl = std::get_if<ClosedLabeling>(&c)) {
      out << "closed, labeling " << json(cl->labeling.perm()).dump() << ", facets";
      for (const auto& f : cl->facets) out << " [" << f.lo << "," << f.hi << "]";
    } else {
      out << "not closed, " << certificate_kind(c) << " on " << vertex_set(witness_vertices(c));
    }
    out << "\n";
  };
  cert_line("G1", v.cert1);
  cert_line("G2", v.cert2);
  out << "c-universally Koszul: " << yes_no(v.c_universal) << "\n";
  if (v.components.size() > 1) {
    out << "component pairs:\n";
    for (const auto& c : v.components)
      out << "  " << vertex_set(c.left) << " x " << vertex_set(c.right) << ": " << to_string(c.status) << " ("
          << c.reason << ")\n";
  }
  for (const auto& c : v.components) {
    if (!c.left_p3.empty() && !c.right_p3.empty())
      out << "induced paths: G1 " << vertex_set(c.left_p3) << ", G2 " << vertex_set(c.right_p3) << "\n";
    if (c.obstruction_side)
      out << "obstruction in G" << c.obstruction_side << ": " << c.obstruction_kind << " on "
          << vertex_set(c.obstruction) << "\n";
  }
  if (cross) {
    const auto& r = *cross;
    auto show = [&](const char* what, bool performed, bool value, int deg) {
      out << what << ": ";
      if (!performed)
        out << "skipped";
      else
        out << yes_no(value);
      if (performed && deg >= 0) out << " (max degree " << deg << ")";
      out << "\n";
    };
    out << "cross-check labelings: G1 " << json(r.labeling1.perm()).dump() << ", G2 "
        << json(r.labeling2.perm()).dump() << "\n";
    show("quadratic lex GB", r.lex_performed, r.gb_lex_quadratic, r.lex_max_degree);
    show("quadratic revlex GB", r.revlex_performed, r.gb_revlex_quadratic, r.revlex_max_degree);
    show("linear quotients", r.quotients_performed, r.linear_quotients_ok, -1);
    if (r.quotient_failure)
      out << "  first failure at x[" << r.quotient_failure->first << "," << r.quotient_failure->second
          << "], witness " << r.quotient_witness << "\n";
    if (r.exhaustive_performed)
      out << "lex GB non-quadratic under all " << r.exhaustive_labelings
          << " distinct labelings: " << yes_no(r.exhaustive_all_fail) << "\n";
    for (const auto& note : r.notes) out << "note: " << note << "\n";
    out << "consistent: " << yes_no(r.consistent) << "\n";
  }
  return out.str();
}

}  // namespace koszul
