#include "koszul/fixtures.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

#include "koszul/errors.hpp"
#include "koszul/koszul.hpp"
#include "koszul/pair_ideal.hpp"

namespace koszul {

namespace {

using Poly = Polynomial<PrimeField>;
using Outcome = std::pair<bool, std::string>;

std::string status_name(FixtureStatus s) {
  switch (s) {
    case FixtureStatus::Pass: return "pass";
    case FixtureStatus::Fail: return "FAIL";
    case FixtureStatus::Skipped: return "skipped";
  }
  return "?";
}

std::vector<Poly> sorted_monic(const PolyRing<PrimeField>& R, std::vector<Poly> v, const TermOrder& o) {
  for (auto& p : v) p = R.monic(p, o);
  std::sort(v.begin(), v.end());
  return v;
}

// Graph with the triangle on 2,3,4 and pendant edges {1,2}, {3,5}, {4,6}.
Graph labeled_net() { return Graph(6, {{2, 3}, {2, 4}, {3, 4}, {1, 2}, {3, 5}, {4, 6}}); }

}  // namespace

GbEngine default_gb_engine() {
  return [](const PolyRing<PrimeField>& R, const std::vector<Poly>& gens, const TermOrder& o, const GbLimits& l) {
    return buchberger_reduced(R, gens, o, l);
  };
}

bool FixtureReport::any(FixtureStatus s) const {
  return std::any_of(items.begin(), items.end(), [&](const FixtureResult& r) { return r.status == s; });
}

std::string FixtureReport::to_text() const {
  std::size_t width = 0;
  for (const auto& r : items) width = std::max(width, r.name.size());
  std::ostringstream out;
  for (const auto& r : items) {
    out << r.name << std::string(width - r.name.size() + 2, ' ') << status_name(r.status);
    if (!r.detail.empty()) out << "  " << r.detail;
    out << "\n";
  }
  std::size_t pass = 0, fail = 0, skip = 0;
  for (const auto& r : items)
    (r.status == FixtureStatus::Pass ? pass : r.status == FixtureStatus::Fail ? fail : skip)++;
  out << pass << " passed, " << fail << " failed, " << skip << " skipped\n";
  return out.str();
}

std::string FixtureReport::to_json() const {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& r : items) j.push_back({{"name", r.name}, {"status", status_name(r.status)}, {"detail", r.detail}});
  return j.dump(2);
}

FixtureReport verify_fixture_suite(const FixtureConfig& cfg) {
  FixtureReport report;
  auto run = [&](const std::string& name, const std::function<Outcome()>& body) {
    FixtureResult r;
    r.name = name;
    try {
      auto [ok, detail] = body();
      r.status = ok ? FixtureStatus::Pass : FixtureStatus::Fail;
      r.detail = detail;
    } catch (const CapExceeded& e) {
      r.status = FixtureStatus::Skipped;
      r.detail = std::string("skipped: cap (") + e.what() + ")";
    } catch (const std::exception& e) {
      r.status = FixtureStatus::Fail;
      r.detail = e.what();
    }
    report.items.push_back(std::move(r));
  };
  const PrimeField field(cfg.prime);
  CheckConfig check;
  check.prime = cfg.prime;
  check.gb = cfg.gb;

  // 3x3 colon lemma.
  const auto R33 = grid_ring(field, 3, 3);
  const auto lex33 = order_iii(3, 3);
  auto mn = [&](int i, int j, int k, int l) { return minor(R33, 3, i, j, k, l); };
  const std::vector<Poly> six = {mn(1, 2, 1, 2), mn(1, 3, 1, 2), mn(2, 3, 1, 2),
                                 mn(1, 2, 1, 3), mn(1, 3, 1, 3), mn(2, 3, 1, 3)};
  std::vector<Poly> nine;
  for (auto [i, j] : {std::pair{1, 2}, {1, 3}, {2, 3}})
    for (auto [k, l] : {std::pair{1, 2}, {1, 3}, {2, 3}}) nine.push_back(mn(i, j, k, l));
  const Poly x3 = R33.variable(Grid{3, 3}.index(3, 1));

  run("colon lemma: reduced GB", [&]() -> Outcome {
    auto expect = six;
    expect.push_back(R33.mul(R33.variable(Grid{3, 3}.index(2, 1)), mn(1, 2, 2, 3)));
    expect.push_back(R33.mul(x3, mn(1, 2, 2, 3)));
    expect.push_back(R33.mul(x3, mn(1, 3, 2, 3)));
    expect.push_back(R33.mul(x3, mn(2, 3, 2, 3)));
    auto gb = cfg.engine(R33, six, lex33, cfg.gb);
    bool ok = sorted_monic(R33, gb.elements, lex33) == sorted_monic(R33, expect, lex33);
    return {ok, std::to_string(gb.elements.size()) + " elements, max degree " + std::to_string(gb.max_degree())};
  });
  run("colon lemma: I : x3 = I2(X)", [&]() -> Outcome {
    auto colon = colon_by(R33, six, x3, lex33, cfg.gb);
    auto a = cfg.engine(R33, colon, lex33, cfg.gb), b = cfg.engine(R33, nine, lex33, cfg.gb);
    return {a.elements == b.elements, std::to_string(colon.size()) + " colon generators"};
  });
  run("colon lemma: I != I : x3", [&]() -> Outcome {
    auto colon = colon_by(R33, six, x3, lex33, cfg.gb);
    auto a = cfg.engine(R33, six, lex33, cfg.gb), b = cfg.engine(R33, colon, lex33, cfg.gb);
    return {a.elements != b.elements, ""};
  });

  run("proposition: (h1,h2) : x[2,2] = (h1,h2,g)", [&]() -> Outcome {
    const auto R = grid_ring(field, 2, 3);
    const auto o = order_iv(2, 3);
    auto h1 = minor(R, 3, 1, 2, 1, 2), h2 = minor(R, 3, 1, 2, 2, 3), g = minor(R, 3, 1, 2, 1, 3);
    auto colon = colon_by(R, {h1, h2}, R.variable(Grid{2, 3}.index(2, 2)), o, cfg.gb);
    auto a = cfg.engine(R, colon, o, cfg.gb), b = cfg.engine(R, {h1, h2, g}, o, cfg.gb);
    return {a.elements == b.elements, "g = " + R.format(g, &o)};
  });

  run("net labeling: induced graph on [5] is closed", [&]() -> Outcome {
    const Graph h = labeled_net();
    const Graph h5 = h.induced({1, 2, 3, 4, 5});
    auto lab = closed_labeling(h5);
    if (!lab) return {false, "no closed labeling"};
    const Graph c = relabel(h5, lab->labeling);
    bool quad = quadratic_under_lex(c, Graph::complete(3), check);
    bool not_closed_as_given = !verify_closed_labeling(h5, Labeling::identity(5));
    return {quad && certificate_kind(is_closed(h)) == "net",
            std::string("closed labeling ") + nlohmann::json(lab->labeling.perm()).dump() +
                (not_closed_as_given ? ", given labels not closed" : "")};
  });
  run("net pair (H1, K3) is not Koszul", [&]() -> Outcome {
    auto v = decide_pair(labeled_net(), Graph::complete(3));
    return {v.status == PairStatus::NotKoszul && certificate_kind(v.cert1) == "net",
            to_string(v.status) + ", " + certificate_kind(v.cert1) + " on " +
                nlohmann::json(witness_vertices(v.cert1)).dump()};
  });

  auto theorem_instance = [&](const std::string& name, const Graph& g1, const Graph& g2, PairStatus expect) {
    run(name, [&, g1, g2, expect]() -> Outcome {
      auto v = decide_pair(g1, g2);
      auto r = cross_check(g1, g2, v, check);
      bool algebra = expect == PairStatus::Koszul
                         ? (r.gb_lex_quadratic && r.gb_revlex_quadratic && r.linear_quotients_ok)
                         : (!r.gb_lex_quadratic && !r.gb_revlex_quadratic && !r.linear_quotients_ok);
      return {v.status == expect && r.consistent && algebra && r.lex_performed && r.revlex_performed &&
                  r.quotients_performed,
              to_string(v.status) + ", reason: " + v.reason};
    });
  };
  theorem_instance("pair theorem: (P4, K3) Koszul", Graph::path(4), Graph::complete(3), PairStatus::Koszul);
  theorem_instance("pair theorem: (P3, P3) not Koszul", Graph::path(3), Graph::path(3), PairStatus::NotKoszul);
  theorem_instance("pair theorem: (K3, K3) Koszul", Graph::complete(3), Graph::complete(3), PairStatus::Koszul);
  run("linear quotients: (P3, P3) fails at x[2,1]", [&]() -> Outcome {
    const auto R = grid_ring(field, 3, 3);
    auto rep = linear_quotients_check(Graph::path(3), Graph::path(3), R, true, cfg.gb);
    if (!rep.first_failure) return {false, "no failing step"};
    const auto& s = rep.steps[*rep.first_failure];
    const auto o = order_iv(3, 3);
    return {s.row == 2 && s.col == 1 && s.witness && s.witness->degree() == 3,
            "x[" + std::to_string(s.row) + "," + std::to_string(s.col) + "], witness " +
                (s.witness ? R.format(*s.witness, &o) : std::string("none"))};
  });
  run("c-universal: (K4, K5) yes, (P3, K3) obstructed", [&]() -> Outcome {
    auto a = c_universal_classify(Graph::complete(4), Graph::complete(5), check);
    auto b = c_universal_classify(Graph::path(3), Graph::complete(3), check);
    return {a.universal && !b.universal && b.obstruction && b.obstruction->verified(),
            b.obstruction ? "g = " + b.obstruction->minor + ", times " + b.obstruction->multiplier : ""};
  });

  // Betti table of the double path ring.
  std::optional<BarComplex> bar;
  auto betti_item = [&](int i, int j, std::size_t expect) {
    run("betti " + std::to_string(i) + "," + std::to_string(j) + " = " + std::to_string(expect), [&]() -> Outcome {
      if (!bar) bar.emplace(pair_bar_complex(Graph::path(3), Graph::path(3), cfg.prime, cfg.bar, cfg.gb));
      std::size_t got = bar->betti(i, j);
      return {got == expect && bar->dd_failures() == 0, "computed " + std::to_string(got)};
    });
  };
  betti_item(0, 0, 1);
  betti_item(1, 1, 9);
  betti_item(2, 2, 40);
  betti_item(3, 3, 120);
  betti_item(3, 4, 0);
  betti_item(3, 5, 2);
  if (cfg.stretch) {
    betti_item(4, 4, 280);
    betti_item(4, 6, 24);
    betti_item(5, 5, 552);
    betti_item(5, 7, 148);
  }
  return report;
}

}  // namespace koszul
