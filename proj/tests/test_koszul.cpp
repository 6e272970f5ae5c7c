#include <doctest.h>

#include <nlohmann/json.hpp>

#include "koszul/koszul.hpp"
#include "koszul/pair_ideal.hpp"
#include "support/graph_enum.hpp"

using namespace koszul;

TEST_CASE("decide_pair examples") {
  auto v = decide_pair(Graph::path(4), Graph::complete(3));
  CHECK(v.status == PairStatus::Koszul);
  CHECK(v.reason == "G1 closed, G2 complete");
  CHECK(is_closed_certificate(v.cert1));
  CHECK_FALSE(v.c_universal);

  v = decide_pair(net_graph(), Graph::complete(3));
  CHECK(v.status == PairStatus::NotKoszul);
  CHECK(certificate_kind(v.cert1) == "net");
  REQUIRE(v.components.size() == 1);
  CHECK(v.components[0].obstruction_side == 1);
  CHECK(v.components[0].obstruction_kind == "net");
  CHECK(v.components[0].obstruction.size() == 6);

  v = decide_pair(Graph::path(3), Graph::path(3));
  CHECK(v.status == PairStatus::NotKoszul);
  CHECK(v.reason == "neither graph complete");
  CHECK(v.components[0].left_p3 == std::vector<Vertex>{1, 2, 3});
  CHECK(v.components[0].right_p3 == std::vector<Vertex>{1, 2, 3});

  v = decide_pair(Graph::complete(3), sun_graph());
  CHECK(v.status == PairStatus::NotKoszul);
  CHECK(v.components[0].obstruction_side == 2);
  CHECK(v.components[0].obstruction_kind == "sun");

  CHECK(decide_pair(Graph::complete(4), Graph::complete(5)).c_universal);
}

TEST_CASE("components, small factors and scope") {
  // K2 factor: not decided.
  CHECK(decide_pair(Graph::complete(2), Graph::complete(3)).status == PairStatus::OutOfScope);
  // Isolated vertex pairs are polynomial-ring factors.
  Graph p3_plus_point(4, {{1, 2}, {2, 3}});
  auto v = decide_pair(p3_plus_point, Graph::complete(3));
  CHECK(v.status == PairStatus::Koszul);
  CHECK(v.components.size() == 2);
  CHECK(v.reason == "every component pair is Koszul");
  // NotKoszul beats OutOfScope.
  Graph p3_and_k2(5, {{1, 2}, {2, 3}, {4, 5}});
  v = decide_pair(p3_and_k2, Graph::path(3));
  CHECK(v.status == PairStatus::NotKoszul);
  CHECK(v.reason.find("neither graph complete") != std::string::npos);
  v = decide_pair(p3_and_k2, Graph::complete(3));
  CHECK(v.status == PairStatus::OutOfScope);
}

TEST_CASE("decide_pair invariants over small graphs") {
  std::vector<Graph> gs;
  for (int n = 1; n <= 4; ++n)
    for (auto& g : testing::all_graphs_up_to_iso(n)) gs.push_back(g);
  for (const auto& a : gs)
    for (const auto& b : gs) {
      auto v = decide_pair(a, b);
      CHECK(v.status == decide_pair(b, a).status);
      if (v.c_universal) CHECK(v.status == PairStatus::Koszul);
      for (const auto& c : v.components) {
        if (c.status == PairStatus::NotKoszul)
          CHECK((c.obstruction_side != 0 || (!c.left_p3.empty() && !c.right_p3.empty())));
        // Component Koszulness agrees with the closed/complete rule.
        if (c.left.size() >= 3 && c.right.size() >= 3) {
          Graph x = a.induced(c.left), y = b.induced(c.right);
          bool rule = (is_closed_certificate(is_closed(x)) && is_complete(y)) ||
                      (is_complete(x) && is_closed_certificate(is_closed(y)));
          CHECK((c.status == PairStatus::Koszul) == rule);
        }
      }
    }
}

TEST_CASE("cross-check agrees with the verdict") {
  {
    // The path 1-3-2-4 is not closed under its own labels.
    Graph p4(4, {{1, 3}, {2, 3}, {2, 4}});
    auto v = decide_pair(p4, Graph::complete(3));
    auto r = cross_check(p4, Graph::complete(3), v);
    CHECK(r.gb_lex_quadratic);
    CHECK(r.gb_revlex_quadratic);
    CHECK(r.linear_quotients_ok);
    CHECK(r.consistent);
    CHECK(verify_closed_labeling(p4, r.labeling1));
  }
  {
    auto v = decide_pair(Graph::path(3), Graph::path(3));
    auto r = cross_check(Graph::path(3), Graph::path(3), v);
    CHECK_FALSE(r.gb_lex_quadratic);
    CHECK(r.lex_max_degree == 4);
    CHECK_FALSE(r.linear_quotients_ok);
    REQUIRE(r.quotient_failure.has_value());
    CHECK(*r.quotient_failure == std::make_pair(2, 1));
    CHECK(r.exhaustive_performed);
    CHECK(r.exhaustive_all_fail);
    CHECK(r.consistent);
  }
  {
    auto v = decide_pair(Graph::complete(3), Graph::complete(3));
    auto r = cross_check(Graph::complete(3), Graph::complete(3), v);
    CHECK(r.gb_lex_quadratic);
    CHECK(r.gb_revlex_quadratic);
    CHECK(r.linear_quotients_ok);
    CHECK(r.consistent);
  }
  {
    auto v = decide_pair(Graph::complete(2), Graph::complete(3));
    auto r = cross_check(Graph::complete(2), Graph::complete(3), v);
    CHECK_FALSE(r.lex_performed);
    CHECK(r.consistent);
  }
  {
    // Cap on the exhaustive labeling product is reported, not fatal.
    CheckConfig cfg;
    cfg.labeling_cap = 10;
    auto v = decide_pair(Graph::path(4), Graph::path(3));
    auto r = cross_check(Graph::path(4), Graph::path(3), v, cfg);
    CHECK_FALSE(r.exhaustive_performed);
    CHECK(r.consistent);
    CHECK_FALSE(r.notes.empty());
  }
}

TEST_CASE("distinct relabelings") {
  CHECK(distinct_relabelings(Graph::complete(4)).size() == 1);
  CHECK(distinct_relabelings(Graph::path(3)).size() == 3);
  CHECK(distinct_relabelings(net_graph()).size() == 120);
}

TEST_CASE("c-universal classification") {
  CHECK(c_universal_classify(Graph::complete(4), Graph::complete(5)).universal);

  auto r = c_universal_classify(Graph::path(3), Graph::complete(3));
  CHECK_FALSE(r.universal);
  REQUIRE(r.obstruction.has_value());
  CHECK(r.obstruction->side == 1);
  CHECK(std::min(r.obstruction->a, r.obstruction->c) == 1);
  CHECK(std::max(r.obstruction->a, r.obstruction->c) == 3);
  CHECK(r.obstruction->verified());

  auto s = c_universal_classify(Graph::complete(3), Graph::path(3));
  CHECK_FALSE(s.universal);
  REQUIRE(s.obstruction.has_value());
  CHECK(s.obstruction->side == 2);
  CHECK(s.obstruction->verified());

  auto t = c_universal_classify(Graph::cycle(4), Graph::path(4));
  REQUIRE(t.obstruction.has_value());
  CHECK(t.obstruction->verified());

  CHECK_THROWS_AS(c_universal_classify(Graph::complete(2), Graph::complete(3)), std::invalid_argument);
}

TEST_CASE("verdict serialization") {
  auto v = decide_pair(net_graph(), Graph::complete(3));
  auto a = verdict_to_json(v);
  CHECK(a == verdict_to_json(decide_pair(net_graph(), Graph::complete(3))));
  auto j = nlohmann::json::parse(a);
  CHECK(j["status"] == "NotKoszul");
  CHECK(j["certificates"]["G1"]["kind"] == "net");
  CHECK(j["certificates"]["G2"]["kind"] == "closed");
  CHECK(j["certificates"]["G2"]["labeling"].size() == 3);

  auto w = decide_pair(Graph::path(3), Graph::path(3));
  auto r = cross_check(Graph::path(3), Graph::path(3), w);
  auto k = nlohmann::json::parse(verdict_to_json(w, &r));
  CHECK(k["cross_check"]["gb_lex_quadratic"] == false);
  CHECK(k["cross_check"]["linear_quotients_failure"]["variable"] == "x[2,1]");
  auto text = verdict_to_text(w, &r);
  CHECK(text.find("status: NotKoszul") != std::string::npos);
  CHECK(text.find("consistent: yes") != std::string::npos);
}
