#include <doctest.h>

#include <nlohmann/json.hpp>

#include "koszul/bar.hpp"
#include "koszul/errors.hpp"
#include "koszul/pair_ideal.hpp"

using namespace koszul;

namespace {

BarComplex plain_ring(std::vector<std::string> names, std::vector<std::string> gens) {
  PolyRing<PrimeField> R(PrimeField(), names);
  std::vector<Polynomial<PrimeField>> ps;
  for (const auto& g : gens) ps.push_back(R.parse(g));
  auto order = TermOrder::degrevlex(R.nvars());
  auto gb = buchberger_reduced(R, ps, order);
  return BarComplex(R, gb);
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t t = 1; t <= k; ++t) r = r * (n - k + t) / t;
  return r;
}

}  // namespace

TEST_CASE("standard monomials") {
  auto R = grid_ring(PrimeField(), 2, 2);
  auto gb = buchberger_reduced(R, {R.parse("x[1,1]*x[2,2] - x[1,2]*x[2,1]")}, order_iii(2, 2));
  BarComplex bar(R, gb);
  CHECK(bar.standard_monomials(0).size() == 1);
  CHECK(bar.standard_monomials(0)[0].is_one());
  CHECK(bar.hilbert(2) == 9);
  for (const auto& u : bar.standard_monomials(2))
    CHECK_FALSE(u == R.parse("x[1,1]*x[2,2]").terms()[0].mono);

  // J_{P3,P3}: 45 quadrics minus dim J_2, with dim J_2 the rank of the
  // generators' coefficient matrix.
  auto B = pair_bar_complex(Graph::path(3), Graph::path(3));
  auto R9 = grid_ring(PrimeField(), 3, 3);
  auto J = pair_ideal_generators(Graph::path(3), Graph::path(3), R9);
  std::vector<Monomial> quad;
  for (const auto& p : J)
    for (const auto& t : p.terms())
      if (std::find(quad.begin(), quad.end(), t.mono) == quad.end()) quad.push_back(t.mono);
  SparseMatrix coeffs;
  coeffs.rows = quad.size();
  coeffs.cols = J.size();
  for (const auto& p : J) {
    std::vector<std::pair<std::size_t, PrimeField::Element>> col;
    for (const auto& t : p.terms())
      col.push_back({static_cast<std::size_t>(std::find(quad.begin(), quad.end(), t.mono) - quad.begin()), t.coeff});
    std::sort(col.begin(), col.end());
    coeffs.columns.push_back(col);
  }
  CHECK(B.hilbert(2) == binomial(10, 2) - rank(coeffs, PrimeField()));
  CHECK(B.hilbert(2) == 41);
}

TEST_CASE("multiplication lands in the standard basis") {
  auto B = pair_bar_complex(Graph::path(3), Graph::path(3));
  std::size_t count = 0;
  for (const auto& u : B.standard_monomials(1))
    for (const auto& v : B.standard_monomials(1)) {
      auto t = B.multiply(u, v);
      REQUIRE(t.has_value());
      CHECK(B.ring().field().is_one(t->coeff));
      const auto& deg2 = B.standard_monomials(2);
      CHECK(std::find(deg2.begin(), deg2.end(), t->mono) != deg2.end());
      ++count;
    }
  CHECK(count == 81);

  auto R = grid_ring(PrimeField(), 2, 2);
  auto gb = buchberger_reduced(R, {R.parse("x[1,1]*x[2,2] - x[1,2]*x[2,1]")}, order_iii(2, 2));
  BarComplex bar(R, gb);
  auto t = bar.multiply(R.parse("x[1,1]").terms()[0].mono, R.parse("x[2,2]").terms()[0].mono);
  REQUIRE(t.has_value());
  CHECK(t->mono == R.parse("x[1,2]*x[2,1]").terms()[0].mono);
}

TEST_CASE("bar differential") {
  auto one = plain_ring({"x"}, {});
  auto d1 = one.differential(1, 1);
  CHECK(d1.nonzeros() == 0);
  auto d2 = one.differential(2, 2);
  CHECK(d2.cols == 1);
  CHECK(d2.rows == 1);
  CHECK(rank(d2, PrimeField()) == 1);

  auto B = pair_bar_complex(Graph::path(3), Graph::path(3));
  const PrimeField f;
  for (auto [i, j] : {std::pair{2, 2}, {3, 3}, {3, 5}, {4, 5}}) {
    auto a = B.differential(i - 1, j);
    auto b = B.differential(i, j);
    auto ab = multiply(a, b, f);
    REQUIRE(ab.has_value());
    CHECK(ab->nonzeros() == 0);
    // Every column of d has at most i - 1 entries.
    for (const auto& c : b.columns) CHECK(c.size() <= static_cast<std::size_t>(i - 1));
  }
  CHECK(B.dimension(3, 3) == 729);
}

TEST_CASE("polynomial rings and a hypersurface") {
  for (int n = 1; n <= 3; ++n) {
    std::vector<std::string> names;
    for (int v = 0; v < n; ++v) names.push_back("y" + std::to_string(v));
    auto B = plain_ring(names, {});
    for (int i = 0; i <= 3; ++i)
      for (int j = i; j <= 4; ++j) CHECK(B.betti(i, j) == (i == j ? binomial(n, i) : 0));
  }
  // K[x,y]/(x^2) has Poincaré series (1+t)/(1-t).
  auto H = plain_ring({"x", "y"}, {"x^2"});
  for (int i = 1; i <= 3; ++i) CHECK(H.betti(i, i) == 2);
  auto probe = koszul_probe(H, 3, 4);
  CHECK_FALSE(probe.nonzero.has_value());
  CHECK_FALSE(probe.stopped_by_cap.has_value());
  CHECK(H.dd_failures() == 0);
}

TEST_CASE("Betti numbers of the double path ring") {
  auto B = pair_bar_complex(Graph::path(3), Graph::path(3));
  CHECK(B.betti(0, 0) == 1);
  CHECK(B.betti(1, 1) == 9);
  CHECK(B.betti(1, 2) == 0);
  CHECK(B.betti(2, 2) == 40);
  CHECK(B.betti(2, 2) == binomial(9, 2) + 4);
  CHECK(B.betti(3, 3) == 120);
  CHECK(B.betti(3, 4) == 0);
  CHECK(B.betti(3, 5) == 2);
  CHECK(B.dd_checked() > 0);
  CHECK(B.dd_failures() == 0);
  CHECK(B.last_block_count() > 1);

  // Second characteristic.
  auto C = pair_bar_complex(Graph::path(3), Graph::path(3), 10007);
  for (auto [i, j] : {std::pair{2, 2}, {3, 3}, {3, 4}, {3, 5}}) CHECK(C.betti(i, j) == B.betti(i, j));

  auto probe = koszul_probe(B, 3, 5);
  REQUIRE(probe.nonzero.has_value());
  CHECK(*probe.nonzero == std::make_pair(3, 5));
}

TEST_CASE("caps and tables") {
  BarLimits tiny;
  tiny.max_dimension = 100;
  auto B = pair_bar_complex(Graph::path(3), Graph::path(3), PrimeField::kDefaultPrime, tiny);
  CHECK(B.betti(1, 1) == 9);
  CHECK_THROWS_AS(B.betti(3, 5), CapExceeded);
  auto probe = koszul_probe(B, 3, 5);
  CHECK(probe.stopped_by_cap.has_value());
  CHECK_FALSE(probe.nonzero.has_value());

  BettiTable t;
  t.values[{0, 0}] = 1;
  t.values[{1, 1}] = 9;
  t.values[{3, 5}] = 2;
  t.values[{3, 4}] = 0;
  auto j = nlohmann::json::parse(t.to_json());
  CHECK(j["3,5"] == 2);
  CHECK(j["0,0"] == 1);
  auto text = t.to_text();
  CHECK(text.find("    2:") != std::string::npos);
}

TEST_CASE("Koszul pair probe at low degree") {
  auto B = pair_bar_complex(Graph::path(4), Graph::complete(3));
  auto probe = koszul_probe(B, 3, 4);
  CHECK_FALSE(probe.nonzero.has_value());
  CHECK_FALSE(probe.stopped_by_cap.has_value());
  CHECK(B.betti(1, 1) == 12);
}
