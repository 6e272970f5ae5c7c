#pragma once

// Binomial edge ideals of graph pairs over the m x n grid of variables x[i,j].
// Variable x[i,j] (1-based) lives at storage index (i-1)*n + (j-1).

#include <optional>
#include <string>
#include <vector>

#include "koszul/graph.hpp"
#include "koszul/groebner.hpp"
#include "koszul/polynomial.hpp"
#include "koszul/term_order.hpp"

namespace koszul {

struct Grid {
  int m = 0, n = 0;
  int index(int i, int j) const { return (i - 1) * n + (j - 1); }
  int row(int v) const { return v / n + 1; }
  int col(int v) const { return v % n + 1; }
  int size() const { return m * n; }
};

std::vector<std::string> grid_names(int m, int n);

template <class F>
PolyRing<F> grid_ring(const F& field, int m, int n) {
  return PolyRing<F>(field, grid_names(m, n));
}

/// Lex with x11 > x12 > ... > x1n > x21 > ... > xmn.
TermOrder order_iii(int m, int n);
/// Degrevlex with x1n > x2n > ... > xmn > x1,n-1 > ... > x11 > ... > xm1.
TermOrder order_iv(int m, int n);
/// x_m1, ..., x_11, x_m2, ..., x_12, ..., x_mn, ..., x_1n as storage indices.
std::vector<int> linear_quotient_sequence(int m, int n);

/// Z^{m+n} degree of a monomial: eps_i + eps_{j+m} per factor x[i,j]. Entry
/// k-1 holds the coefficient of eps_k.
std::vector<int> monomial_multidegree(const Monomial& mono, int m, int n);

/// Common multidegree of all terms, or nullopt when f is inhomogeneous. The
/// zero polynomial has none.
template <class F>
std::optional<std::vector<int>> multidegree(const Polynomial<F>& f, int m, int n) {
  if (f.is_zero()) return std::nullopt;
  auto d = monomial_multidegree(f.terms().front().mono, m, n);
  for (const auto& t : f.terms())
    if (monomial_multidegree(t.mono, m, n) != d) return std::nullopt;
  return d;
}

/// The minor [ij|kl] = x_ik x_jl - x_il x_jk.
template <class F>
Polynomial<F> minor(const PolyRing<F>& ring, int n, int i, int j, int k, int l) {
  const Grid g{ring.nvars() / n, n};
  const auto& f = ring.field();
  const std::size_t N = ring.nvars();
  auto x = [&](int a, int b) { return Monomial::variable(N, g.index(a, b)); };
  return ring.from_terms({{x(i, k) * x(j, l), f.one()}, {x(i, l) * x(j, k), f.neg(f.one())}});
}

/// p_ef for every e in E(g1), f in E(g2), ordered by (e, f).
template <class F>
std::vector<Polynomial<F>> pair_ideal_generators(const Graph& g1, const Graph& g2, const PolyRing<F>& ring) {
  const int m = g1.vertex_count(), n = g2.vertex_count();
  if (ring.nvars() != m * n)
    throw std::invalid_argument("ring has " + std::to_string(ring.nvars()) + " variables but the graphs need " +
                                std::to_string(m) + "x" + std::to_string(n));
  std::vector<Polynomial<F>> out;
  for (const auto& [i, j] : g1.edges())
    for (const auto& [k, l] : g2.edges()) out.push_back(minor(ring, n, i, j, k, l));
  return out;
}

template <class F>
struct QuotientStep {
  int row = 0, col = 0;   // the variable x[row,col] coloned by
  bool linear = false;
  int max_gb_degree = 0;  // of the colon ideal's reduced GB
  std::vector<Polynomial<F>> linear_part;  // degree-1 elements of the colon GB
  std::optional<Polynomial<F>> witness;    // lowest GB element outside J + earlier + linear_part
};

template <class F>
struct LinearQuotientsReport {
  std::vector<QuotientStep<F>> steps;
  std::optional<std::size_t> first_failure;
  bool ok() const { return !first_failure; }
};

/// Runs the linear-quotients test for the sequence of linear_quotient_sequence.
/// Step k computes Q = (J + (earlier variables)) : x and accepts when Q equals
/// J + earlier variables + the degree-1 part of Q's reduced GB (order (iv)).
template <class F>
LinearQuotientsReport<F> linear_quotients_check(const Graph& g1, const Graph& g2, const PolyRing<F>& ring,
                                                bool stop_at_failure = true, const GbLimits& limits = {}) {
  const int m = g1.vertex_count(), n = g2.vertex_count();
  const Grid grid{m, n};
  const TermOrder order = order_iv(m, n);
  const auto J = pair_ideal_generators(g1, g2, ring);
  LinearQuotientsReport<F> report;

  std::vector<char> killed(grid.size(), 0);
  std::vector<Polynomial<F>> earlier;
  for (int v : linear_quotient_sequence(m, n)) {
    // J + (V) = J|_{V=0} + (V), and (J' + (V)) : x = (J' : x) + (V) for x outside V.
    std::vector<Polynomial<F>> reduced;
    for (const auto& p : J) {
      auto q = ring.kill_variables(p, killed);
      if (!q.is_zero()) reduced.push_back(std::move(q));
    }
    auto colon = colon_by(ring, reduced, ring.variable(v), order, limits);
    colon.insert(colon.end(), earlier.begin(), earlier.end());
    auto gb = buchberger_reduced(ring, colon, order, limits);

    QuotientStep<F> step;
    step.row = grid.row(v);
    step.col = grid.col(v);
    step.max_gb_degree = gb.max_degree();
    for (const auto& g : gb.elements)
      if (g.degree() == 1) step.linear_part.push_back(g);

    auto target = reduced;
    target.insert(target.end(), earlier.begin(), earlier.end());
    target.insert(target.end(), step.linear_part.begin(), step.linear_part.end());
    auto target_gb = buchberger_reduced(ring, target, order, limits);
    step.linear = target_gb.elements == gb.elements;
    if (!step.linear) {
      for (const auto& g : gb.elements)
        if (!ideal_contains(ring, target_gb, g)) {
          step.witness = g;  // gb is sorted ascending, so this is the smallest
          break;
        }
    }
    report.steps.push_back(std::move(step));
    if (!report.steps.back().linear && !report.first_failure) {
      report.first_failure = report.steps.size() - 1;
      if (stop_at_failure) break;
    }

    killed[v] = 1;
    earlier.push_back(ring.variable(v));
  }
  return report;
}

}  // namespace koszul
