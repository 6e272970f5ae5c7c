#pragma once

// Buchberger's algorithm over an exact field, plus the ideal operations built
// on it: normal forms, elimination, colon ideals, ideal equality.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "koszul/errors.hpp"
#include "koszul/polynomial.hpp"
#include "koszul/term_order.hpp"

namespace koszul {

/// Resource guard for Buchberger runs.
struct GbLimits {
  std::size_t max_elements = 20000;  // polynomials ever added to the basis
  int max_degree = 30;
};

/// Reduced Gröbner basis: monic, interreduced, sorted ascending by leading
/// monomial under `order`.
template <class F>
struct ReducedGB {
  std::vector<Polynomial<F>> elements;
  TermOrder order;

  int max_degree() const {
    int d = 0;
    for (const auto& g : elements) d = std::max(d, g.degree());
    return d;
  }
  std::vector<Monomial> leading_monomials() const {
    std::vector<Monomial> out;
    for (const auto& g : elements) out.push_back(g.leading(order).mono);
    return out;
  }
};

namespace detail {

// Terms sorted descending under a fixed TermOrder.
template <class F>
using OrderedTerms = std::vector<Term<F>>;

template <class F>
OrderedTerms<F> to_ordered(const Polynomial<F>& p, const TermOrder& order) {
  OrderedTerms<F> t = p.terms();
  std::sort(t.begin(), t.end(), [&](const Term<F>& a, const Term<F>& b) { return order.greater(a.mono, b.mono); });
  return t;
}

template <class F>
Polynomial<F> from_ordered(const PolyRing<F>& ring, OrderedTerms<F> t) {
  return ring.from_terms(std::move(t));
}

// a - c * m * b, all ordered under `order`.
template <class F>
OrderedTerms<F> sub_scaled(const F& field, const TermOrder& order, const OrderedTerms<F>& a, std::size_t a_start,
                           const typename F::Element& c, const Monomial& m, const OrderedTerms<F>& b) {
  OrderedTerms<F> out;
  out.reserve(a.size() - a_start + b.size());
  std::size_t i = a_start, j = 0;
  std::optional<Monomial> bm;
  while (i < a.size() || j < b.size()) {
    if (j < b.size() && !bm) bm = b[j].mono * m;
    int cmp = i == a.size() ? -1 : j == b.size() ? 1 : order.compare(a[i].mono, *bm);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back({std::move(*bm), field.neg(field.mul(c, b[j].coeff))});
      bm.reset();
      ++j;
    } else {
      auto v = field.sub(a[i].coeff, field.mul(c, b[j].coeff));
      if (!field.is_zero(v)) out.push_back({a[i].mono, v});
      ++i, ++j;
      bm.reset();
    }
  }
  return out;
}

// Full reduction of f by the monic polynomials basis[idx] for idx in `use`.
template <class F>
OrderedTerms<F> reduce(const F& field, const TermOrder& order, OrderedTerms<F> f,
                       const std::vector<OrderedTerms<F>>& basis, const std::vector<int>& use,
                       std::optional<int> skip = std::nullopt) {
  OrderedTerms<F> rem;
  std::size_t start = 0;
  while (start < f.size()) {
    const Term<F>& lt = f[start];
    int div = -1;
    for (int idx : use) {
      if (skip && idx == *skip) continue;
      if (basis[idx].front().mono.divides(lt.mono)) {
        div = idx;
        break;
      }
    }
    if (div < 0) {
      rem.push_back(lt);
      ++start;
      continue;
    }
    const auto& g = basis[div];
    auto c = field.mul(lt.coeff, field.inv(g.front().coeff));
    Monomial m = lt.mono / g.front().mono;
    f = sub_scaled(field, order, f, start, c, m, g);
    start = 0;
  }
  return rem;
}

template <class F>
void make_monic(const F& field, OrderedTerms<F>& f) {
  if (f.empty() || field.is_one(f.front().coeff)) return;
  auto inv = field.inv(f.front().coeff);
  for (auto& t : f) t.coeff = field.mul(t.coeff, inv);
}

template <class F>
OrderedTerms<F> s_poly(const F& field, const TermOrder& order, const OrderedTerms<F>& a, const OrderedTerms<F>& b) {
  Monomial l = lcm(a.front().mono, b.front().mono);
  // (l / lm a) * a / lc a - (l / lm b) * b / lc b
  OrderedTerms<F> left;
  auto ia = field.inv(a.front().coeff);
  Monomial ma = l / a.front().mono;
  for (const auto& t : a) left.push_back({t.mono * ma, field.mul(t.coeff, ia)});
  auto cb = field.inv(b.front().coeff);
  return sub_scaled(field, order, left, 0, cb, l / b.front().mono, b);
}

struct CriticalPair {
  int i, j;
  Monomial lcm;
};

}  // namespace detail

/// Remainder of f under the division algorithm by `basis` (any nonzero
/// polynomials), terms chosen by `order`.
template <class F>
Polynomial<F> normal_form(const PolyRing<F>& ring, const Polynomial<F>& f, const std::vector<Polynomial<F>>& basis,
                          const TermOrder& order) {
  std::vector<detail::OrderedTerms<F>> b;
  std::vector<int> use;
  for (const auto& g : basis) {
    if (g.is_zero()) throw std::invalid_argument("zero polynomial in division basis");
    b.push_back(detail::to_ordered(g, order));
    use.push_back(static_cast<int>(use.size()));
  }
  return detail::from_ordered(ring, detail::reduce(ring.field(), order, detail::to_ordered(f, order), b, use));
}

template <class F>
Polynomial<F> s_polynomial(const PolyRing<F>& ring, const Polynomial<F>& a, const Polynomial<F>& b,
                           const TermOrder& order) {
  return detail::from_ordered(ring, detail::s_poly(ring.field(), order, detail::to_ordered(a, order),
                                                   detail::to_ordered(b, order)));
}

/// Reduced Gröbner basis of the ideal generated by `gens`. Uses the normal
/// selection strategy and the Gebauer-Möller installation of Buchberger's
/// coprime and chain criteria. Throws CapExceeded past `limits`.
template <class F>
ReducedGB<F> buchberger_reduced(const PolyRing<F>& ring, const std::vector<Polynomial<F>>& gens,
                                const TermOrder& order, const GbLimits& limits = {}) {
  using detail::CriticalPair;
  using Ordered = detail::OrderedTerms<F>;
  const F& field = ring.field();
  if (order.variable_count() != ring.nvars()) throw std::invalid_argument("term order / ring size mismatch");

  std::vector<Ordered> input;
  for (const auto& g : gens)
    if (!g.is_zero()) input.push_back(detail::to_ordered(g, order));
  std::sort(input.begin(), input.end(), [&](const Ordered& a, const Ordered& b) {
    int c = order.compare(a.front().mono, b.front().mono);
    if (c != 0) return c < 0;
    return a.size() < b.size();
  });

  std::vector<Ordered> polys;
  std::vector<int> active;
  std::vector<CriticalPair> pairs;

  auto install = [&](Ordered h) {
    detail::make_monic(field, h);
    for (const auto& t : h)
      if (t.mono.degree() > limits.max_degree)
        throw DegreeCapExceeded("Gröbner basis element of degree " + std::to_string(t.mono.degree()) +
                          " exceeds the degree cap " + std::to_string(limits.max_degree));
    if (polys.size() + 1 > limits.max_elements)
      throw CapExceeded("Gröbner basis computation exceeded " + std::to_string(limits.max_elements) + " elements");
    const int hi = static_cast<int>(polys.size());
    polys.push_back(std::move(h));
    const Monomial& lh = polys[hi].front().mono;

    // Gebauer-Möller update.
    std::vector<int> c(active), d;
    for (std::size_t k = 0; k < c.size(); ++k) {
      const Monomial& lg = polys[c[k]].front().mono;
      Monomial l1 = lcm(lh, lg);
      bool keep = lh.coprime(lg);
      if (!keep) {
        keep = true;
        for (std::size_t q = k + 1; q < c.size() && keep; ++q)
          if (lcm(lh, polys[c[q]].front().mono).divides(l1)) keep = false;
        for (std::size_t q = 0; q < d.size() && keep; ++q)
          if (lcm(lh, polys[d[q]].front().mono).divides(l1)) keep = false;
      }
      if (keep) d.push_back(c[k]);
    }
    std::vector<CriticalPair> next;
    for (auto& p : pairs) {
      bool drop = lh.divides(p.lcm) && !(lcm(polys[p.i].front().mono, lh) == p.lcm) &&
                  !(lcm(polys[p.j].front().mono, lh) == p.lcm);
      if (!drop) next.push_back(std::move(p));
    }
    for (int g : d)
      if (!lh.coprime(polys[g].front().mono)) next.push_back({g, hi, lcm(polys[g].front().mono, lh)});
    pairs = std::move(next);

    std::vector<int> still;
    for (int g : active)
      if (!lh.divides(polys[g].front().mono)) still.push_back(g);
    still.push_back(hi);
    active = std::move(still);
  };

  for (auto& g : input) {
    auto r = detail::reduce(field, order, std::move(g), polys, active);
    if (!r.empty()) install(std::move(r));
  }

  while (!pairs.empty()) {
    // Normal strategy: smallest lcm degree, then smallest lcm, then oldest.
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      const auto& a = pairs[k];
      const auto& b = pairs[best];
      if (a.lcm.degree() != b.lcm.degree()) {
        if (a.lcm.degree() < b.lcm.degree()) best = k;
        continue;
      }
      int c = order.compare(a.lcm, b.lcm);
      if (c < 0 || (c == 0 && std::make_pair(a.j, a.i) < std::make_pair(b.j, b.i))) best = k;
    }
    CriticalPair p = std::move(pairs[best]);
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));
    auto s = detail::s_poly(field, order, polys[p.i], polys[p.j]);
    auto r = detail::reduce(field, order, std::move(s), polys, active);
    if (!r.empty()) install(std::move(r));
  }

  // Interreduce the (already minimal) active set.
  std::vector<Ordered> reduced;
  for (int g : active) {
    Ordered tail(polys[g].begin() + 1, polys[g].end());
    Ordered r = detail::reduce(field, order, std::move(tail), polys, active, g);
    r.insert(r.begin(), polys[g].front());
    detail::make_monic(field, r);
    reduced.push_back(std::move(r));
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const Ordered& a, const Ordered& b) { return order.compare(a.front().mono, b.front().mono) < 0; });

  ReducedGB<F> out{{}, order};
  for (auto& r : reduced) out.elements.push_back(detail::from_ordered(ring, std::move(r)));
  return out;
}

template <class F>
bool ideal_contains(const PolyRing<F>& ring, const ReducedGB<F>& gb, const Polynomial<F>& f) {
  return normal_form(ring, f, gb.elements, gb.order).is_zero();
}

struct QuadraticReport {
  bool quadratic;
  int max_degree;
};

template <class F>
QuadraticReport is_quadratic_gb(const PolyRing<F>& ring, const std::vector<Polynomial<F>>& gens,
                                const TermOrder& order, const GbLimits& limits = {}) {
  auto gb = buchberger_reduced(ring, gens, order, limits);
  int d = gb.max_degree();
  return {d <= 2, d};
}

/// Elements of `gb` that involve only `keep` variables; these generate the
/// elimination ideal when gb.order eliminates the other variables.
template <class F>
std::vector<Polynomial<F>> eliminate(const ReducedGB<F>& gb, const std::vector<int>& keep, int nvars) {
  std::vector<char> kept(nvars, 0);
  for (int v : keep) kept.at(v) = 1;
  std::vector<int> dropped;
  for (int v = 0; v < nvars; ++v)
    if (!kept[v]) dropped.push_back(v);
  if (!gb.order.eliminates(dropped))
    throw std::invalid_argument("term order " + gb.order.describe() + " does not eliminate the dropped variables");
  std::vector<Polynomial<F>> out;
  for (const auto& g : gb.elements) {
    bool ok = true;
    for (const auto& t : g.terms())
      for (int v : dropped)
        if (t.mono[v] != 0) ok = false;
    if (ok) out.push_back(g);
  }
  return out;
}

/// h / f where f divides h exactly.
template <class F>
Polynomial<F> divide_exact(const PolyRing<F>& ring, const Polynomial<F>& h, const Polynomial<F>& f,
                           const TermOrder& order) {
  const F& field = ring.field();
  auto fo = detail::to_ordered(f, order);
  auto r = detail::to_ordered(h, order);
  auto inv = field.inv(fo.front().coeff);
  std::vector<Term<F>> q;
  while (!r.empty()) {
    if (!fo.front().mono.divides(r.front().mono)) throw std::domain_error("inexact polynomial division");
    Term<F> t{r.front().mono / fo.front().mono, field.mul(r.front().coeff, inv)};
    r = detail::sub_scaled(field, order, r, 0, t.coeff, t.mono, fo);
    q.push_back(std::move(t));
  }
  return ring.from_terms(std::move(q));
}

/// Generators (a reduced GB under `order`) of I : f, computed as
/// (I ∩ (f)) / f with I ∩ (f) = (t·I + (1 - t)·f) ∩ K[x] for an auxiliary
/// variable t ranked above everything in an elimination block.
template <class F>
std::vector<Polynomial<F>> colon_by(const PolyRing<F>& ring, const std::vector<Polynomial<F>>& ideal,
                                    const Polynomial<F>& f, const TermOrder& order, const GbLimits& limits = {}) {
  if (f.is_zero()) throw std::invalid_argument("colon by the zero polynomial");
  if (f.degree() == 0) return buchberger_reduced(ring, ideal, order, limits).elements;

  const int n = ring.nvars();
  std::string aux = "t";
  while (ring.index_of(aux) >= 0) aux += "_";
  const PolyRing<F> big = ring.extended({aux});
  const TermOrder big_order = order.with_leading_block(1);

  auto lift = [&](const Polynomial<F>& p) {
    std::vector<Term<F>> t;
    for (const auto& x : p.terms()) t.push_back({x.mono.extended(1), x.coeff});
    return big.from_terms(std::move(t));
  };
  const auto t = big.variable(n);
  std::vector<Polynomial<F>> gens;
  for (const auto& g : ideal)
    if (!g.is_zero()) gens.push_back(big.mul(t, lift(g)));
  const auto fl = lift(f);
  gens.push_back(big.sub(fl, big.mul(t, fl)));

  auto gb = buchberger_reduced(big, gens, big_order, limits);
  std::vector<int> keep(n);
  for (int v = 0; v < n; ++v) keep[v] = v;
  std::vector<Polynomial<F>> quotients;
  for (const auto& h : eliminate(gb, keep, n + 1)) {
    std::vector<Term<F>> terms;
    for (const auto& x : h.terms()) terms.push_back({x.mono.truncated(n), x.coeff});
    quotients.push_back(divide_exact(ring, ring.from_terms(std::move(terms)), f, order));
  }
  return buchberger_reduced(ring, quotients, order, limits).elements;
}

template <class F>
bool ideal_equal(const PolyRing<F>& ring, const std::vector<Polynomial<F>>& a, const std::vector<Polynomial<F>>& b,
                 const TermOrder& order, const GbLimits& limits = {}) {
  return buchberger_reduced(ring, a, order, limits).elements == buchberger_reduced(ring, b, order, limits).elements;
}

}  // namespace koszul
