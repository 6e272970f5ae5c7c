#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "koszul/errors.hpp"
#include "koszul/field.hpp"
#include "koszul/monomial.hpp"
#include "koszul/term_order.hpp"

namespace koszul {

template <class F>
struct Term {
  Monomial mono;
  typename F::Element coeff;
};

/// Sparse polynomial; terms are kept sorted descending in storage order
/// (Monomial::operator<) with no zero coefficients. Arithmetic goes through
/// PolyRing, which owns the field.
template <class F>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Term<F>> sorted_terms) : terms_(std::move(sorted_terms)) {}

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term<F>>& terms() const { return terms_; }
  int degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
  }
  bool is_homogeneous() const {
    for (const auto& t : terms_)
      if (t.mono.degree() != terms_.front().mono.degree()) return false;
    return true;
  }
  /// Leading term under `order`.
  const Term<F>& leading(const TermOrder& order) const {
    const Term<F>* best = &terms_.front();
    for (const auto& t : terms_)
      if (order.greater(t.mono, best->mono)) best = &t;
    return *best;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t k = 0; k < a.terms_.size(); ++k)
      if (!(a.terms_[k].mono == b.terms_[k].mono) || !(a.terms_[k].coeff == b.terms_[k].coeff)) return false;
    return true;
  }
  friend bool operator<(const Polynomial& a, const Polynomial& b) {
    // Deterministic total order for sorting lists of polynomials.
    std::size_t n = std::min(a.terms_.size(), b.terms_.size());
    for (std::size_t k = 0; k < n; ++k) {
      if (!(a.terms_[k].mono == b.terms_[k].mono)) return a.terms_[k].mono < b.terms_[k].mono;
      if (!(a.terms_[k].coeff == b.terms_[k].coeff)) return a.terms_[k].coeff < b.terms_[k].coeff;
    }
    return a.terms_.size() < b.terms_.size();
  }

 private:
  std::vector<Term<F>> terms_;
};

/// Polynomial ring F[var_names...].
template <class F>
class PolyRing {
 public:
  using Poly = Polynomial<F>;
  using Elem = typename F::Element;

  PolyRing(F field, std::vector<std::string> names) : field_(std::move(field)), names_(std::move(names)) {
    for (std::size_t v = 0; v < names_.size(); ++v)
      if (!index_.emplace(names_[v], static_cast<int>(v)).second)
        throw std::invalid_argument("duplicate variable name " + names_[v]);
  }

  const F& field() const { return field_; }
  int nvars() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  int index_of(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
  }

  /// Ring with extra trailing variables.
  PolyRing extended(const std::vector<std::string>& extra) const {
    auto n = names_;
    n.insert(n.end(), extra.begin(), extra.end());
    return PolyRing(field_, std::move(n));
  }

  Poly zero() const { return Poly(); }
  Poly constant(Elem c) const {
    if (field_.is_zero(c)) return Poly();
    return Poly({{Monomial(names_.size()), c}});
  }
  Poly one() const { return constant(field_.one()); }
  Poly variable(int v) const { return Poly({{Monomial::variable(names_.size(), v), field_.one()}}); }
  Poly monomial(const Monomial& m, Elem c) const {
    if (field_.is_zero(c)) return Poly();
    return Poly({{m, c}});
  }
  /// Builds from unsorted terms, combining duplicates.
  Poly from_terms(std::vector<Term<F>> terms) const {
    std::sort(terms.begin(), terms.end(), [](const Term<F>& a, const Term<F>& b) { return b.mono < a.mono; });
    std::vector<Term<F>> out;
    for (auto& t : terms) {
      if (!out.empty() && out.back().mono == t.mono)
        out.back().coeff = field_.add(out.back().coeff, t.coeff);
      else
        out.push_back(std::move(t));
      if (field_.is_zero(out.back().coeff)) out.pop_back();
    }
    return Poly(std::move(out));
  }

  Poly add(const Poly& a, const Poly& b) const { return combine(a, b, false); }
  Poly sub(const Poly& a, const Poly& b) const { return combine(a, b, true); }
  Poly neg(const Poly& a) const { return scale(a, field_.neg(field_.one())); }
  Poly scale(const Poly& a, const Elem& c) const {
    if (field_.is_zero(c)) return Poly();
    std::vector<Term<F>> out;
    out.reserve(a.size());
    for (const auto& t : a.terms()) out.push_back({t.mono, field_.mul(t.coeff, c)});
    return Poly(std::move(out));
  }
  Poly mul_term(const Poly& a, const Monomial& m, const Elem& c) const {
    if (field_.is_zero(c)) return Poly();
    std::vector<Term<F>> out;
    out.reserve(a.size());
    for (const auto& t : a.terms()) out.push_back({t.mono * m, field_.mul(t.coeff, c)});
    return Poly(std::move(out));  // multiplication by a monomial preserves storage order
  }
  Poly mul(const Poly& a, const Poly& b) const {
    std::vector<Term<F>> all;
    all.reserve(a.size() * b.size());
    for (const auto& s : a.terms())
      for (const auto& t : b.terms()) all.push_back({s.mono * t.mono, field_.mul(s.coeff, t.coeff)});
    return from_terms(std::move(all));
  }
  /// Makes the leading coefficient (under `order`) one.
  Poly monic(const Poly& a, const TermOrder& order) const {
    if (a.is_zero()) return a;
    return scale(a, field_.inv(a.leading(order).coeff));
  }
  /// Substitutes zero for every variable flagged in `kill`.
  Poly kill_variables(const Poly& a, const std::vector<char>& kill) const {
    std::vector<Term<F>> out;
    for (const auto& t : a.terms()) {
      bool dies = false;
      for (std::size_t v = 0; v < kill.size() && !dies; ++v) dies = kill[v] && t.mono[v] != 0;
      if (!dies) out.push_back(t);
    }
    return Poly(std::move(out));
  }

  // ---- text syntax ----

  /// Terms printed in descending `order` (storage order when null).
  std::string format(const Poly& p, const TermOrder* order = nullptr) const {
    if (p.is_zero()) return "0";
    std::vector<const Term<F>*> ts;
    for (const auto& t : p.terms()) ts.push_back(&t);
    if (order)
      std::stable_sort(ts.begin(), ts.end(),
                       [&](const Term<F>* a, const Term<F>* b) { return order->greater(a->mono, b->mono); });
    std::string out;
    for (std::size_t k = 0; k < ts.size(); ++k) {
      const auto& t = *ts[k];
      bool neg = field_.negative(t.coeff);
      Elem mag = neg ? field_.neg(t.coeff) : t.coeff;
      if (k == 0)
        out += neg ? "-" : "";
      else
        out += neg ? " - " : " + ";
      std::string mono = format_monomial(t.mono);
      if (mono.empty())
        out += field_.to_string(mag);
      else if (field_.is_one(mag))
        out += mono;
      else
        out += field_.to_string(mag) + "*" + mono;
    }
    return out;
  }

  std::string format_monomial(const Monomial& m) const {
    std::string out;
    for (std::size_t v = 0; v < m.size(); ++v) {
      if (m[v] == 0) continue;
      if (!out.empty()) out += "*";
      out += names_[v];
      if (m[v] > 1) out += "^" + std::to_string(m[v]);
    }
    return out;
  }

  /// Parses sums of products of integers, rationals a/b, and variables with
  /// optional ^power. Whitespace is ignored, also inside x[i, j].
  Poly parse(std::string_view text) const {
    std::string s;
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    std::size_t pos = 0;
    auto fail = [&](const std::string& why) -> ParseError {
      return ParseError("polynomial \"" + std::string(text) + "\": " + why + " at offset " + std::to_string(pos));
    };
    if (s.empty()) throw fail("empty");
    std::vector<Term<F>> terms;
    bool first = true;
    while (pos < s.size() || first) {
      bool negative = false;
      if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        negative = s[pos] == '-';
        ++pos;
      } else if (!first) {
        throw fail("expected + or -");
      }
      first = false;
      Elem coeff = field_.one();
      Monomial mono(names_.size());
      bool need_factor = true;
      while (need_factor) {
        if (pos >= s.size()) throw fail("unexpected end");
        if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
          std::int64_t num = read_int(s, pos);
          std::int64_t den = 1;
          if (pos < s.size() && s[pos] == '/') {
            ++pos;
            if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) throw fail("bad denominator");
            den = read_int(s, pos);
          }
          coeff = field_.mul(coeff, field_.from_ratio(num, den));
        } else {
          std::size_t start = pos;
          while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) ++pos;
          if (pos < s.size() && s[pos] == '[') {
            auto close = s.find(']', pos);
            if (close == std::string::npos) throw fail("unclosed [");
            pos = close + 1;
          }
          std::string name = s.substr(start, pos - start);
          if (name.empty()) throw fail("expected a factor");
          int v = index_of(name);
          if (v < 0) throw fail("unknown variable " + name);
          std::int64_t power = 1;
          if (pos < s.size() && s[pos] == '^') {
            ++pos;
            if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) throw fail("bad exponent");
            power = read_int(s, pos);
          }
          mono = mono * Monomial::variable(names_.size(), v, static_cast<Monomial::Exponent>(power));
        }
        if (pos < s.size() && s[pos] == '*')
          ++pos;
        else
          need_factor = false;
      }
      terms.push_back({mono, negative ? field_.neg(coeff) : coeff});
    }
    return from_terms(std::move(terms));
  }

 private:
  static std::int64_t read_int(const std::string& s, std::size_t& pos) {
    std::int64_t v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      if (v > (std::int64_t{1} << 55)) throw ParseError("integer literal too large");
      v = v * 10 + (s[pos++] - '0');
    }
    return v;
  }

  Poly combine(const Poly& a, const Poly& b, bool subtract) const {
    std::vector<Term<F>> out;
    out.reserve(a.size() + b.size());
    const auto& x = a.terms();
    const auto& y = b.terms();
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
      if (j == y.size() || (i < x.size() && y[j].mono < x[i].mono)) {
        out.push_back(x[i++]);
      } else if (i == x.size() || x[i].mono < y[j].mono) {
        out.push_back({y[j].mono, subtract ? field_.neg(y[j].coeff) : y[j].coeff});
        ++j;
      } else {
        Elem c = subtract ? field_.sub(x[i].coeff, y[j].coeff) : field_.add(x[i].coeff, y[j].coeff);
        if (!field_.is_zero(c)) out.push_back({x[i].mono, c});
        ++i, ++j;
      }
    }
    return Poly(std::move(out));
  }

  F field_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
};

}  // namespace koszul
