#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace koszul {

/// GF(p) with elements stored as residues in [0, p).
class PrimeField {
 public:
  using Element = std::uint32_t;

  static constexpr std::uint32_t kDefaultPrime = 32003;

  explicit PrimeField(std::uint32_t p = kDefaultPrime) : p_(p) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
    if (p >= (1u << 31)) throw std::invalid_argument("prime must be below 2^31");
  }

  std::uint32_t characteristic() const { return p_; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  bool is_zero(Element a) const { return a == 0; }
  bool is_one(Element a) const { return a == 1; }
  Element add(Element a, Element b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const {
    return static_cast<Element>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Element inv(Element a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    // Extended Euclid.
    std::int64_t t = 0, nt = 1, r = p_, nr = a;
    while (nr != 0) {
      std::int64_t q = r / nr;
      t -= q * nt;
      std::swap(t, nt);
      r -= q * nr;
      std::swap(r, nr);
    }
    return static_cast<Element>(t < 0 ? t + p_ : t);
  }
  Element from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Element>(r < 0 ? r + p_ : r);
  }
  Element from_ratio(std::int64_t num, std::int64_t den) const { return mul(from_int(num), inv(from_int(den))); }
  /// Symmetric representative in (-p/2, p/2].
  std::int64_t lift(Element a) const {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
  }
  std::string to_string(Element a) const { return std::to_string(lift(a)); }
  bool negative(Element a) const { return lift(a) < 0; }

  static bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d)
      if (p % d == 0) return false;
    return true;
  }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
};

/// The rationals, via GMP.
class RationalField {
 public:
  using Element = mpq_class;

  std::uint32_t characteristic() const { return 0; }
  Element zero() const { return 0; }
  Element one() const { return 1; }
  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool is_one(const Element& a) const { return a == 1; }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element inv(const Element& a) const {
    if (sgn(a) == 0) throw std::domain_error("inverse of zero");
    return 1 / a;
  }
  Element from_int(std::int64_t v) const { return mpq_class(mpz_class(std::to_string(v))); }
  Element from_ratio(std::int64_t num, std::int64_t den) const {
    if (den == 0) throw std::domain_error("zero denominator");
    mpq_class q(mpz_class(std::to_string(num)), mpz_class(std::to_string(den)));
    q.canonicalize();
    return q;
  }
  std::string to_string(const Element& a) const { return a.get_str(); }
  bool negative(const Element& a) const { return sgn(a) < 0; }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

}  // namespace koszul
