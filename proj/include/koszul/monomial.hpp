#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace koszul {

/// Dense exponent vector over the ring's variables, in storage order.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> e) : e_(std::move(e)) {
    for (auto x : e_) deg_ += x;
    compute_mask();
  }

  static Monomial variable(std::size_t nvars, std::size_t v, Exponent power = 1) {
    Monomial m(nvars);
    m.e_[v] = power;
    m.deg_ = power;
    m.compute_mask();
    return m;
  }

  std::size_t size() const { return e_.size(); }
  int degree() const { return deg_; }
  Exponent operator[](std::size_t v) const { return e_[v]; }
  const std::vector<Exponent>& exponents() const { return e_; }
  bool is_one() const { return deg_ == 0; }
  /// Bit v%64 set when variable v occurs; a cheap divisibility pre-filter.
  std::uint64_t support_mask() const { return mask_; }

  bool divides(const Monomial& o) const {
    if ((mask_ & ~o.mask_) != 0 || deg_ > o.deg_) return false;
    for (std::size_t v = 0; v < e_.size(); ++v)
      if (e_[v] > o.e_[v]) return false;
    return true;
  }
  bool coprime(const Monomial& o) const {
    if ((mask_ & o.mask_) == 0) return true;
    for (std::size_t v = 0; v < e_.size(); ++v)
      if (e_[v] != 0 && o.e_[v] != 0) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t v = 0; v < a.size(); ++v) r.e_[v] = static_cast<Exponent>(a.e_[v] + b.e_[v]);
    r.deg_ = a.deg_ + b.deg_;
    r.mask_ = a.mask_ | b.mask_;
    return r;
  }
  /// a / b; requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t v = 0; v < a.size(); ++v) {
      if (b.e_[v] > a.e_[v]) throw std::domain_error("monomial does not divide");
      r.e_[v] = static_cast<Exponent>(a.e_[v] - b.e_[v]);
    }
    r.deg_ = a.deg_ - b.deg_;
    r.compute_mask();
    return r;
  }
  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t v = 0; v < a.size(); ++v) r.e_[v] = std::max(a.e_[v], b.e_[v]);
    for (auto x : r.e_) r.deg_ += x;
    r.mask_ = a.mask_ | b.mask_;
    return r;
  }

  /// Copy with one more (zero) trailing variable, or with the trailing one dropped.
  Monomial extended(std::size_t extra) const {
    Monomial r = *this;
    r.e_.resize(e_.size() + extra, 0);
    return r;
  }
  Monomial truncated(std::size_t nvars) const {
    std::vector<Exponent> e(e_.begin(), e_.begin() + static_cast<std::ptrdiff_t>(nvars));
    return Monomial(std::move(e));
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
  /// Storage order: lexicographic with variable 0 most significant.
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.e_ < b.e_; }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull;
    for (auto x : e_) h = (h ^ x) * 1099511628211ull;
    return h;
  }

 private:
  void compute_mask() {
    mask_ = 0;
    for (std::size_t v = 0; v < e_.size(); ++v)
      if (e_[v]) mask_ |= std::uint64_t{1} << (v % 64);
  }

  std::vector<Exponent> e_;
  int deg_ = 0;
  std::uint64_t mask_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace koszul
