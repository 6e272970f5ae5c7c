#pragma once

#include <string>
#include <vector>

#include "koszul/monomial.hpp"

namespace koszul {

enum class OrderKind { Lex, DegRevLex };

/// A monomial order over an arbitrary ranking of the ring variables.
///
/// `descending` lists variable indices from largest to smallest. With an
/// elimination block of size k > 0, the first k ranked variables are compared
/// lexicographically before anything else and `kind` orders the remaining
/// variables (a block order).
class TermOrder {
 public:
  TermOrder(OrderKind kind, std::vector<int> descending, int elimination_block = 0);

  static TermOrder lex(int nvars);
  static TermOrder degrevlex(int nvars);

  OrderKind kind() const { return kind_; }
  const std::vector<int>& descending() const { return desc_; }
  int elimination_block() const { return block_; }
  int variable_count() const { return static_cast<int>(desc_.size()); }

  /// <0, 0, >0 as a is smaller, equal, larger than b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  /// True when every monomial containing a `dropped` variable exceeds every
  /// monomial free of them (so a GB restricted to the rest generates the
  /// elimination ideal).
  bool eliminates(const std::vector<int>& dropped) const;

  /// This order with `count` fresh variables (indices n, n+1, ...) ranked
  /// above all others in a lexicographic elimination block.
  TermOrder with_leading_block(int count) const;

  std::string describe() const;

 private:
  OrderKind kind_;
  std::vector<int> desc_;
  int block_;
};

}  // namespace koszul
