#include "koszul/term_order.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace koszul {

TermOrder::TermOrder(OrderKind kind, std::vector<int> descending, int elimination_block)
    : kind_(kind), desc_(std::move(descending)), block_(elimination_block) {
  std::vector<int> sorted = desc_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 0; k < sorted.size(); ++k)
    if (sorted[k] != static_cast<int>(k)) throw std::invalid_argument("term order ranking is not a permutation");
  if (block_ < 0 || block_ > static_cast<int>(desc_.size()))
    throw std::invalid_argument("elimination block out of range");
}

TermOrder TermOrder::lex(int nvars) {
  std::vector<int> d(nvars);
  std::iota(d.begin(), d.end(), 0);
  return TermOrder(OrderKind::Lex, std::move(d));
}

TermOrder TermOrder::degrevlex(int nvars) {
  std::vector<int> d(nvars);
  std::iota(d.begin(), d.end(), 0);
  return TermOrder(OrderKind::DegRevLex, std::move(d));
}

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
  const std::size_t n = desc_.size();
  std::size_t start = 0;
  if (kind_ == OrderKind::Lex) {
    for (int v : desc_)
      if (a[v] != b[v]) return a[v] > b[v] ? 1 : -1;
    return 0;
  }
  int da = a.degree(), db = b.degree();
  if (block_ > 0) {
    for (; start < static_cast<std::size_t>(block_); ++start) {
      int v = desc_[start];
      if (a[v] != b[v]) return a[v] > b[v] ? 1 : -1;
      da -= a[v];
      db -= b[v];
    }
  }
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t k = n; k-- > start;) {
    int v = desc_[k];
    if (a[v] != b[v]) return a[v] < b[v] ? 1 : -1;
  }
  return 0;
}

bool TermOrder::eliminates(const std::vector<int>& dropped) const {
  std::set<int> d(dropped.begin(), dropped.end());
  if (d.empty()) return true;
  // Dropped variables must be the top-ranked prefix ...
  for (std::size_t k = 0; k < d.size(); ++k)
    if (!d.count(desc_[k])) return false;
  // ... and that prefix must be compared lexicographically first.
  return kind_ == OrderKind::Lex || d.size() <= static_cast<std::size_t>(block_);
}

TermOrder TermOrder::with_leading_block(int count) const {
  const int n = static_cast<int>(desc_.size());
  std::vector<int> d;
  for (int k = 0; k < count; ++k) d.push_back(n + k);
  d.insert(d.end(), desc_.begin(), desc_.end());
  return TermOrder(kind_, std::move(d), kind_ == OrderKind::Lex ? 0 : count + block_);
}

std::string TermOrder::describe() const {
  std::string s = kind_ == OrderKind::Lex ? "lex" : "degrevlex";
  if (block_ > 0) s += " (elimination block " + std::to_string(block_) + ")";
  return s;
}

}  // namespace koszul
