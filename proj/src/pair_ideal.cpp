#include "koszul/pair_ideal.hpp"

namespace koszul {

std::vector<std::string> grid_names(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("grid dimensions must be positive");
  std::vector<std::string> names;
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j) names.push_back("x[" + std::to_string(i) + "," + std::to_string(j) + "]");
  return names;
}

TermOrder order_iii(int m, int n) { return TermOrder::lex(m * n); }

TermOrder order_iv(int m, int n) {
  const Grid g{m, n};
  std::vector<int> desc;
  for (int j = n; j >= 1; --j)
    for (int i = 1; i <= m; ++i) desc.push_back(g.index(i, j));
  return TermOrder(OrderKind::DegRevLex, std::move(desc));
}

std::vector<int> linear_quotient_sequence(int m, int n) {
  const Grid g{m, n};
  std::vector<int> seq;
  for (int j = 1; j <= n; ++j)
    for (int i = m; i >= 1; --i) seq.push_back(g.index(i, j));
  return seq;
}

std::vector<int> monomial_multidegree(const Monomial& mono, int m, int n) {
  const Grid g{m, n};
  std::vector<int> d(m + n, 0);
  for (int v = 0; v < g.size(); ++v) {
    d[g.row(v) - 1] += mono[v];
    d[m + g.col(v) - 1] += mono[v];
  }
  return d;
}

}  // namespace koszul
