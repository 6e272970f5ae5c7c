#include "koszul/bar.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "koszul/pair_ideal.hpp"

namespace koszul {

namespace {

using Elem = PrimeField::Element;
using Column = std::vector<std::pair<std::size_t, Elem>>;

std::size_t sat_mul(std::size_t a, std::size_t b) {
  if (a != 0 && b > std::numeric_limits<std::size_t>::max() / a) return std::numeric_limits<std::size_t>::max();
  return a * b;
}
std::size_t sat_add(std::size_t a, std::size_t b) {
  return b > std::numeric_limits<std::size_t>::max() - a ? std::numeric_limits<std::size_t>::max() : a + b;
}

void compositions(int j, int i, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (i == 0) {
    if (j == 0) out.push_back(cur);
    return;
  }
  for (int d = 1; d <= j - (i - 1); ++d) {
    cur.push_back(d);
    compositions(j - d, i - 1, cur, out);
    cur.pop_back();
  }
}

// Sorts by row and merges duplicates, dropping zeros.
void combine(Column& c, const PrimeField& f) {
  std::sort(c.begin(), c.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::size_t w = 0;
  for (std::size_t r = 0; r < c.size();) {
    std::size_t row = c[r].first;
    Elem v = 0;
    for (; r < c.size() && c[r].first == row; ++r) v = f.add(v, c[r].second);
    if (v != 0) c[w++] = {row, v};
  }
  c.resize(w);
}

// Column elimination with pivots on the smallest row; rows are dense local ids.
class Eliminator {
 public:
  Eliminator(const PrimeField& f, std::size_t rows) : f_(f), pivot_of_(rows, -1) {}

  // Returns true when the column was independent of the earlier ones.
  bool add(Column col) {
    Column tmp;
    while (!col.empty()) {
      const int p = pivot_of_[col.front().first];
      if (p < 0) {
        Elem inv = f_.inv(col.front().second);
        for (auto& e : col) e.second = f_.mul(e.second, inv);
        pivot_of_[col.front().first] = static_cast<int>(pivots_.size());
        pivots_.push_back(std::move(col));
        return true;
      }
      const Column& pc = pivots_[p];
      const Elem c = col.front().second;
      tmp.clear();
      std::size_t a = 1, b = 1;
      while (a < col.size() || b < pc.size()) {
        if (b == pc.size() || (a < col.size() && col[a].first < pc[b].first)) {
          tmp.push_back(col[a++]);
        } else if (a == col.size() || pc[b].first < col[a].first) {
          tmp.push_back({pc[b].first, f_.neg(f_.mul(c, pc[b].second))});
          ++b;
        } else {
          Elem v = f_.sub(col[a].second, f_.mul(c, pc[b].second));
          if (v != 0) tmp.push_back({col[a].first, v});
          ++a, ++b;
        }
      }
      col.swap(tmp);
    }
    return false;
  }
  std::size_t rank() const { return pivots_.size(); }

 private:
  const PrimeField& f_;
  std::vector<int> pivot_of_;
  std::vector<Column> pivots_;
};

}  // namespace

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : columns) n += c.size();
  return n;
}

std::size_t rank(const SparseMatrix& a, const PrimeField& field) {
  Eliminator e(field, a.rows);
  for (const auto& c : a.columns) e.add(c);
  return e.rank();
}

std::optional<SparseMatrix> multiply(const SparseMatrix& a, const SparseMatrix& b, const PrimeField& field) {
  if (a.cols != b.rows) return std::nullopt;
  SparseMatrix out;
  out.rows = a.rows;
  out.cols = b.cols;
  for (const auto& bc : b.columns) {
    Column acc;
    for (const auto& [k, v] : bc)
      for (const auto& [r, w] : a.columns[k]) acc.push_back({r, field.mul(v, w)});
    combine(acc, field);
    out.columns.push_back(std::move(acc));
  }
  return out;
}

Grading total_degree_grading(int nvars) { return Grading(nvars, std::vector<int>{1}); }

Grading grid_grading(int m, int n) {
  Grading g;
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j) {
      std::vector<int> w(m + n, 0);
      w[i - 1] = 1;
      w[m + j - 1] = 1;
      g.push_back(std::move(w));
    }
  return g;
}

BarComplex::BarComplex(PolyRing<PrimeField> ring, ReducedGB<PrimeField> gb, Grading grading, BarLimits limits)
    : ring_(std::move(ring)), gb_(std::move(gb)), grading_(std::move(grading)), limits_(limits) {
  if (grading_.empty()) grading_ = total_degree_grading(ring_.nvars());
  if (static_cast<int>(grading_.size()) != ring_.nvars()) throw std::invalid_argument("grading / ring size mismatch");
  for (const auto& g : gb_.elements) {
    if (!g.is_homogeneous()) throw std::invalid_argument("bar complex needs a homogeneous ideal");
    leading_.push_back(g.leading(gb_.order).mono);
  }
}

const std::vector<Monomial>& BarComplex::standard_monomials(int d) {
  if (d < 0) throw std::invalid_argument("negative degree");
  while (static_cast<int>(std_.size()) <= d) {
    const int e = static_cast<int>(std_.size());
    const std::size_t nv = ring_.nvars();
    std::vector<Monomial> level;
    if (e == 0) {
      bool unit = std::any_of(leading_.begin(), leading_.end(), [](const Monomial& m) { return m.is_one(); });
      if (!unit) level.push_back(Monomial(nv));
    } else {
      std::unordered_set<Monomial, MonomialHash> seen;
      for (const auto& u : std_[e - 1])
        for (std::size_t v = 0; v < nv; ++v) {
          Monomial w = u * Monomial::variable(nv, v);
          if (!seen.insert(w).second) continue;
          bool standard = std::none_of(leading_.begin(), leading_.end(), [&](const Monomial& l) { return l.divides(w); });
          if (standard) level.push_back(std::move(w));
        }
    }
    std::sort(level.begin(), level.end(), [&](const Monomial& a, const Monomial& b) { return gb_.order.greater(a, b); });
    std::unordered_map<Monomial, int, MonomialHash> index;
    std::vector<std::vector<int>> grade;
    for (std::size_t k = 0; k < level.size(); ++k) {
      index.emplace(level[k], static_cast<int>(k));
      std::vector<int> g(grading_.front().size(), 0);
      for (std::size_t v = 0; v < nv; ++v)
        for (std::size_t c = 0; c < g.size(); ++c) g[c] += level[k][v] * grading_[v][c];
      grade.push_back(std::move(g));
    }
    std_.push_back(std::move(level));
    std_index_.push_back(std::move(index));
    std_grade_.push_back(std::move(grade));
  }
  return std_[d];
}

std::optional<Term<PrimeField>> BarComplex::multiply(const Monomial& u, const Monomial& v) {
  auto nf = normal_form(ring_, ring_.monomial(u * v, ring_.field().one()), gb_.elements, gb_.order);
  if (nf.is_zero()) return std::nullopt;
  if (nf.size() != 1)
    throw std::invalid_argument("normal form of a monomial is not a single term; bar complex needs binomial ideals");
  return nf.terms().front();
}

std::optional<std::pair<int, Elem>> BarComplex::product(int d1, int a, int d2, int b) {
  const std::uint64_t key = (std::uint64_t(d1) << 58) | (std::uint64_t(a) << 32) | (std::uint64_t(d2) << 26) |
                            std::uint64_t(b);
  auto it = products_.find(key);
  if (it == products_.end()) {
    standard_monomials(d1 + d2);
    auto t = multiply(std_[d1][a], std_[d2][b]);
    std::pair<int, Elem> val{-1, 0};
    if (t) {
      auto pos = std_index_[d1 + d2].find(t->mono);
      if (pos == std_index_[d1 + d2].end()) throw std::logic_error("normal form is not a standard monomial");
      val = {pos->second, t->coeff};
    }
    it = products_.emplace(key, val).first;
  }
  if (it->second.first < 0) return std::nullopt;
  return it->second;
}

const BarComplex::Space& BarComplex::space(int i, int j) {
  auto it = spaces_.find({i, j});
  if (it != spaces_.end()) return it->second;
  Space s;
  if (i >= 0 && j >= 0) {
    std::vector<int> cur;
    compositions(j, i, cur, s.comps);
  }
  for (std::size_t c = 0; c < s.comps.size(); ++c) {
    std::size_t size = 1;
    for (int d : s.comps[c]) size = sat_mul(size, hilbert(d));
    s.offsets.push_back(s.dim);
    s.comp_id.emplace(s.comps[c], c);
    s.dim = sat_add(s.dim, size);
  }
  return spaces_.emplace(std::make_pair(i, j), std::move(s)).first->second;
}

std::size_t BarComplex::dimension(int i, int j) { return space(i, j).dim; }

void BarComplex::check_cap(int i, int j) {
  const std::size_t dim = dimension(i, j);
  if (dim > limits_.max_dimension)
    throw CapExceeded("bar space B(" + std::to_string(i) + "," + std::to_string(j) + ") has dimension " +
                      std::to_string(dim) + ", above the cap " + std::to_string(limits_.max_dimension));
}

std::vector<std::pair<int, int>> BarComplex::decode(int i, int j, std::size_t index) {
  const Space& s = space(i, j);
  auto pos = std::upper_bound(s.offsets.begin(), s.offsets.end(), index) - s.offsets.begin() - 1;
  const auto& comp = s.comps[pos];
  std::size_t rest = index - s.offsets[pos];
  std::vector<std::pair<int, int>> t(comp.size());
  for (std::size_t k = comp.size(); k-- > 0;) {
    const std::size_t radix = hilbert(comp[k]);
    t[k] = {comp[k], static_cast<int>(rest % radix)};
    rest /= radix;
  }
  return t;
}

std::size_t BarComplex::encode(int j, const std::vector<std::pair<int, int>>& tuple) {
  const Space& s = space(static_cast<int>(tuple.size()), j);
  std::vector<int> comp;
  for (const auto& f : tuple) comp.push_back(f.first);
  std::size_t idx = 0;
  for (const auto& f : tuple) idx = idx * hilbert(f.first) + static_cast<std::size_t>(f.second);
  return s.offsets[s.comp_id.at(comp)] + idx;
}

void BarComplex::face_images(int j, const std::vector<std::pair<int, int>>& tuple, Column& out) {
  const PrimeField& f = ring_.field();
  out.clear();
  std::vector<std::pair<int, int>> face;
  for (std::size_t k = 0; k + 1 < tuple.size(); ++k) {
    auto p = product(tuple[k].first, tuple[k].second, tuple[k + 1].first, tuple[k + 1].second);
    if (!p) continue;
    face.assign(tuple.begin(), tuple.begin() + static_cast<std::ptrdiff_t>(k));
    face.push_back({tuple[k].first + tuple[k + 1].first, p->first});
    face.insert(face.end(), tuple.begin() + static_cast<std::ptrdiff_t>(k) + 2, tuple.end());
    // The k-th face (1-based k+1) carries the sign (-1)^(k+1).
    Elem c = (k % 2 == 0) ? f.neg(p->second) : p->second;
    out.push_back({encode(j, face), c});
  }
  combine(out, f);
}

bool BarComplex::dd_vanishes(int i, int j, const Column& image) {
  if (i < 3) return true;  // d on B(1, j) is zero
  Column acc, part;
  const PrimeField& f = ring_.field();
  for (const auto& [row, v] : image) {
    face_images(j, decode(i - 1, j, row), part);
    for (const auto& [r, w] : part) acc.push_back({r, f.mul(v, w)});
  }
  combine(acc, f);
  return acc.empty();
}

std::vector<std::vector<std::pair<int, int>>> BarComplex::basis(int i, int j) {
  check_cap(i, j);
  std::vector<std::vector<std::pair<int, int>>> out;
  for (std::size_t k = 0; k < dimension(i, j); ++k) out.push_back(decode(i, j, k));
  return out;
}

SparseMatrix BarComplex::differential(int i, int j) {
  if (i < 1) throw std::invalid_argument("differential needs i >= 1");
  check_cap(i, j);
  SparseMatrix m;
  m.cols = dimension(i, j);
  m.rows = dimension(i - 1, j);
  if (i == 1) {
    m.columns.assign(m.cols, {});
    return m;
  }
  Column col;
  for (std::size_t k = 0; k < m.cols; ++k) {
    face_images(j, decode(i, j, k), col);
    m.columns.push_back(col);
  }
  return m;
}

std::size_t BarComplex::differential_rank(int i, int j) {
  last_blocks_ = last_largest_ = 0;
  if (i <= 1 || j < i) return 0;
  check_cap(i, j);
  if (auto it = ranks_.find({i, j}); it != ranks_.end()) return it->second;

  // Group columns by the multidegree of their tuple; d preserves it.
  const std::size_t cols = dimension(i, j);
  std::map<std::vector<int>, std::uint32_t> key_id;
  std::vector<std::uint32_t> key(cols);
  const std::size_t width = grading_.front().size();
  std::vector<int> g(width);
  for (std::size_t c = 0; c < cols; ++c) {
    std::fill(g.begin(), g.end(), 0);
    for (const auto& [d, idx] : decode(i, j, c))
      for (std::size_t w = 0; w < width; ++w) g[w] += std_grade_[d][idx][w];
    key[c] = key_id.emplace(g, static_cast<std::uint32_t>(key_id.size())).first->second;
  }
  std::vector<std::size_t> order(cols);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return key[a] < key[b]; });

  const PrimeField& f = ring_.field();
  std::size_t total = 0;
  Column col;
  for (std::size_t start = 0; start < cols;) {
    std::size_t stop = start;
    while (stop < cols && key[order[stop]] == key[order[start]]) ++stop;
    ++last_blocks_;
    last_largest_ = std::max(last_largest_, stop - start);

    std::vector<Column> block;
    std::vector<std::size_t> rows;
    for (std::size_t k = start; k < stop; ++k) {
      face_images(j, decode(i, j, order[k]), col);
      if (limits_.verify_dd) {
        ++dd_checked_;
        if (!dd_vanishes(i, j, col)) ++dd_failures_;
      }
      for (const auto& e : col) rows.push_back(e.first);
      block.push_back(col);
    }
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    Eliminator elim(f, rows.size());
    for (auto& c : block) {
      for (auto& e : c) e.first = std::lower_bound(rows.begin(), rows.end(), e.first) - rows.begin();
      elim.add(std::move(c));
    }
    total += elim.rank();
    start = stop;
  }
  if (dd_failures_ != 0) throw std::logic_error("bar differential fails d o d = 0");
  ranks_.emplace(std::make_pair(i, j), total);
  return total;
}

std::size_t BarComplex::betti(int i, int j) {
  if (i < 0 || j < 0 || j < i) return 0;
  if (i == 0) return j == 0 && hilbert(0) == 1 ? 1 : 0;
  check_cap(i, j);
  check_cap(i + 1, j);
  return dimension(i, j) - differential_rank(i, j) - differential_rank(i + 1, j);
}

BarComplex pair_bar_complex(const Graph& g1, const Graph& g2, std::uint32_t p, BarLimits limits, GbLimits gb_limits) {
  const int m = g1.vertex_count(), n = g2.vertex_count();
  auto ring = grid_ring(PrimeField(p), m, n);
  auto gb = buchberger_reduced(ring, pair_ideal_generators(g1, g2, ring), order_iv(m, n), gb_limits);
  return BarComplex(std::move(ring), std::move(gb), grid_grading(m, n), limits);
}

std::string BettiTable::to_json() const {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [ij, v] : values) j[std::to_string(ij.first) + "," + std::to_string(ij.second)] = v;
  return j.dump();
}

std::string BettiTable::to_text() const {
  int max_i = 0, max_r = 0;
  for (const auto& [ij, v] : values) {
    max_i = std::max(max_i, ij.first);
    max_r = std::max(max_r, ij.second - ij.first);
  }
  std::ostringstream out;
  auto cell = [&](const std::string& s) { out << std::string(s.size() < 6 ? 6 - s.size() : 1, ' ') << s; };
  out << "      ";
  for (int i = 0; i <= max_i; ++i) cell(std::to_string(i));
  out << "\n" << std::string(6 + 6 * (max_i + 1), '-') << "\n";
  for (int r = 0; r <= max_r; ++r) {
    std::string label = std::to_string(r) + ":";
    out << std::string(6 - std::min<std::size_t>(6, label.size()), ' ') << label;
    for (int i = 0; i <= max_i; ++i) {
      auto it = values.find({i, i + r});
      cell(it == values.end() ? "?" : it->second == 0 ? "-" : std::to_string(it->second));
    }
    out << "\n";
  }
  return out.str();
}

ProbeResult koszul_probe(BarComplex& bar, int i_max, int j_max) {
  ProbeResult r;
  for (int i = 1; i <= i_max; ++i)
    for (int j = i + 1; j <= j_max; ++j) {
      try {
        std::size_t b = bar.betti(i, j);
        r.scanned.push_back({i, j});
        if (b != 0) {
          r.nonzero = std::make_pair(i, j);
          return r;
        }
      } catch (const CapExceeded& e) {
        r.stopped_by_cap = e.what();
        return r;
      }
    }
  return r;
}

}  // namespace koszul
