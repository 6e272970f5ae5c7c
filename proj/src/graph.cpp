#include "koszul/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

#include "koszul/errors.hpp"

namespace koszul {

// ---------------------------------------------------------------------------
// Graph / Labeling

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
  adj_.assign(static_cast<std::size_t>(n) * n, 0);
  nbrs_.resize(n);
  for (auto& [i, j] : edges) {
    if (i < 1 || j < 1 || i > n || j > n)
      throw std::invalid_argument("edge endpoint out of range: {" + std::to_string(i) + "," +
                                  std::to_string(j) + "}");
    if (i == j) throw std::invalid_argument("loop at vertex " + std::to_string(i));
    if (i > j) std::swap(i, j);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw std::invalid_argument("duplicate edge");
  edges_ = std::move(edges);
  for (auto [i, j] : edges_) {
    adj_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)] = 1;
    adj_[static_cast<std::size_t>(j - 1) * n_ + (i - 1)] = 1;
    nbrs_[i - 1].push_back(j);
    nbrs_[j - 1].push_back(i);
  }
  for (auto& l : nbrs_) std::sort(l.begin(), l.end());
}

Graph Graph::complete(int n) {
  std::vector<Edge> e;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) e.emplace_back(i, j);
  return Graph(n, std::move(e));
}

Graph Graph::path(int n) {
  std::vector<Edge> e;
  for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, std::move(e));
}

Graph Graph::cycle(int n) {
  std::vector<Edge> e;
  for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
  if (n >= 3) e.emplace_back(1, n);
  return Graph(n, std::move(e));
}

Graph Graph::induced(const std::vector<Vertex>& vs) const {
  std::vector<Edge> e;
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = a + 1; b < vs.size(); ++b)
      if (adjacent(vs[a], vs[b])) e.emplace_back(static_cast<int>(a) + 1, static_cast<int>(b) + 1);
  return Graph(static_cast<int>(vs.size()), std::move(e));
}

std::vector<std::vector<Vertex>> Graph::components() const {
  std::vector<std::vector<Vertex>> out;
  std::vector<char> seen(n_, 0);
  for (Vertex s = 1; s <= n_; ++s) {
    if (seen[s - 1]) continue;
    std::vector<Vertex> comp{s};
    seen[s - 1] = 1;
    for (std::size_t k = 0; k < comp.size(); ++k)
      for (Vertex w : neighbors(comp[k]))
        if (!seen[w - 1]) {
          seen[w - 1] = 1;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool Graph::connected() const { return components().size() == 1; }

Labeling::Labeling(std::vector<Vertex> perm) : perm_(std::move(perm)) {
  std::vector<char> hit(perm_.size(), 0);
  for (Vertex v : perm_) {
    if (v < 1 || v > size() || hit[v - 1]) throw std::invalid_argument("labeling is not a permutation");
    hit[v - 1] = 1;
  }
}

Labeling Labeling::identity(int n) {
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), 1);
  return Labeling(std::move(p));
}

Labeling Labeling::from_order(const std::vector<Vertex>& order) {
  std::vector<Vertex> p(order.size(), 0);
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (order[k] < 1 || order[k] > static_cast<int>(order.size()))
      throw std::invalid_argument("order entry out of range");
    p[order[k] - 1] = static_cast<int>(k) + 1;
  }
  return Labeling(std::move(p));
}

std::vector<Vertex> Labeling::order() const {
  std::vector<Vertex> o(perm_.size());
  for (std::size_t v = 0; v < perm_.size(); ++v) o[perm_[v] - 1] = static_cast<int>(v) + 1;
  return o;
}

Graph relabel(const Graph& g, const Labeling& lab) {
  if (lab.size() != g.vertex_count()) throw std::invalid_argument("labeling size mismatch");
  std::vector<Edge> e;
  e.reserve(g.edge_count());
  for (auto [i, j] : g.edges()) e.emplace_back(lab(i), lab(j));
  return Graph(g.vertex_count(), std::move(e));
}

Graph net_graph() { return Graph(6, {{1, 2}, {2, 3}, {2, 4}, {3, 4}, {3, 5}, {4, 6}}); }

Graph sun_graph() {
  return Graph(6, {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}, {2, 5}, {3, 5}, {1, 6}, {3, 6}});
}

Graph claw_graph() { return Graph(4, {{1, 2}, {1, 3}, {1, 4}}); }

std::string certificate_kind(const ClosednessCertificate& c) {
  struct V {
    std::string operator()(const ClosedLabeling&) const { return "closed"; }
    std::string operator()(const InducedCycle&) const { return "induced-cycle"; }
    std::string operator()(const Claw&) const { return "claw"; }
    std::string operator()(const Net&) const { return "net"; }
    std::string operator()(const Sun&) const { return "sun"; }
  };
  return std::visit(V{}, c);
}

std::vector<Vertex> witness_vertices(const ClosednessCertificate& c) {
  struct V {
    std::vector<Vertex> operator()(const ClosedLabeling&) const { return {}; }
    std::vector<Vertex> operator()(const InducedCycle& x) const { return x.vertices; }
    std::vector<Vertex> operator()(const Claw& x) const {
      return {x.center, x.leaves[0], x.leaves[1], x.leaves[2]};
    }
    std::vector<Vertex> operator()(const Net& x) const { return {x.vertices.begin(), x.vertices.end()}; }
    std::vector<Vertex> operator()(const Sun& x) const { return {x.vertices.begin(), x.vertices.end()}; }
  };
  return std::visit(V{}, c);
}

// ---------------------------------------------------------------------------
// Chordality

bool is_complete(const Graph& g) {
  auto n = static_cast<std::size_t>(g.vertex_count());
  return g.edge_count() == n * (n - 1) / 2;
}

namespace {

std::vector<Vertex> max_cardinality_search(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> weight(n, 0);
  std::vector<char> done(n, 0);
  std::vector<Vertex> order;
  order.reserve(n);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (!done[v] && (best < 0 || weight[v] > weight[best])) best = v;
    done[best] = 1;
    order.push_back(best + 1);
    for (Vertex w : g.neighbors(best + 1))
      if (!done[w - 1]) ++weight[w - 1];
  }
  return order;
}

// Shortest a->b path avoiding `blocked`; empty when none.
std::vector<Vertex> shortest_path(const Graph& g, Vertex a, Vertex b, const std::vector<char>& blocked) {
  std::vector<Vertex> prev(g.vertex_count() + 1, 0);
  std::deque<Vertex> q{a};
  prev[a] = a;
  while (!q.empty()) {
    Vertex u = q.front();
    q.pop_front();
    if (u == b) break;
    for (Vertex w : g.neighbors(u))
      if (!blocked[w] && prev[w] == 0) {
        prev[w] = u;
        q.push_back(w);
      }
  }
  if (prev[b] == 0) return {};
  std::vector<Vertex> p{b};
  while (p.back() != a) p.push_back(prev[p.back()]);
  std::reverse(p.begin(), p.end());
  return p;
}

// Chordless cycle through v, a, b where a, b are non-adjacent neighbors of v.
std::optional<InducedCycle> cycle_through(const Graph& g, Vertex v, Vertex a, Vertex b) {
  std::vector<char> blocked(g.vertex_count() + 1, 0);
  blocked[v] = 1;
  for (Vertex w : g.neighbors(v))
    if (w != a && w != b) blocked[w] = 1;
  auto p = shortest_path(g, a, b, blocked);
  if (p.empty()) return std::nullopt;
  InducedCycle c;
  c.vertices.push_back(v);
  c.vertices.insert(c.vertices.end(), p.begin(), p.end());
  // Canonical rotation: smallest vertex first, then its smaller cycle neighbor.
  auto& cv = c.vertices;
  std::rotate(cv.begin(), std::min_element(cv.begin(), cv.end()), cv.end());
  if (cv.back() < cv[1]) std::reverse(cv.begin() + 1, cv.end());
  return c;
}

}  // namespace

bool is_perfect_elimination_order(const Graph& g, const std::vector<Vertex>& order) {
  std::vector<int> pos(g.vertex_count() + 1, -1);
  for (std::size_t k = 0; k < order.size(); ++k) pos[order[k]] = static_cast<int>(k);
  for (std::size_t k = 0; k < order.size(); ++k) {
    std::vector<Vertex> earlier;
    for (Vertex w : g.neighbors(order[k]))
      if (pos[w] < static_cast<int>(k)) earlier.push_back(w);
    for (std::size_t a = 0; a < earlier.size(); ++a)
      for (std::size_t b = a + 1; b < earlier.size(); ++b)
        if (!g.adjacent(earlier[a], earlier[b])) return false;
  }
  return true;
}

std::variant<std::vector<Vertex>, InducedCycle> perfect_elimination_order(const Graph& g) {
  auto order = max_cardinality_search(g);
  std::vector<int> pos(g.vertex_count() + 1);
  for (std::size_t k = 0; k < order.size(); ++k) pos[order[k]] = static_cast<int>(k);

  bool chordal = true;
  for (std::size_t k = 0; k < order.size() && chordal; ++k) {
    Vertex v = order[k];
    std::vector<Vertex> earlier;
    for (Vertex w : g.neighbors(v))
      if (pos[w] < static_cast<int>(k)) earlier.push_back(w);
    for (std::size_t a = 0; a < earlier.size() && chordal; ++a)
      for (std::size_t b = a + 1; b < earlier.size() && chordal; ++b)
        if (!g.adjacent(earlier[a], earlier[b])) {
          if (auto c = cycle_through(g, v, earlier[a], earlier[b])) return *c;
          chordal = false;
        }
  }
  if (chordal) return order;

  for (Vertex v = 1; v <= g.vertex_count(); ++v) {
    const auto& nb = g.neighbors(v);
    for (std::size_t a = 0; a < nb.size(); ++a)
      for (std::size_t b = a + 1; b < nb.size(); ++b)
        if (!g.adjacent(nb[a], nb[b]))
          if (auto c = cycle_through(g, v, nb[a], nb[b])) return *c;
  }
  throw std::logic_error("maximum cardinality search failed but no induced cycle exists");
}

// ---------------------------------------------------------------------------
// Forbidden patterns

std::optional<Claw> find_claw(const Graph& g) {
  for (Vertex c = 1; c <= g.vertex_count(); ++c) {
    const auto& nb = g.neighbors(c);
    if (nb.size() < 3) continue;
    for (std::size_t a = 0; a < nb.size(); ++a)
      for (std::size_t b = a + 1; b < nb.size(); ++b) {
        if (g.adjacent(nb[a], nb[b])) continue;
        for (std::size_t d = b + 1; d < nb.size(); ++d)
          if (!g.adjacent(nb[a], nb[d]) && !g.adjacent(nb[b], nb[d]))
            return Claw{c, {nb[a], nb[b], nb[d]}};
      }
  }
  return std::nullopt;
}

namespace {

template <class Visit>
bool for_each_triangle(const Graph& g, Visit&& visit) {
  for (Vertex a = 1; a <= g.vertex_count(); ++a) {
    if (g.degree(a) < 2) continue;
    for (Vertex b : g.neighbors(a)) {
      if (b <= a) continue;
      for (Vertex c : g.neighbors(b))
        if (c > b && g.adjacent(a, c) && visit(a, b, c)) return true;
    }
  }
  return false;
}

bool pairwise_independent(const Graph& g, Vertex x, Vertex y, Vertex z) {
  return !g.adjacent(x, y) && !g.adjacent(y, z) && !g.adjacent(x, z);
}

}  // namespace

std::optional<std::vector<Vertex>> find_forbidden_six(const Graph& g, ForbiddenPattern pattern) {
  std::optional<std::vector<Vertex>> found;
  if (pattern == ForbiddenPattern::Net) {
    for_each_triangle(g, [&](Vertex a, Vertex b, Vertex c) {
      auto pendants = [&](Vertex at, Vertex o1, Vertex o2) {
        std::vector<Vertex> r;
        for (Vertex w : g.neighbors(at))
          if (w != o1 && w != o2 && !g.adjacent(w, o1) && !g.adjacent(w, o2)) r.push_back(w);
        return r;
      };
      auto pa = pendants(a, b, c), pb = pendants(b, a, c), pc = pendants(c, a, b);
      for (Vertex x : pa)
        for (Vertex y : pb)
          for (Vertex z : pc)
            if (pairwise_independent(g, x, y, z)) {
              found = std::vector<Vertex>{a, b, c, x, y, z};
              return true;
            }
      return false;
    });
  } else {
    for_each_triangle(g, [&](Vertex a, Vertex b, Vertex c) {
      // Outer vertices adjacent to exactly the pair (p, q) of the triangle.
      auto outer = [&](Vertex p, Vertex q, Vertex off) {
        std::vector<Vertex> r;
        for (Vertex w : g.neighbors(p))
          if (w != q && w != off && g.adjacent(w, q) && !g.adjacent(w, off)) r.push_back(w);
        return r;
      };
      auto xs = outer(a, b, c), ys = outer(b, c, a), zs = outer(a, c, b);
      for (Vertex x : xs)
        for (Vertex y : ys)
          for (Vertex z : zs)
            if (pairwise_independent(g, x, y, z)) {
              found = std::vector<Vertex>{a, b, c, x, y, z};
              return true;
            }
      return false;
    });
  }
  return found;
}

std::optional<std::array<Vertex, 3>> find_induced_p3(const Graph& g) {
  for (Vertex j = 1; j <= g.vertex_count(); ++j) {
    const auto& nb = g.neighbors(j);
    for (std::size_t a = 0; a < nb.size(); ++a)
      for (std::size_t b = a + 1; b < nb.size(); ++b)
        if (!g.adjacent(nb[a], nb[b])) return std::array<Vertex, 3>{nb[a], j, nb[b]};
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Closed labelings

bool verify_closed_labeling(const Graph& g, const Labeling& lab) {
  const Graph h = relabel(g, lab);
  const int n = h.vertex_count();
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (j == i || !h.adjacent(i, j)) continue;
      for (int k = 1; k <= n; ++k) {
        bool ordered = (i < j && j < k) || (i > j && j > k);
        if (ordered && h.adjacent(i, k) && !h.adjacent(j, k)) return false;
      }
    }
  return true;
}

std::vector<std::vector<Vertex>> maximal_cliques(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> r;
  // Bron-Kerbosch with pivoting.
  auto bk = [&](auto&& self, std::vector<Vertex> p, std::vector<Vertex> x) -> void {
    if (p.empty() && x.empty()) {
      auto c = r;
      std::sort(c.begin(), c.end());
      out.push_back(std::move(c));
      return;
    }
    Vertex pivot = !p.empty() ? p.front() : x.front();
    std::size_t best = 0;
    for (const auto* set : {&p, &x})
      for (Vertex u : *set) {
        std::size_t cnt = 0;
        for (Vertex w : p) cnt += g.adjacent(u, w);
        if (cnt >= best) {
          best = cnt;
          pivot = u;
        }
      }
    std::vector<Vertex> cand;
    for (Vertex v : p)
      if (!g.adjacent(pivot, v)) cand.push_back(v);
    for (Vertex v : cand) {
      std::vector<Vertex> np, nx;
      for (Vertex w : p)
        if (g.adjacent(v, w)) np.push_back(w);
      for (Vertex w : x)
        if (g.adjacent(v, w)) nx.push_back(w);
      r.push_back(v);
      self(self, std::move(np), std::move(nx));
      r.pop_back();
      p.erase(std::find(p.begin(), p.end(), v));
      x.push_back(v);
    }
  };
  std::vector<Vertex> all(g.vertex_count());
  std::iota(all.begin(), all.end(), 1);
  bk(bk, all, {});
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<IntervalFacetList> interval_facets(const Graph& g, const Labeling& lab) {
  IntervalFacetList out;
  for (const auto& c : maximal_cliques(relabel(g, lab))) {
    if (c.back() - c.front() + 1 != static_cast<int>(c.size())) return std::nullopt;
    out.push_back({c.front(), c.back()});
  }
  std::sort(out.begin(), out.end(), [](Interval a, Interval b) { return a.lo < b.lo; });
  return out;
}

namespace {

// Maximal cliques of the closed ordering `seq` of a connected graph, as
// position intervals [lo, hi].
std::vector<std::pair<int, int>> ordered_facets(const Graph& g, const std::vector<Vertex>& seq) {
  std::vector<std::pair<int, int>> facets;
  const int len = static_cast<int>(seq.size());
  int prev_reach = -1;
  for (int p = 0; p < len; ++p) {
    int r = p;
    while (r + 1 < len && g.adjacent(seq[p], seq[r + 1])) ++r;
    if (r > prev_reach) facets.emplace_back(p, r);
    prev_reach = std::max(prev_reach, r);
  }
  return facets;
}

// Checks only the triples involving the freshly inserted vertex v; the
// remaining vertices keep a closed relative order.
bool insertion_is_closed(const Graph& g, const std::vector<Vertex>& seq, Vertex v) {
  std::vector<int> pos(g.vertex_count() + 1, -1);
  for (std::size_t k = 0; k < seq.size(); ++k) pos[seq[k]] = static_cast<int>(k);
  const int pv = pos[v];
  for (Vertex u : g.neighbors(v)) {
    if (pos[u] < 0) continue;
    const bool v_after = pv > pos[u];
    for (Vertex w : g.neighbors(u)) {
      if (w == v || pos[w] < 0) continue;
      if ((pos[w] > pos[u]) == v_after && !g.adjacent(v, w)) return false;
    }
  }
  for (Vertex a : g.neighbors(v))
    for (Vertex b : g.neighbors(v))
      if (a < b && pos[a] >= 0 && pos[b] >= 0 && !g.adjacent(a, b)) return false;
  return true;
}

// Reorders each twin run of `seq` (positions sharing the same facet
// membership) that satisfies `in_block`, moving members of `nbr` to the run's
// back (or front).
std::vector<Vertex> reorder_twins(const std::vector<Vertex>& seq,
                                  const std::vector<std::pair<int, int>>& facets,
                                  const std::vector<char>& nbr, bool to_back,
                                  bool (*in_block)(int minf, int maxf, int r)) {
  const int len = static_cast<int>(seq.size());
  const int r = static_cast<int>(facets.size()) - 1;
  std::vector<int> minf(len), maxf(len);
  for (int p = 0; p < len; ++p) {
    minf[p] = -1;
    for (int f = 0; f <= r; ++f)
      if (facets[f].first <= p && p <= facets[f].second) {
        if (minf[p] < 0) minf[p] = f;
        maxf[p] = f;
      }
  }
  std::vector<Vertex> out = seq;
  int start = 0;
  while (start < len) {
    int end = start;
    while (end + 1 < len && minf[end + 1] == minf[start] && maxf[end + 1] == maxf[start]) ++end;
    if (in_block(minf[start], maxf[start], r)) {
      auto first = out.begin() + start, last = out.begin() + end + 1;
      std::stable_partition(first, last, [&](Vertex w) { return (nbr[w] != 0) != to_back; });
    }
    start = end + 1;
  }
  return out;
}

std::optional<std::vector<Vertex>> label_connected(const Graph& g) {
  auto peo = perfect_elimination_order(g);
  if (!std::holds_alternative<std::vector<Vertex>>(peo)) return std::nullopt;
  const auto& order = std::get<std::vector<Vertex>>(peo);

  std::vector<Vertex> seq{order.front()};
  std::vector<char> placed(g.vertex_count() + 1, 0), nbr(g.vertex_count() + 1, 0);
  placed[order.front()] = 1;

  for (std::size_t t = 1; t < order.size(); ++t) {
    const Vertex v = order[t];
    std::fill(nbr.begin(), nbr.end(), 0);
    std::size_t deg = 0;
    for (Vertex w : g.neighbors(v))
      if (placed[w]) nbr[w] = 1, ++deg;

    const auto facets = ordered_facets(g, seq);
    const int len = static_cast<int>(seq.size());
    const int r = static_cast<int>(facets.size()) - 1;

    auto is_suffix = [&](const std::vector<Vertex>& s) {
      for (int p = 0; p < len; ++p)
        if ((nbr[s[p]] != 0) != (p >= len - static_cast<int>(deg))) return false;
      return true;
    };
    auto is_prefix = [&](const std::vector<Vertex>& s) {
      for (int p = 0; p < len; ++p)
        if ((nbr[s[p]] != 0) != (p < static_cast<int>(deg))) return false;
      return true;
    };
    auto appended = [&](std::vector<Vertex> s) {
      s.push_back(v);
      return s;
    };
    auto prepended = [&](std::vector<Vertex> s) {
      s.insert(s.begin(), v);
      return s;
    };

    std::vector<std::vector<Vertex>> candidates;
    // No relabeling: neighbors already form the last or first facet block.
    if (is_suffix(seq)) candidates.push_back(appended(seq));
    if (is_prefix(seq)) candidates.push_back(prepended(seq));
    // Interior facet F_i equal to the neighborhood, with F_{i-1}, F_{i+1} disjoint.
    for (int i = 1; i + 1 <= r; ++i) {
      auto [lo, hi] = facets[i];
      if (static_cast<std::size_t>(hi - lo + 1) != deg) continue;
      bool equal = true;
      for (int p = lo; p <= hi && equal; ++p) equal = nbr[seq[p]] != 0;
      if (!equal || facets[i - 1].second >= facets[i + 1].first) continue;
      auto s = seq;
      s.insert(s.begin() + facets[i + 1].first, v);
      candidates.push_back(std::move(s));
    }
    // Relabel free / intersection vertices inside the last or first facet.
    auto back = reorder_twins(seq, facets, nbr, true,
                              [](int, int maxf, int last) { return maxf == last; });
    if (is_suffix(back)) candidates.push_back(appended(back));
    auto front = reorder_twins(seq, facets, nbr, false, [](int minf, int, int) { return minf == 0; });
    if (is_prefix(front)) candidates.push_back(prepended(front));

    bool ok = false;
    placed[v] = 1;
    for (auto& c : candidates)
      if (insertion_is_closed(g, c, v)) {
        seq = std::move(c);
        ok = true;
        break;
      }
    if (!ok) return std::nullopt;
  }
  // Orientation: larger end facet first, then smaller vertex first.
  const auto facets = ordered_facets(g, seq);
  const int first = facets.front().second - facets.front().first;
  const int last = facets.back().second - facets.back().first;
  if (first < last || (first == last && seq.front() > seq.back())) std::reverse(seq.begin(), seq.end());
  return seq;
}

}  // namespace

std::optional<ClosedLabeling> closed_labeling(const Graph& g) {
  std::vector<Vertex> global;
  global.reserve(g.vertex_count());
  for (const auto& comp : g.components()) {
    auto local = label_connected(g.induced(comp));
    if (!local) return std::nullopt;
    for (Vertex w : *local) global.push_back(comp[w - 1]);
  }
  ClosedLabeling out{Labeling::from_order(global), {}};
  auto facets = interval_facets(g, out.labeling);
  if (!facets) return std::nullopt;
  out.facets = std::move(*facets);
  return out;
}

ClosednessCertificate is_closed(const Graph& g) {
  for (const auto& comp : g.components()) {
    const Graph h = g.induced(comp);
    auto back = [&](Vertex w) { return comp[w - 1]; };
    auto peo = perfect_elimination_order(h);
    if (auto* cyc = std::get_if<InducedCycle>(&peo)) {
      for (auto& w : cyc->vertices) w = back(w);
      return *cyc;
    }
    if (auto claw = find_claw(h)) {
      claw->center = back(claw->center);
      for (auto& w : claw->leaves) w = back(w);
      return *claw;
    }
    if (auto six = find_forbidden_six(h, ForbiddenPattern::Net)) {
      Net net;
      for (int k = 0; k < 6; ++k) net.vertices[k] = back((*six)[k]);
      return net;
    }
    if (auto six = find_forbidden_six(h, ForbiddenPattern::Sun)) {
      Sun sun;
      for (int k = 0; k < 6; ++k) sun.vertices[k] = back((*six)[k]);
      return sun;
    }
  }
  auto lab = closed_labeling(g);
  if (!lab) throw std::logic_error("obstruction-free graph without a closed labeling");
  return *lab;
}

std::optional<Labeling> brute_force_closed(const Graph& g, int cap) {
  if (g.vertex_count() > cap)
    throw CapExceeded("brute-force labeling search limited to " + std::to_string(cap) +
                      " vertices, graph has " + std::to_string(g.vertex_count()));
  std::vector<Vertex> perm(g.vertex_count());
  std::iota(perm.begin(), perm.end(), 1);
  do {
    Labeling lab(perm);
    if (verify_closed_labeling(g, lab)) return lab;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

}  // namespace koszul
