#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace koszul {

using Vertex = int;  // 1-based throughout the public API
using Edge = std::pair<Vertex, Vertex>;

/// Labeled simple undirected graph on the vertex set {1..n}.
///
/// Edges are normalized to (i, j) with i < j and kept sorted; loops,
/// duplicates and out-of-range endpoints are rejected at construction.
class Graph {
 public:
  Graph() = default;
  Graph(int n, std::vector<Edge> edges);

  static Graph complete(int n);
  static Graph path(int n);
  static Graph cycle(int n);

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  bool adjacent(Vertex i, Vertex j) const {
    return adj_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)] != 0;
  }
  /// Sorted neighbor list of v.
  const std::vector<Vertex>& neighbors(Vertex v) const { return nbrs_[v - 1]; }
  int degree(Vertex v) const { return static_cast<int>(nbrs_[v - 1].size()); }

  /// Subgraph induced on `vs`; vertex vs[k] becomes k+1.
  Graph induced(const std::vector<Vertex>& vs) const;
  /// Vertex sets of connected components, each sorted, ordered by smallest vertex.
  std::vector<std::vector<Vertex>> components() const;
  bool connected() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<char> adj_;
  std::vector<std::vector<Vertex>> nbrs_;
};

/// perm[v-1] is the new label of original vertex v.
class Labeling {
 public:
  Labeling() = default;
  explicit Labeling(std::vector<Vertex> perm);
  static Labeling identity(int n);
  /// Labeling that puts order[k] at label k+1.
  static Labeling from_order(const std::vector<Vertex>& order);

  int size() const { return static_cast<int>(perm_.size()); }
  Vertex operator()(Vertex v) const { return perm_[v - 1]; }
  const std::vector<Vertex>& perm() const { return perm_; }
  /// order()[k] is the original vertex carrying label k+1.
  std::vector<Vertex> order() const;

  friend bool operator==(const Labeling&, const Labeling&) = default;

 private:
  std::vector<Vertex> perm_;
};

/// The graph with every vertex v renamed to lab(v).
Graph relabel(const Graph& g, const Labeling& lab);

struct Interval {
  Vertex lo;
  Vertex hi;
  friend bool operator==(const Interval&, const Interval&) = default;
};
using IntervalFacetList = std::vector<Interval>;

// ---- closedness certificates ----

struct ClosedLabeling {
  Labeling labeling;
  IntervalFacetList facets;
};
struct InducedCycle {
  std::vector<Vertex> vertices;  // in cyclic order, length >= 4
};
struct Claw {
  Vertex center;
  std::array<Vertex, 3> leaves;
};
/// Triangle a,b,c with pendants a',b',c': vertices = {a,b,c,a',b',c'}.
struct Net {
  std::array<Vertex, 6> vertices;
};
/// Inner triangle a,b,c; outer x~{a,b}, y~{b,c}, z~{a,c}: vertices = {a,b,c,x,y,z}.
struct Sun {
  std::array<Vertex, 6> vertices;
};

using ClosednessCertificate = std::variant<ClosedLabeling, InducedCycle, Claw, Net, Sun>;

inline bool is_closed_certificate(const ClosednessCertificate& c) {
  return std::holds_alternative<ClosedLabeling>(c);
}
/// "closed", "induced-cycle", "claw", "net" or "sun".
std::string certificate_kind(const ClosednessCertificate& c);
/// Witness vertices in pattern order (empty for a closed labeling).
std::vector<Vertex> witness_vertices(const ClosednessCertificate& c);

enum class ForbiddenPattern { Net, Sun };

// ---- operations ----

bool is_complete(const Graph& g);

/// Maximum-cardinality search order (lowest index breaks ties). Every
/// vertex's earlier neighbors form a clique iff g is chordal; otherwise an
/// induced cycle of length >= 4 is returned.
std::variant<std::vector<Vertex>, InducedCycle> perfect_elimination_order(const Graph& g);

/// True iff each vertex's earlier neighbors in `order` form a clique.
bool is_perfect_elimination_order(const Graph& g, const std::vector<Vertex>& order);

std::optional<Claw> find_claw(const Graph& g);
std::optional<std::vector<Vertex>> find_forbidden_six(const Graph& g, ForbiddenPattern pattern);

ClosednessCertificate is_closed(const Graph& g);

std::optional<ClosedLabeling> closed_labeling(const Graph& g);

/// Checks the triple condition on the relabeled graph: for i<j<k or i>j>k,
/// {i,j},{i,k} edges imply {j,k} edge.
bool verify_closed_labeling(const Graph& g, const Labeling& lab);

/// Maximal cliques under `lab`, sorted by minimum, if all are intervals.
std::optional<IntervalFacetList> interval_facets(const Graph& g, const Labeling& lab);

/// Maximal cliques (sorted vertex lists, lexicographically ordered).
std::vector<std::vector<Vertex>> maximal_cliques(const Graph& g);

/// Exhaustive search over all n! labelings. Throws CapExceeded when n > cap.
std::optional<Labeling> brute_force_closed(const Graph& g, int cap = 8);

// ---- named graphs ----

/// H1: triangle {2,3,4} with pendant edges {1,2}, {3,5}, {4,6}.
Graph net_graph();
/// H2: inner triangle {1,2,3}; outer 4~{1,2}, 5~{2,3}, 6~{1,3}.
Graph sun_graph();
/// K_{1,3} centered at 1.
Graph claw_graph();

/// Some induced path a-b-c (a, c non-adjacent), if g is not a disjoint union of cliques.
std::optional<std::array<Vertex, 3>> find_induced_p3(const Graph& g);

}  // namespace koszul
