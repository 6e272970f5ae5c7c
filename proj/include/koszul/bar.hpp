#pragma once

// Graded Betti numbers of the residue field over R = S/J through the reduced
// bar complex, with standard-monomial bases of R.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "koszul/graph.hpp"
#include "koszul/groebner.hpp"

namespace koszul {

struct BarLimits {
  std::size_t max_dimension = 200000;  // basis elements of one bar space
  bool verify_dd = true;               // check d(d(t)) = 0 on every column built
};

/// Sparse matrix over GF(p), stored by columns.
struct SparseMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<std::vector<std::pair<std::size_t, PrimeField::Element>>> columns;  // sorted by row, no zeros
  std::size_t nonzeros() const;
};

/// Rank of a sparse matrix by column elimination.
std::size_t rank(const SparseMatrix& a, const PrimeField& field);

/// a * b, or nullopt when the shapes do not match.
std::optional<SparseMatrix> multiply(const SparseMatrix& a, const SparseMatrix& b, const PrimeField& field);

/// Per-variable weight vectors for a grading under which J is homogeneous.
using Grading = std::vector<std::vector<int>>;
Grading total_degree_grading(int nvars);
/// The Z^{m+n} grading x[i,j] -> eps_i + eps_{m+j}.
Grading grid_grading(int m, int n);

class BarComplex {
 public:
  /// `gb` must be a reduced GB of a homogeneous ideal whose monomial normal
  /// forms are single terms (binomial or monomial ideals). `grading` defaults
  /// to total degree.
  BarComplex(PolyRing<PrimeField> ring, ReducedGB<PrimeField> gb, Grading grading = {}, BarLimits limits = {});

  const PolyRing<PrimeField>& ring() const { return ring_; }
  const BarLimits& limits() const { return limits_; }
  void set_limits(const BarLimits& l) { limits_ = l; }

  /// Degree-d monomials outside in(J), descending under the GB order.
  const std::vector<Monomial>& standard_monomials(int d);
  std::size_t hilbert(int d) { return standard_monomials(d).size(); }

  /// Normal form of u*v as a single term, nullopt when it is zero.
  std::optional<Term<PrimeField>> multiply(const Monomial& u, const Monomial& v);

  /// Dimension of the bar space in homological degree i, internal degree j
  /// (saturates at SIZE_MAX).
  std::size_t dimension(int i, int j);

  /// Basis tuples of B(i, j) as (degree, standard-monomial index) per factor.
  std::vector<std::vector<std::pair<int, int>>> basis(int i, int j);

  /// Full matrix of d: B(i, j) -> B(i-1, j). Subject to the dimension cap.
  SparseMatrix differential(int i, int j);

  /// Rank of d on B(i, j), block by block over the grading.
  std::size_t differential_rank(int i, int j);

  /// beta_{i,j} of the residue field.
  std::size_t betti(int i, int j);

  /// Columns whose d(d(column)) was checked, and how many were nonzero.
  std::size_t dd_checked() const { return dd_checked_; }
  std::size_t dd_failures() const { return dd_failures_; }

  /// Blocks and largest block met by the last differential_rank call.
  std::size_t last_block_count() const { return last_blocks_; }
  std::size_t last_largest_block() const { return last_largest_; }

 private:
  struct Space {
    std::vector<std::vector<int>> comps;  // compositions of j into i positive parts, lex order
    std::vector<std::size_t> offsets;     // first global index of each composition
    std::map<std::vector<int>, std::size_t> comp_id;
    std::size_t dim = 0;
  };
  const Space& space(int i, int j);
  void check_cap(int i, int j);
  std::vector<std::pair<int, int>> decode(int i, int j, std::size_t index);
  std::size_t encode(int j, const std::vector<std::pair<int, int>>& tuple);
  // d of one basis tuple as combined (index in B(i-1, j), coefficient) pairs.
  void face_images(int j, const std::vector<std::pair<int, int>>& tuple,
                   std::vector<std::pair<std::size_t, PrimeField::Element>>& out);
  std::optional<std::pair<int, PrimeField::Element>> product(int d1, int a, int d2, int b);
  bool dd_vanishes(int i, int j, const std::vector<std::pair<std::size_t, PrimeField::Element>>& image);

  PolyRing<PrimeField> ring_;
  ReducedGB<PrimeField> gb_;
  Grading grading_;
  BarLimits limits_;
  std::vector<Monomial> leading_;
  std::vector<std::vector<Monomial>> std_;
  std::vector<std::unordered_map<Monomial, int, MonomialHash>> std_index_;
  std::unordered_map<std::uint64_t, std::pair<int, PrimeField::Element>> products_;
  std::vector<std::vector<std::vector<int>>> std_grade_;
  std::map<std::pair<int, int>, Space> spaces_;
  std::map<std::pair<int, int>, std::size_t> ranks_;
  std::size_t dd_checked_ = 0, dd_failures_ = 0;
  std::size_t last_blocks_ = 0, last_largest_ = 0;
};

/// Bar complex of the pair ring S/J_{g1,g2} over GF(p), graded by Z^{m+n}.
BarComplex pair_bar_complex(const Graph& g1, const Graph& g2, std::uint32_t p = PrimeField::kDefaultPrime,
                            BarLimits limits = {}, GbLimits gb_limits = {});

struct BettiTable {
  std::map<std::pair<int, int>, std::size_t> values;
  std::string to_json() const;
  /// Resolution-table layout: columns i, rows j - i; '-' for zero, '?' for not computed.
  std::string to_text() const;
};

struct ProbeResult {
  std::optional<std::pair<int, int>> nonzero;   // first off-diagonal nonzero bidegree
  std::vector<std::pair<int, int>> scanned;     // bidegrees computed, in scan order
  std::optional<std::string> stopped_by_cap;    // diagnostic when a cap ended the scan
};

/// Scans i = 1..i_max, j = i+1..j_max and stops at the first nonzero beta_{i,j}.
ProbeResult koszul_probe(BarComplex& bar, int i_max, int j_max);

}  // namespace koszul
