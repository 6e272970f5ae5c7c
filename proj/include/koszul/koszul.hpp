#pragma once

// Koszulness of graph pairs: the combinatorial verdict, its certificates, and
// algebraic cross-checks through Gröbner bases and linear quotients.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "koszul/graph.hpp"
#include "koszul/groebner.hpp"

namespace koszul {

enum class PairStatus { Koszul, NotKoszul, OutOfScope };
std::string to_string(PairStatus s);

/// Verdict for one pair of connected components.
struct ComponentVerdict {
  std::vector<Vertex> left, right;  // original vertex labels
  PairStatus status = PairStatus::Koszul;
  std::string reason;
  // NotKoszul with one side complete: the closedness obstruction of the other.
  int obstruction_side = 0;  // 1 or 2, 0 when absent
  std::string obstruction_kind;
  std::vector<Vertex> obstruction;
  // NotKoszul with neither side complete: an induced path a-b-c on each side.
  std::vector<Vertex> left_p3, right_p3;
};

struct PairVerdict {
  PairStatus status = PairStatus::Koszul;
  std::string reason;
  ClosednessCertificate cert1, cert2;
  bool c_universal = false;
  std::vector<ComponentVerdict> components;
};

PairVerdict decide_pair(const Graph& g1, const Graph& g2);

struct CheckConfig {
  std::uint32_t prime = PrimeField::kDefaultPrime;
  GbLimits gb;
  int exhaustive_max_vertices = 6;
  std::size_t labeling_cap = 50000;  // labeling pairs tried by the exhaustive (iii) check
};

struct CrossCheckReport {
  Labeling labeling1, labeling2;  // labelings the (iii)-(v) checks ran under
  bool lex_performed = false, revlex_performed = false, quotients_performed = false;
  bool gb_lex_quadratic = false, gb_revlex_quadratic = false, linear_quotients_ok = false;
  int lex_max_degree = 0, revlex_max_degree = 0;
  // First failing linear-quotient step, if any.
  std::optional<std::pair<int, int>> quotient_failure;  // (row, col) of the variable
  std::string quotient_witness;
  // Exhaustive (iii) over all labelings; NotKoszul verdicts only.
  bool exhaustive_performed = false;
  std::size_t exhaustive_labelings = 0;
  bool exhaustive_all_fail = false;
  std::vector<std::string> notes;  // skipped checks and cap diagnostics
  bool consistent = true;
};

CrossCheckReport cross_check(const Graph& g1, const Graph& g2, const PairVerdict& verdict,
                             const CheckConfig& config = {});

/// Distinct labeled graphs obtainable from g by relabeling, with one
/// labeling producing each.
std::vector<std::pair<Graph, Labeling>> distinct_relabelings(const Graph& g);

/// Gröbner-basis quadraticity of J_{g1,g2} under (iii). Stops as soon as a
/// cubic leading term appears, which for homogeneous input already decides.
bool quadratic_under_lex(const Graph& g1, const Graph& g2, const CheckConfig& config = {});

struct CUniversalObstruction {
  int side = 0;          // graph lacking an edge
  Vertex a = 0, b = 0, c = 0;  // induced path a-b-c on that side
  Vertex u = 0, w = 0;   // an edge of the other side
  std::string minor;     // g in the polynomial text syntax
  std::string multiplier;  // x with x*g in J
  bool product_in_ideal = false;
  bool minor_outside_ideal = false;
  bool local_colon_nonlinear = false;  // (h1,h2):x has no linear generator
  bool verified() const { return product_in_ideal && minor_outside_ideal && local_colon_nonlinear; }
};

struct CUniversalResult {
  bool universal = false;
  std::optional<CUniversalObstruction> obstruction;
};

/// True iff both graphs are complete. Requires connected graphs on at least
/// three vertices each (throws std::invalid_argument otherwise).
CUniversalResult c_universal_classify(const Graph& g1, const Graph& g2, const CheckConfig& config = {});

std::string certificate_to_json(const ClosednessCertificate& c);
std::string verdict_to_json(const PairVerdict& v, const CrossCheckReport* cross = nullptr);
std::string verdict_to_text(const PairVerdict& v, const CrossCheckReport* cross = nullptr);

}  // namespace koszul
