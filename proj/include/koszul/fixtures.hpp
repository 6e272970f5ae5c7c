#pragma once

// The paper fixture suite behind `koszul verify-paper`.

#include <functional>
#include <string>
#include <vector>

#include "koszul/bar.hpp"
#include "koszul/groebner.hpp"

namespace koszul {

using GbEngine = std::function<ReducedGB<PrimeField>(const PolyRing<PrimeField>&,
                                                     const std::vector<Polynomial<PrimeField>>&, const TermOrder&,
                                                     const GbLimits&)>;

/// The library's Buchberger; tests swap in broken engines.
GbEngine default_gb_engine();

struct FixtureConfig {
  std::uint32_t prime = PrimeField::kDefaultPrime;
  GbLimits gb;
  BarLimits bar;
  bool stretch = false;  // also the higher Betti values of the table
  GbEngine engine = default_gb_engine();
};

enum class FixtureStatus { Pass, Fail, Skipped };

struct FixtureResult {
  std::string name;
  FixtureStatus status = FixtureStatus::Pass;
  std::string detail;
};

struct FixtureReport {
  std::vector<FixtureResult> items;
  bool any(FixtureStatus s) const;
  std::string to_text() const;
  std::string to_json() const;
};

FixtureReport verify_fixture_suite(const FixtureConfig& config = {});

}  // namespace koszul
