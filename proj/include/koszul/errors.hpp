#pragma once

#include <stdexcept>
#include <string>

namespace koszul {

/// A configured resource cap (GB size/degree, bar dimension, labeling
/// count) would be exceeded. Distinct from invalid input.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The degree cap specifically; a homogeneous Buchberger run that hits a
/// degree cap of d has a minimal generator of degree > d.
class DegreeCapExceeded : public CapExceeded {
 public:
  using CapExceeded::CapExceeded;
};

/// Malformed graph or polynomial text.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace koszul
