#pragma once

#include <stdexcept>
#include <string>

namespace omegacanon {

/// Malformed or out-of-contract input (bad file, bad word, mode mismatch,
/// non-recognizable language for a construction).  CLI exit code 2.
class InputError : public std::runtime_error {
public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// A configured enumeration cap was exceeded.  CLI exit code 3.
class CapacityError : public std::runtime_error {
public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

/// Enumeration caps for the deliberately exponential desk-scale routines.
struct Limits {
  /// Largest MSCC whose strongly connected subsets may be enumerated
  /// (Muller equivalence checks, inclusion measures).
  int subset_cap = 12;
  /// Largest number of reachable vector states in a persistent DFA.
  long vector_state_cap = 250000;
  /// Largest number of reachable transition profiles when building a
  /// periodic progress DFA.
  long profile_cap = 250000;
};

}  // namespace omegacanon
