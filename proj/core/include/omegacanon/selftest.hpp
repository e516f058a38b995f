#pragma once

#include <string>
#include <vector>

#include "omegacanon/errors.hpp"

namespace omegacanon {

/// Word bounds for the property suites.
struct SelftestBounds {
  int max_u = 2;    // spoke length for sampled pairs
  int max_v = 5;    // period length for sampled pairs
  int max_ext = 6;  // extension search length for existential properties
  int max_rep = 4;  // repetition bound for power properties
  int brute_v = 3;  // period length cross-checked against the literal color definition
  int brute_z = 4;  // quantifier bound of the literal definition
  int brute_rep = 3;
};

/// One failed property instance with a replayable witness.
struct Violation {
  std::string language;
  std::string property;
  std::string witness;
};

/// Runs every property suite (color properties, the clamped variants,
/// colorful-FDFA properties, FDFA algebra, persistence, lector contract,
/// measure robustness) over the bundled fixture languages.  Returns the
/// collected violations; an empty result is the release gate.
std::vector<Violation> run_property_suites(const SelftestBounds& bounds = {},
                                           const Limits& limits = {});

/// Runs the saturation checker against the bundled unsaturated gadget and
/// returns the violation it is expected to find (empty only if the checker
/// failed to detect it, which is itself reported as a violation).
std::vector<Violation> run_injected_bug_check(const SelftestBounds& bounds = {});

}  // namespace omegacanon
