#pragma once

#include <vector>

#include "omegacanon/automaton.hpp"

namespace omegacanon {

/// Quotient of a Moore machine by the coarsest congruence refining output
/// equality, restricted to the reachable part.  Quotient states are
/// numbered BFS-canonically from the initial class.
struct MooreMinimization {
  AutomatonStructure structure;
  /// output of each quotient state.
  std::vector<int> output;
  /// original state -> quotient state (-1 for unreachable originals).
  std::vector<State> state_map;
};

/// When respect_initial_output is false the initial state's own output is
/// not observed: it is seeded as a designated singleton block and never
/// merges with any other class.  This realizes progress-DFA construction
/// where the empty word has no output of its own.
MooreMinimization minimize_moore(const AutomatonStructure& s, const std::vector<int>& output,
                                 bool respect_initial_output = true);

/// Classical DFA minimization via the Moore reduction with the accepting
/// bit as output.
Dfa minimize_dfa(const Dfa& d);

}  // namespace omegacanon
