#pragma once

#include <optional>
#include <vector>

#include "omegacanon/automaton.hpp"

namespace omegacanon {

/// Strongly-connected-component decomposition of (a restriction of) a
/// transition graph.  Components are listed in topological order over the
/// condensation: edges only go from lower to higher component ids.
struct SccDecomposition {
  /// component id per state; -1 for states outside the decomposed set.
  std::vector<int> component_of;
  std::vector<std::vector<State>> components;
  /// condensation successors per component id (sorted, deduplicated).
  std::vector<std::vector<int>> condensation;
  /// true iff the component is a proper SCC: more than one state, or a
  /// singleton with a self-loop.  Trivial singletons without a self-loop
  /// still appear as condensation nodes but are not SCCs.
  std::vector<bool> proper;

  bool is_terminal(int comp) const { return condensation[comp].empty(); }
};

/// Decomposes the subgraph induced by `restrict_to` (or the states reachable
/// from the initial state when absent).
SccDecomposition sccs(const AutomatonStructure& s,
                      const std::optional<std::vector<State>>& restrict_to = std::nullopt);

/// True iff every ordered pair of S is connected by a path inside S, with
/// the convention that a singleton needs a self-loop.
bool is_scc(const AutomatonStructure& s, const std::vector<State>& set);

}  // namespace omegacanon
