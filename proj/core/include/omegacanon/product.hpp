#pragma once

#include <vector>

#include "omegacanon/automaton.hpp"

namespace omegacanon {

/// Reachable synchronous product of two or more structures over one
/// alphabet.  projections[i][p] recovers the i-th component state of
/// product state p; they compose homomorphically with delta.
struct Product {
  AutomatonStructure structure;
  std::vector<std::vector<State>> projections;
};

Product product(const std::vector<const AutomatonStructure*>& components);
Product product(const AutomatonStructure& a, const AutomatonStructure& b);

/// Product started from explicit component states instead of the initials.
Product product_from(const std::vector<const AutomatonStructure*>& components,
                     const std::vector<State>& start);

}  // namespace omegacanon
