#include "omegacanon/wagner.hpp"

#include <algorithm>

#include "omegacanon/scc.hpp"

namespace omegacanon {

std::string to_string(HierarchyPolarity p) {
  switch (p) {
    case HierarchyPolarity::Plus: return "plus";
    case HierarchyPolarity::Minus: return "minus";
    case HierarchyPolarity::PlusMinus: return "plus_minus";
  }
  return "?";
}

WagnerMeasure inclusion_measures(const OmegaAutomaton& m, const Limits& limits) {
  WagnerMeasure out;
  SccDecomposition d = sccs(m.structure);
  for (size_t comp = 0; comp < d.components.size(); ++comp) {
    if (!d.proper[comp]) continue;
    const std::vector<State>& mscc = d.components[comp];
    int k = static_cast<int>(mscc.size());
    if (k > limits.subset_cap)
      throw CapacityError("inclusion_measures: MSCC of size " + std::to_string(k) +
                          " exceeds the subset enumeration cap " +
                          std::to_string(limits.subset_cap));
    // Collect the strongly connected subsets with their acceptance.
    std::vector<unsigned> masks;
    std::vector<bool> acc;
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
      std::vector<State> subset;
      for (int i = 0; i < k; ++i)
        if (mask >> i & 1) subset.push_back(mscc[i]);
      if (!is_scc(m.structure, subset)) continue;
      masks.push_back(mask);
      acc.push_back(m.acceptance.accepts_inf_set(subset));
    }
    // Longest alternating chain upward from each subset, largest first.
    std::vector<int> order(masks.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return __builtin_popcount(masks[a]) > __builtin_popcount(masks[b]);
    });
    std::vector<int> chain(masks.size(), 1);
    for (int i : order) {
      for (size_t j = 0; j < masks.size(); ++j) {
        if (i == static_cast<int>(j)) continue;
        bool strict_superset = (masks[i] & masks[j]) == masks[i] && masks[i] != masks[j];
        if (strict_superset && acc[i] != acc[j]) chain[i] = std::max(chain[i], 1 + chain[j]);
      }
    }
    for (size_t i = 0; i < masks.size(); ++i) {
      int& slot = acc[i] ? out.m_plus : out.m_minus;
      slot = std::max(slot, chain[i]);
    }
  }
  return out;
}

HierarchyClass classify(const WagnerMeasure& w) {
  if (w.m_plus == w.m_minus) return {w.m_plus, HierarchyPolarity::PlusMinus};
  if (w.m_plus > w.m_minus) return {w.m_plus, HierarchyPolarity::Plus};
  return {w.m_minus, HierarchyPolarity::Minus};
}

HierarchyClass classify(const OmegaAutomaton& m, const Limits& limits) {
  return classify(inclusion_measures(m, limits));
}

}  // namespace omegacanon
