#pragma once

#include <string>

#include "omegacanon/omega.hpp"

namespace omegacanon {

/// Longest alternating inclusion chains of strongly connected subsets,
/// starting accepting (m_plus) / rejecting (m_minus).  The two always
/// differ by at most one.
struct WagnerMeasure {
  int m_plus = 0;
  int m_minus = 0;

  bool operator==(const WagnerMeasure& o) const = default;
};

enum class HierarchyPolarity { Plus, Minus, PlusMinus };

std::string to_string(HierarchyPolarity p);

/// Least Wagner-hierarchy class containing the language.
struct HierarchyClass {
  int k = 1;
  HierarchyPolarity polarity = HierarchyPolarity::PlusMinus;

  bool operator==(const HierarchyClass& o) const = default;
};

/// Enumerates the strongly connected subsets of every reachable MSCC
/// (guarded by limits.subset_cap) and runs a longest-alternating-chain DP
/// over strict inclusion.  Inclusion chains never cross MSCC borders, so
/// the enumeration is per MSCC.
WagnerMeasure inclusion_measures(const OmegaAutomaton& m, const Limits& limits = {});

HierarchyClass classify(const WagnerMeasure& w);
HierarchyClass classify(const OmegaAutomaton& m, const Limits& limits = {});

}  // namespace omegacanon
