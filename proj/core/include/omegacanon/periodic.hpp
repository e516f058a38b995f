#pragma once

#include <cstdint>
#include <vector>

#include "omegacanon/fdfa.hpp"
#include "omegacanon/omega.hpp"

namespace omegacanon {

/// Per-source summary of reading a word: the target state and the set of
/// states touched along the way (target included, source only if revisited).
/// Profiles compose associatively, and the profile of v determines whether
/// u v^omega is accepted for every u, which is what makes the reachable
/// profile machine a DFA for the periodic progress language.
struct TransitionProfile {
  std::vector<State> target;
  std::vector<std::uint64_t> visited;  // bitmask per source state

  static TransitionProfile identity(int n);
  static TransitionProfile letter(const AutomatonStructure& s, Symbol a);
  TransitionProfile then(const TransitionProfile& next) const;

  bool operator==(const TransitionProfile& o) const = default;
  bool operator<(const TransitionProfile& o) const;
};

/// Minimal DFA for L_u = { v nonempty : u v^omega in L }, for any u in the
/// given leading class.  The empty word is never accepted.
Dfa periodic_progress_dfa(const OmegaAutomaton& m, const LeadingCongruence& leading, int class_u,
                          const Limits& limits = {});

/// The periodic FDFA: leading congruence plus one periodic progress DFA per
/// class, under exact acceptance (which it saturates).
Fdfa periodic_fdfa(const OmegaAutomaton& m, const Limits& limits = {});
Fdfa periodic_fdfa(const OmegaAutomaton& m, const LeadingCongruence& leading,
                   const Limits& limits = {});

}  // namespace omegacanon
