#pragma once

#include <optional>
#include <string>
#include <vector>

#include "omegacanon/automaton.hpp"
#include "omegacanon/omega.hpp"

namespace omegacanon {

enum class AcceptanceMode { Exact, Normalized, DuoNormalized };

/// Decomposition requirements, ordered by strength
/// Exact < Normalized < DuoNormalized < Persistent.
enum class NormalizationKind { Exact, Normalized, DuoNormalized, Persistent };

std::string to_string(AcceptanceMode m);
NormalizationKind kind_of_mode(AcceptanceMode m);

/// Family of DFAs: a leading automaton structure plus one progress DFA per
/// leading state, read under one of the three acceptance modes.
struct Fdfa {
  AutomatonStructure leading;
  std::vector<Dfa> progress;  // indexed by leading state
  AcceptanceMode mode;

  Fdfa(AutomatonStructure lead, std::vector<Dfa> prog, AcceptanceMode m);

  const Dfa& progress_of_word(const Word& u) const { return progress[leading.run(u)]; }
  int leading_states() const { return leading.state_count(); }
};

/// Same structures under a different acceptance mode.  Coercion toward
/// stronger kinds preserves the language of saturated FDFAs.
Fdfa with_mode(Fdfa f, AcceptanceMode mode);

/// Whether the decomposition (u, v) meets the requested normalization:
///   Exact          always;
///   Normalized     the leading automaton loops on v after u;
///   DuoNormalized  additionally the progress DFA of u loops on v at P_u(v);
///   Persistent     additionally, from every progress state, reading v
///                  lands on a state that reading more copies of v revisits.
bool is_normalized(const Fdfa& f, const Word& u, const Word& v, NormalizationKind kind);

/// The lexicographically least (i, j) with (u v^i, v^j) normalized for the
/// requested kind, returned as that decomposition.  Existence is guaranteed
/// for every kind.
UPWord normalize(const Fdfa& f, const UPWord& w, NormalizationKind kind);

/// Acceptance of an ultimately periodic word under f's mode: normalize,
/// then test the period in the progress DFA of the normalized spoke.
bool accepts(const Fdfa& f, const UPWord& w);

/// Like accepts, but normalizing to the Persistent kind.  For saturated
/// FDFAs this agrees with duo-normalized acceptance on every word.
bool accepts_persistent_mode(const Fdfa& f, const UPWord& w);

/// Flips every progress acceptance set; accepts exactly the rejected words
/// of a saturated input.
Fdfa complement(Fdfa f);

/// Cartesian products of leading and progress automata with conjunctive /
/// disjunctive acceptance.  Inputs must share alphabet and mode.
Fdfa intersect(const Fdfa& f1, const Fdfa& f2);
Fdfa unite(const Fdfa& f1, const Fdfa& f2);

/// Deterministic replacement for the nondeterministic emptiness search:
/// for every leading state q and accepting progress state q', BFS in the
/// triple product (leading from q) x (P_q from its initial) x (P_q from q')
/// for a nonempty y reaching (q, q', q').  Returns an accepted witness or
/// nothing.  Inputs are read under duo-normalized acceptance.
std::optional<UPWord> is_empty(const Fdfa& f);

struct CheckResult {
  bool holds;
  std::optional<UPWord> witness;  // a counterexample when !holds
};

CheckResult is_universal(const Fdfa& f);
/// Language containment of f2 in f1; a witness is accepted by f2, rejected
/// by f1.
CheckResult contains(const Fdfa& f1, const Fdfa& f2);
CheckResult equivalent(const Fdfa& f1, const Fdfa& f2);

/// A saturation counterexample: one omega-word with two mode-normalized
/// decompositions that disagree on membership.
struct SaturationCounterexample {
  UPWord accepted_as;
  UPWord rejected_as;
};

/// Enumerates every (x, y) with |x| <= max_u, 1 <= |y| <= max_v, groups
/// them by the omega-word they denote, and reports any membership
/// disagreement among the mode-normalized decompositions in one group.
std::optional<SaturationCounterexample> check_saturation_bounded(const Fdfa& f, int max_u,
                                                                 int max_v);

}  // namespace omegacanon
