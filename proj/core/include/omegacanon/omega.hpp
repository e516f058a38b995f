#pragma once

#include <optional>
#include <string>
#include <vector>

#include "omegacanon/automaton.hpp"
#include "omegacanon/errors.hpp"

namespace omegacanon {

enum class AcceptanceKind { Buchi, CoBuchi, Parity, Muller };

std::string to_string(AcceptanceKind k);

/// One of the four supported acceptance conditions, evaluated on the set of
/// states visited infinitely often by a run.
struct OmegaAcceptance {
  AcceptanceKind kind;
  /// Buchi / coBuchi: membership of F per state.
  std::vector<bool> set;
  /// Parity: color per state; runs accept iff the minimal color visited
  /// infinitely often is even.
  std::vector<int> colors;
  /// Muller: the family alpha of accepting inf-sets, each sorted.
  std::vector<std::vector<State>> alpha;

  static OmegaAcceptance buchi(std::vector<State> f, int state_count);
  static OmegaAcceptance cobuchi(std::vector<State> f, int state_count);
  static OmegaAcceptance parity(std::vector<int> colors);
  static OmegaAcceptance muller(std::vector<std::vector<State>> alpha, int state_count);

  /// Accepts a nonempty strongly connected (more generally: inf-) set.
  bool accepts_inf_set(const std::vector<State>& sorted_set) const;
};

struct OmegaAutomaton {
  AutomatonStructure structure;
  OmegaAcceptance acceptance;

  OmegaAutomaton(AutomatonStructure s, OmegaAcceptance a);
};

/// Ultimately periodic word u v^omega, represented as the pair (u, v).
struct UPWord {
  Word spoke;
  Word cycle;

  UPWord(Word u, Word v) : spoke(std::move(u)), cycle(std::move(v)) {
    if (cycle.empty()) throw InputError("UPWord: cycle must be nonempty");
  }

  bool operator==(const UPWord& other) const = default;
};

/// Lasso membership: runs the spoke, then iterates the cycle until the
/// state after a full cycle repeats, and evaluates the acceptance condition
/// on the states visited along the repeating part.
bool accepts_up(const OmegaAutomaton& m, const UPWord& w);

/// Whether the SCC S is accepting for m's condition.  Precondition: S is an
/// SCC (singletons need a self-loop); violations raise InputError.
bool accepting_scc(const OmegaAutomaton& m, const std::vector<State>& s);

/// Whether the omega-languages from q1 and q2 coincide.  Buchi, coBuchi and
/// parity use an exact color-pair search over product MSCCs; Muller falls
/// back to strongly-connected-subset enumeration, exponential in the MSCC
/// size and guarded by limits.subset_cap.
bool state_equiv(const OmegaAutomaton& m, State q1, State q2, const Limits& limits = {});

/// Quotient of the reachable structure by state language-equivalence:
/// the automaton structure induced by the leading right congruence.
struct LeadingCongruence {
  AutomatonStructure structure;
  /// original state -> class (-1 for unreachable states).
  std::vector<int> class_of;

  int class_of_word(const Word& u) const { return structure.run(u); }
};

LeadingCongruence leading_congruence(const OmegaAutomaton& m, const Limits& limits = {});

/// Canonical form of an ultimately periodic word: the cycle is replaced by
/// its primitive root and trailing cycle copies are absorbed out of the
/// spoke.  Two UPWords denote the same omega-word iff their canonical
/// forms are equal.
UPWord canonical_up(const UPWord& w);

/// All words over an alphabet of `sigma` symbols with length in
/// [min_len, max_len], in length-then-lexicographic order.
std::vector<Word> enumerate_words(int sigma, int min_len, int max_len);

}  // namespace omegacanon
