#pragma once

#include <optional>
#include <vector>

#include "omegacanon/fdfa.hpp"
#include "omegacanon/scc.hpp"

namespace omegacanon {

/// State of the persistent DFA for one leading class: the leading state
/// reached so far plus, per progress state, the progress state reached
/// from it by the word read so far.  The entry at the progress initial
/// state is therefore the state the period itself reaches.
struct VectorState {
  State leading;
  std::vector<State> entries;

  bool operator==(const VectorState& o) const = default;
  bool operator<(const VectorState& o) const;
};

/// Reachable vector-state machine of one progress DFA.  A state is
/// significant iff the word reaching it is persistent: the leading state is
/// back at the class, the period loops on the state it reaches, and every
/// entry lies on a cycle of the entry map.  Within every SCC all
/// significant states agree on acceptance (checked at build time).
class PersistentDfa {
public:
  PersistentDfa(const Fdfa& f, int class_u, const Limits& limits);

  int class_state() const { return class_u_; }
  int state_count() const { return static_cast<int>(states_.size()); }
  State initial() const { return 0; }
  State step(State s, Symbol a) const { return delta_[s * sigma_ + a]; }
  State run_word(const Word& v) const;

  const VectorState& vector_of(State s) const { return states_[s]; }
  bool significant(State s) const { return significant_[s]; }
  bool accepting(State s) const { return accepting_[s]; }
  /// Composition: the state of v w given the states of v and w.
  State compose(State sv, State sw) const;

  const SccDecomposition& condensation() const { return scc_; }
  /// True when some nonempty word reaches the initial vector state, i.e.
  /// the empty-word state may serve as a chain element.
  bool initial_reentered() const { return initial_reentered_; }

  const AutomatonStructure& graph() const { return *graph_; }
  int alphabet_size() const { return sigma_; }

private:
  int class_u_;
  int sigma_;
  int progress_states_;
  State progress_initial_;
  std::vector<VectorState> states_;
  std::vector<State> delta_;
  std::vector<bool> significant_;
  std::vector<bool> accepting_;
  bool initial_reentered_ = false;
  std::optional<AutomatonStructure> graph_;
  SccDecomposition scc_;
};

/// Longest alternating run of significant states per polarity, per
/// condensation component, over one persistent DFA.
struct AlternationTable {
  /// max alternating chain length starting at an accepting (resp.
  /// rejecting) significant state in the component or below it.
  std::vector<int> from_accepting;
  std::vector<int> from_rejecting;
  /// whether the component itself holds a significant accepting /
  /// rejecting state usable as a chain element.
  std::vector<bool> has_accepting;
  std::vector<bool> has_rejecting;
};

AlternationTable alternation_table(const PersistentDfa& p);

/// Whether (u, v) is persistent: v's run in the persistent DFA of u's
/// class ends in a significant state.
bool is_persistent(const Fdfa& f, const Word& u, const Word& v, const Limits& limits = {});

struct DiameterMeasure {
  int d_plus = 0;
  int d_minus = 0;

  bool operator==(const DiameterMeasure& o) const = default;
};

/// The diameter measure: the longest positive / negative persistent chain
/// over all leading classes, computed by the alternation DP over each
/// class's persistent DFA condensation.
DiameterMeasure diameter(const Fdfa& f, const Limits& limits = {});

enum class Polarity { Positive, Negative };

struct PersistentChain {
  Word leading_word;  // u, common to all chain elements
  std::vector<Word> periods;
};

/// A persistent chain of length k of the requested polarity, built from
/// shortest paths between significant states and verified before being
/// returned; nothing when the diameter is too small.
std::optional<PersistentChain> persistent_chain_witness(const Fdfa& f, Polarity polarity, int k,
                                                        const Limits& limits = {});

}  // namespace omegacanon
