#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "omegacanon/errors.hpp"

namespace omegacanon {

using State = int;
using Symbol = int;

/// A finite word as a sequence of symbol indices.  May be empty.
using Word = std::vector<Symbol>;

/// Ordered set of distinct symbol names.  The order is fixed and used for
/// every deterministic iteration in the library.
class Alphabet {
public:
  explicit Alphabet(std::vector<std::string> symbols);

  int size() const { return static_cast<int>(symbols_.size()); }
  const std::string& name(Symbol s) const;
  /// Index of a symbol name; throws InputError if unknown.
  Symbol index(const std::string& name) const;
  bool operator==(const Alphabet& other) const { return symbols_ == other.symbols_; }

  const std::vector<std::string>& symbols() const { return symbols_; }

  /// Parses a word of single-character symbols ("abba" -> indices).
  Word parse(const std::string& text) const;
  std::string format(const Word& w) const;

private:
  std::vector<std::string> symbols_;
  std::unordered_map<std::string, Symbol> index_;
};

/// Complete deterministic transition system: the shared backbone of every
/// machine in the library.  Construction validates completeness; partial
/// tables are rejected rather than auto-completed with a sink, since a
/// silent sink would change the recognized languages.
class AutomatonStructure {
public:
  AutomatonStructure(Alphabet alphabet, int state_count, State initial,
                     std::vector<std::vector<State>> delta);

  const Alphabet& alphabet() const { return alphabet_; }
  int state_count() const { return state_count_; }
  State initial() const { return initial_; }

  State step(State q, Symbol s) const { return delta_[q * alphabet_.size() + s]; }

  /// State reached from `from` by reading `w`.
  State run(State from, const Word& w) const;
  State run(const Word& w) const { return run(initial_, w); }

  /// States reachable from the initial state, in BFS order.
  std::vector<State> reachable_states() const;

  bool operator==(const AutomatonStructure& other) const;

private:
  Alphabet alphabet_;
  int state_count_;
  State initial_;
  std::vector<State> delta_;  // row-major: state * |alphabet| + symbol
};

/// Acceptor of finite words: structure plus accepting-state set.
struct Dfa {
  AutomatonStructure structure;
  std::vector<bool> accepting;

  Dfa(AutomatonStructure s, std::vector<bool> acc);

  bool accepts(const Word& w) const { return accepting[structure.run(w)]; }
  int state_count() const { return structure.state_count(); }
};

/// DFA for the words reaching state q (same initial state, accepting {q}).
Dfa dfa_reaching(const Dfa& d, State q);
/// DFA for the words read from state q (initial q, same accepting set).
Dfa dfa_from(const Dfa& d, State q);
/// DFA for the words leading from q to q' (initial q, accepting {q'}).
Dfa dfa_between(const Dfa& d, State q, State q_to);

/// BFS-canonical renumbering of the reachable part: states numbered in BFS
/// order from the initial state, symbols in alphabet order.  Two complete
/// deterministic structures are isomorphic iff their canonical forms are
/// equal, which makes this the workhorse of every isomorphism check.
AutomatonStructure canonical_form(const AutomatonStructure& s,
                                  std::vector<State>* old_to_new = nullptr);

}  // namespace omegacanon
