#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "omegacanon/fdfa.hpp"
#include "omegacanon/moore.hpp"
#include "omegacanon/omega.hpp"
#include "omegacanon/periodic.hpp"
#include "omegacanon/persistent.hpp"

namespace omegacanon {

/// Natural color of a finite word: a nonnegative integer, or bottom for
/// periods that never loop back to their class.
struct Color {
  bool bottom = false;
  int value = 0;

  static Color irrelevant() { return {true, 0}; }
  static Color of(int v) { return {false, v}; }
  bool operator==(const Color& o) const {
    return bottom == o.bottom && (bottom || value == o.value);
  }
  std::string str() const { return bottom ? "-inf" : std::to_string(value); }
};

/// A language bundled with its leading congruence, periodic progress DFAs,
/// persistent DFAs, and precomputed color data.  All color queries, the
/// colorful FDFA and the lector constructions are answered from here.
///
/// Colors are computed through the chain characterization: the color of v
/// is the largest alternation depth over the significant states reachable
/// from v's vector state, shifted by the class minimum.  The literal
/// quantifier definition lives in brute_force_color as a bounded
/// cross-check only.
class ColorContext {
public:
  static ColorContext build(OmegaAutomaton language, const Limits& limits = {});

  const OmegaAutomaton& language() const { return language_; }
  const LeadingCongruence& leading() const { return leading_; }
  const Fdfa& periodic() const { return *periodic_; }
  const PersistentDfa& persistent(int class_u) const { return *pdfa_[class_u]; }
  int class_count() const { return leading_.structure.state_count(); }
  int class_of_word(const Word& u) const { return leading_.structure.run(u); }

  int mincolor(int class_u) const { return mincolor_[class_u]; }
  int mincolor_language() const { return mincolor_language_; }

  /// Longest alternating run of significant states starting at s (which
  /// must be significant).
  int maxalt(int class_u, State s) const;

  /// Color of the vector state reached by v in the class's persistent DFA.
  Color color_of_state(int class_u, State s) const;

  Color finite_color(const Word& u, const Word& v) const;
  int finite_color_clamped(const Word& u, const Word& v) const;
  /// Persistent-normalizes against the periodic FDFA and reads off the
  /// finite color of the normalized pair.
  int infinite_color(const UPWord& w) const;

  bool is_relevant(const Word& u, const Word& v) const;
  /// u-invariant and color-stable under all repetitions.
  bool is_reliable(const Word& u, const Word& v) const;

  /// Literal evaluation of the color definition with bounded quantifiers:
  /// z ranges over words up to z_bound, repetitions up to rep_bound.
  /// Sound only relative to its bounds; exists to cross-check the chain
  /// route on desk-scale fixtures.  Memoization is confined to the call,
  /// so concurrent queries stay safe.
  Color brute_force_color(const Word& u, const Word& v, int z_bound, int rep_bound) const;

  const Limits& limits() const { return limits_; }

private:
  ColorContext(OmegaAutomaton lang, const Limits& limits);

  OmegaAutomaton language_;
  Limits limits_;
  LeadingCongruence leading_;
  std::shared_ptr<const Fdfa> periodic_;
  std::vector<std::shared_ptr<const PersistentDfa>> pdfa_;
  std::vector<AlternationTable> alt_;
  /// per class, per vector state: color value, or -1 for bottom.
  std::vector<std::vector<int>> state_color_;
  std::vector<int> mincolor_;
  int mincolor_language_ = 0;

  using BruteMemo = std::map<std::pair<Word, int>, bool>;
  bool brute_color_leq(int class_u, const Word& v, int c, int z_bound, int rep_bound,
                       BruteMemo& memo) const;
};

/// The colorful FDFA: leading congruence plus, per class, the quotient of
/// the persistent DFA by clamped-color observation equivalence, with the
/// empty word kept as a designated class.  States carry their color;
/// accepting means even.
struct ColorfulFdfa {
  Fdfa fdfa;  // mode DuoNormalized
  std::vector<std::vector<int>> colors;       // per class, per progress state
  std::vector<int> class_mincolor;            // per class
  std::vector<int> epsilon_state;             // per class: the designated state

  const std::vector<int>& colors_of_word(const Word& u) const {
    return colors[fdfa.leading.run(u)];
  }
};

ColorfulFdfa build_colorful_fdfa(const ColorContext& ctx);

/// Independent recomputation of the state colors by MSCC coloring:
/// terminal components get 0/1 by acceptance, the rest take the maximal
/// reachable color adjusted to their own parity.  Throws if the result
/// disagrees with the attached labels.
std::vector<std::vector<int>> color_states_procedure(const ColorfulFdfa& f);

/// Every color label used across the progress DFAs, sorted ascending.
std::vector<int> language_colors(const ColorfulFdfa& f);

}  // namespace omegacanon
