#pragma once

#include <array>
#include <vector>

#include "omegacanon/colors.hpp"
#include "omegacanon/omega.hpp"

namespace omegacanon {

/// Deterministic lector structure for a color threshold c.  States pair
/// the leading class of the whole prefix read so far with a progress state
/// of the colorful FDFA tracking the current period candidate; reset
/// states (color at most c, or equal to the class minimum) restart the
/// period tracking.  Runs visit F infinitely often exactly on the words
/// of natural color at most c.
struct CLector {
  int threshold;
  AutomatonStructure structure;
  std::vector<bool> reset;
  std::vector<bool> in_f;
  /// per lector state: (prefix class x, tracked class u, progress state).
  std::vector<std::array<int, 3>> labels;

  OmegaAutomaton as_buchi() const;
  OmegaAutomaton as_cobuchi() const;
};

CLector build_c_lector(const ColorContext& ctx, const ColorfulFdfa& colorful, int c);

/// Lasso simulation: whether the run on w visits F infinitely often.
/// Contract: true iff the natural color of w is at most the threshold.
bool lector_visits_f_infinitely(const CLector& l, const UPWord& w);

/// The lector at threshold 0 with Buchi acceptance; requires every color
/// label to be 0 or 1.
OmegaAutomaton black_white_dba(const ColorContext& ctx, const ColorfulFdfa& colorful);
/// The lector at threshold 1 with coBuchi acceptance; requires every color
/// label to be 1 or 2.
OmegaAutomaton black_white_dca(const ColorContext& ctx, const ColorfulFdfa& colorful);

}  // namespace omegacanon
