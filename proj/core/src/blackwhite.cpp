#include "omegacanon/blackwhite.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace omegacanon {

OmegaAutomaton CLector::as_buchi() const {
  std::vector<State> f;
  for (State q = 0; q < structure.state_count(); ++q)
    if (in_f[q]) f.push_back(q);
  return OmegaAutomaton(structure, OmegaAcceptance::buchi(f, structure.state_count()));
}

OmegaAutomaton CLector::as_cobuchi() const {
  std::vector<State> f;
  for (State q = 0; q < structure.state_count(); ++q)
    if (in_f[q]) f.push_back(q);
  return OmegaAutomaton(structure, OmegaAcceptance::cobuchi(f, structure.state_count()));
}

CLector build_c_lector(const ColorContext& ctx, const ColorfulFdfa& colorful, int c) {
  if (c < 0) throw InputError("build_c_lector: threshold must be >= 0");
  if (!(ctx.leading().structure == colorful.fdfa.leading))
    throw InputError("build_c_lector: colorful FDFA does not belong to this context");
  const AutomatonStructure& lead = colorful.fdfa.leading;
  const Alphabet& sigma = lead.alphabet();

  using Triple = std::array<int, 3>;  // (x class, tracked class u, progress state of u)
  auto is_reset = [&](const Triple& t) {
    int kappa = colorful.colors[t[1]][t[2]];
    return kappa <= c || kappa == colorful.class_mincolor[t[1]];
  };

  std::map<Triple, State> index;
  std::vector<Triple> labels;
  std::deque<State> queue;
  auto intern = [&](const Triple& t) {
    auto [it, inserted] = index.emplace(t, static_cast<State>(labels.size()));
    if (inserted) {
      labels.push_back(t);
      queue.push_back(it->second);
    }
    return it->second;
  };

  Triple init{lead.initial(), lead.initial(), colorful.epsilon_state[lead.initial()]};
  intern(init);
  std::vector<std::vector<State>> delta;
  while (!queue.empty()) {
    State s = queue.front();
    queue.pop_front();
    Triple t = labels[s];
    if (static_cast<int>(delta.size()) <= s) delta.resize(labels.size());
    delta[s].resize(sigma.size());
    for (Symbol a = 0; a < sigma.size(); ++a) {
      int x_next = lead.step(t[0], a);
      Triple next;
      if (is_reset(t)) {
        next = Triple{x_next, x_next, colorful.epsilon_state[x_next]};
      } else {
        next = Triple{x_next, t[1], colorful.fdfa.progress[t[1]].structure.step(t[2], a)};
      }
      delta[s][a] = intern(next);
    }
  }
  delta.resize(labels.size());

  CLector out{c,
              AutomatonStructure(sigma, static_cast<int>(labels.size()), 0, std::move(delta)),
              {},
              {},
              std::move(labels)};
  out.reset.resize(out.structure.state_count());
  out.in_f.resize(out.structure.state_count());
  for (State s = 0; s < out.structure.state_count(); ++s) {
    out.reset[s] = is_reset(out.labels[s]);
    out.in_f[s] = out.reset[s] && colorful.colors[out.labels[s][1]][out.labels[s][2]] <= c;
  }
  return out;
}

bool lector_visits_f_infinitely(const CLector& l, const UPWord& w) {
  const AutomatonStructure& s = l.structure;
  State q = s.run(w.spoke);
  std::map<State, int> seen;
  std::vector<State> order;
  while (!seen.count(q)) {
    seen[q] = static_cast<int>(order.size());
    order.push_back(q);
    q = s.run(q, w.cycle);
  }
  int k = seen[q];
  State p = order[k];
  for (int i = k; i < static_cast<int>(order.size()); ++i)
    for (Symbol a : w.cycle) {
      p = s.step(p, a);
      if (l.in_f[p]) return true;
    }
  return false;
}

namespace {

OmegaAutomaton black_white(const ColorContext& ctx, const ColorfulFdfa& colorful, int threshold,
                           bool buchi, int lo, int hi, const char* what) {
  int offending = -1;  // report the largest out-of-range color
  for (int color : language_colors(colorful))
    if (color < lo || color > hi) offending = std::max(offending, color);
  if (offending >= 0) {
    std::ostringstream msg;
    msg << "not " << what << "-recognizable: color " << offending;
    throw InputError(msg.str());
  }
  CLector l = build_c_lector(ctx, colorful, threshold);
  return buchi ? l.as_buchi() : l.as_cobuchi();
}

}  // namespace

OmegaAutomaton black_white_dba(const ColorContext& ctx, const ColorfulFdfa& colorful) {
  return black_white(ctx, colorful, 0, true, 0, 1, "DBA");
}

OmegaAutomaton black_white_dca(const ColorContext& ctx, const ColorfulFdfa& colorful) {
  return black_white(ctx, colorful, 1, false, 1, 2, "DCA");
}

}  // namespace omegacanon
