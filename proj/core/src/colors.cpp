#include "omegacanon/colors.hpp"

#include <algorithm>
#include <set>

namespace omegacanon {

ColorContext::ColorContext(OmegaAutomaton lang, const Limits& limits)
    : language_(std::move(lang)), limits_(limits), leading_(leading_congruence(language_, limits)) {
  periodic_ = std::make_shared<const Fdfa>(periodic_fdfa(language_, leading_, limits));

  int classes = leading_.structure.state_count();
  pdfa_.reserve(classes);
  alt_.reserve(classes);
  state_color_.resize(classes);
  mincolor_.assign(classes, -1);

  for (int c = 0; c < classes; ++c) {
    pdfa_.push_back(std::make_shared<const PersistentDfa>(*periodic_, c, limits));
    alt_.push_back(alternation_table(*pdfa_[c]));
  }

  // mincolor(u) is 0 iff some significant accepting state of the class has
  // alternation depth 1; classes without significant states inherit the
  // language minimum afterwards.
  bool any_class_colored = false;
  int language_min = 1;
  for (int c = 0; c < classes; ++c) {
    const PersistentDfa& p = *pdfa_[c];
    bool has_significant = false;
    bool zero = false;
    for (State s = 0; s < p.state_count(); ++s) {
      if (!p.significant(s)) continue;
      if (s == p.initial() && !p.initial_reentered()) continue;
      has_significant = true;
      if (p.accepting(s) && maxalt(c, s) == 1) zero = true;
    }
    if (has_significant) {
      mincolor_[c] = zero ? 0 : 1;
      any_class_colored = true;
      language_min = std::min(language_min, mincolor_[c]);
    }
  }
  if (!any_class_colored)
    throw std::logic_error("color context: no class has significant states");
  mincolor_language_ = language_min;
  for (int c = 0; c < classes; ++c)
    if (mincolor_[c] == -1) mincolor_[c] = mincolor_language_;

  // Per vector state: max over reachable significant states of
  // maxalt - 1 + mincolor; -1 when none is reachable.
  for (int c = 0; c < classes; ++c) {
    const PersistentDfa& p = *pdfa_[c];
    const SccDecomposition& d = p.condensation();
    int nc = static_cast<int>(d.components.size());
    std::vector<int> comp_best(nc, -1);
    for (int comp = nc - 1; comp >= 0; --comp) {
      int best = -1;
      for (int s : d.condensation[comp]) best = std::max(best, comp_best[s]);
      for (State s : d.components[comp]) {
        if (!p.significant(s)) continue;
        if (s == p.initial() && !p.initial_reentered()) continue;
        best = std::max(best, maxalt(c, s) - 1 + mincolor_[c]);
      }
      comp_best[comp] = best;
    }
    state_color_[c].resize(p.state_count());
    for (State s = 0; s < p.state_count(); ++s)
      state_color_[c][s] = comp_best[d.component_of[s]];
  }

  // Parity sanity: a significant accepting state must carry an even color,
  // a rejecting one an odd color.
  for (int c = 0; c < classes; ++c) {
    const PersistentDfa& p = *pdfa_[c];
    for (State s = 0; s < p.state_count(); ++s) {
      if (!p.significant(s)) continue;
      if (s == p.initial() && !p.initial_reentered()) continue;
      int color = maxalt(c, s) - 1 + mincolor_[c];
      if ((color % 2 == 0) != p.accepting(s))
        throw std::logic_error("color context: alternation parity violates acceptance");
      if (state_color_[c][s] != color)
        throw std::logic_error("color context: significant state not colored by its own chain");
    }
  }
}

ColorContext ColorContext::build(OmegaAutomaton language, const Limits& limits) {
  return ColorContext(std::move(language), limits);
}

int ColorContext::maxalt(int class_u, State s) const {
  const PersistentDfa& p = *pdfa_[class_u];
  if (!p.significant(s)) throw InputError("maxalt: state is not significant");
  const SccDecomposition& d = p.condensation();
  const AlternationTable& t = alt_[class_u];
  int comp = d.component_of[s];
  int below_opposite = 0;
  for (int succ : d.condensation[comp])
    below_opposite = std::max(below_opposite, p.accepting(s) ? t.from_rejecting[succ]
                                                             : t.from_accepting[succ]);
  return 1 + below_opposite;
}

Color ColorContext::color_of_state(int class_u, State s) const {
  int v = state_color_[class_u][s];
  return v < 0 ? Color::irrelevant() : Color::of(v);
}

Color ColorContext::finite_color(const Word& u, const Word& v) const {
  if (v.empty()) throw InputError("finite_color: the period must be nonempty");
  int c = class_of_word(u);
  return color_of_state(c, pdfa_[c]->run_word(v));
}

int ColorContext::finite_color_clamped(const Word& u, const Word& v) const {
  Color c = finite_color(u, v);
  int cls = class_of_word(u);
  return c.bottom ? mincolor_[cls] : std::max(c.value, mincolor_[cls]);
}

int ColorContext::infinite_color(const UPWord& w) const {
  UPWord n = normalize(*periodic_, w, NormalizationKind::Persistent);
  Color c = finite_color(n.spoke, n.cycle);
  if (c.bottom) throw std::logic_error("infinite_color: persistent pair is irrelevant");
  return c.value;
}

bool ColorContext::is_relevant(const Word& u, const Word& v) const {
  return !finite_color(u, v).bottom;
}

bool ColorContext::is_reliable(const Word& u, const Word& v) const {
  if (v.empty()) throw InputError("is_reliable: the period must be nonempty");
  int c = class_of_word(u);
  if (leading_.structure.run(leading_.structure.run(u), v) != leading_.structure.run(u))
    return false;  // not u-invariant
  const PersistentDfa& p = *pdfa_[c];
  State s1 = p.run_word(v);
  int color = state_color_[c][s1];
  // Colors of v^i for all i: iterate state composition until it cycles.
  std::set<State> seen;
  State s = s1;
  while (seen.insert(s).second) {
    if (state_color_[c][s] != color) return false;
    s = p.compose(s, s1);
  }
  return true;
}

bool ColorContext::brute_color_leq(int class_u, const Word& v, int c, int z_bound, int rep_bound,
                                   BruteMemo& memo) const {
  auto key = std::make_pair(v, c);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  bool result;
  if (c < 0) {
    result = false;
  } else {
    result = true;
    const AutomatonStructure& lead = leading_.structure;
    // Find a word u reaching the class (classes are leading states).
    for (const Word& z : enumerate_words(lead.alphabet().size(), 0, z_bound)) {
      Word vz = v;
      vz.insert(vz.end(), z.begin(), z.end());
      if (lead.run(class_u, vz) != class_u) continue;  // vz not u-invariant
      bool in_language = [&] {
        // u(vz)^omega: any u with class class_u; membership only depends on
        // the class, evaluated on a representative automaton state.
        for (State q = 0; q < language_.structure.state_count(); ++q)
          if (leading_.class_of[q] == class_u) {
            State after = q;
            std::map<State, int> seen;
            std::vector<State> order;
            while (!seen.count(after)) {
              seen[after] = static_cast<int>(order.size());
              order.push_back(after);
              after = language_.structure.run(after, vz);
            }
            int k = seen[after];
            std::set<State> inf;
            State pp = order[k];
            for (int i = k; i < static_cast<int>(order.size()); ++i)
              for (Symbol a : vz) {
                pp = language_.structure.step(pp, a);
                inf.insert(pp);
              }
            return language_.acceptance.accepts_inf_set(
                std::vector<State>(inf.begin(), inf.end()));
          }
        throw std::logic_error("brute_force_color: class without automaton state");
      }();
      if (in_language == (c % 2 == 0)) continue;
      bool smaller_power = false;
      Word power;
      for (int i = 1; i <= rep_bound && !smaller_power; ++i) {
        power.insert(power.end(), vz.begin(), vz.end());
        if (brute_color_leq(class_u, power, c - 1, z_bound, rep_bound, memo)) smaller_power = true;
      }
      if (!smaller_power) {
        result = false;
        break;
      }
    }
  }
  memo.emplace(key, result);
  return result;
}

Color ColorContext::brute_force_color(const Word& u, const Word& v, int z_bound,
                                      int rep_bound) const {
  if (v.empty()) throw InputError("brute_force_color: the period must be nonempty");
  if (z_bound < 1 || rep_bound < 1) throw InputError("brute_force_color: bounds must be >= 1");
  int class_u = class_of_word(u);
  const AutomatonStructure& lead = leading_.structure;
  // Relevance is exact: some z makes u v z loop back to the class iff the
  // class is reachable from the state after v.
  State after_v = lead.run(lead.run(u), v);
  std::vector<bool> reach(lead.state_count(), false);
  std::vector<State> stack{after_v};
  reach[after_v] = true;
  while (!stack.empty()) {
    State q = stack.back();
    stack.pop_back();
    for (Symbol a = 0; a < lead.alphabet().size(); ++a) {
      State t = lead.step(q, a);
      if (!reach[t]) {
        reach[t] = true;
        stack.push_back(t);
      }
    }
  }
  if (!reach[class_u]) return Color::irrelevant();
  BruteMemo memo;
  for (int c = 0; c <= 8; ++c)
    if (brute_color_leq(class_u, v, c, z_bound, rep_bound, memo)) return Color::of(c);
  throw std::logic_error("brute_force_color: color exceeds 8");
}

ColorfulFdfa build_colorful_fdfa(const ColorContext& ctx) {
  int classes = ctx.class_count();
  std::vector<Dfa> progress;
  std::vector<std::vector<int>> colors(classes);
  std::vector<int> class_mincolor(classes);
  std::vector<int> epsilon_state(classes);

  for (int c = 0; c < classes; ++c) {
    const PersistentDfa& p = ctx.persistent(c);
    std::vector<int> output(p.state_count());
    for (State s = 0; s < p.state_count(); ++s) {
      Color col = ctx.color_of_state(c, s);
      output[s] = col.bottom ? ctx.mincolor(c) : std::max(col.value, ctx.mincolor(c));
    }
    // The empty word has no color of its own; its state stays designated.
    MooreMinimization m = minimize_moore(p.graph(), output, /*respect_initial_output=*/false);
    std::vector<bool> accepting(m.structure.state_count());
    for (State s = 0; s < m.structure.state_count(); ++s) accepting[s] = m.output[s] % 2 == 0;
    progress.emplace_back(std::move(m.structure), std::move(accepting));
    colors[c] = std::move(m.output);
    class_mincolor[c] = ctx.mincolor(c);
    epsilon_state[c] = m.state_map[p.initial()];
  }

  ColorfulFdfa out{Fdfa(ctx.leading().structure, std::move(progress), AcceptanceMode::DuoNormalized),
                   std::move(colors), std::move(class_mincolor), std::move(epsilon_state)};

  // Colors are monotonically non-increasing along transitions, and every
  // MSCC is polarity-pure; check both at build time.
  for (int c = 0; c < classes; ++c) {
    const Dfa& prog = out.fdfa.progress[c];
    for (State s = 0; s < prog.state_count(); ++s)
      for (Symbol a = 0; a < prog.structure.alphabet().size(); ++a)
        if (out.colors[c][prog.structure.step(s, a)] > out.colors[c][s] &&
            s != out.epsilon_state[c])
          throw std::logic_error("colorful fdfa: colors increase along a transition");
    SccDecomposition d = sccs(prog.structure);
    for (const auto& comp : d.components) {
      for (State s : comp)
        if (prog.accepting[s] != prog.accepting[comp[0]])
          throw std::logic_error("colorful fdfa: MSCC mixes acceptance");
    }
  }
  return out;
}

std::vector<std::vector<int>> color_states_procedure(const ColorfulFdfa& f) {
  std::vector<std::vector<int>> result(f.fdfa.progress.size());
  for (size_t c = 0; c < f.fdfa.progress.size(); ++c) {
    const Dfa& prog = f.fdfa.progress[c];
    SccDecomposition d = sccs(prog.structure);
    int nc = static_cast<int>(d.components.size());
    std::vector<int> comp_color(nc, -1);
    for (int comp = nc - 1; comp >= 0; --comp) {
      bool accepting = prog.accepting[d.components[comp][0]];
      for (State s : d.components[comp])
        if (prog.accepting[s] != accepting)
          throw std::logic_error("color procedure: MSCC mixes acceptance");
      if (d.is_terminal(comp)) {
        comp_color[comp] = accepting ? 0 : 1;
        continue;
      }
      int max_reachable = -1;
      for (int s : d.condensation[comp]) max_reachable = std::max(max_reachable, comp_color[s]);
      if (accepting)
        comp_color[comp] = max_reachable % 2 == 0 ? max_reachable : max_reachable + 1;
      else
        comp_color[comp] = max_reachable % 2 == 1 ? max_reachable : max_reachable + 1;
    }
    result[c].resize(prog.state_count());
    for (State s = 0; s < prog.state_count(); ++s) result[c][s] = comp_color[d.component_of[s]];
    for (State s = 0; s < prog.state_count(); ++s)
      if (result[c][s] != f.colors[c][s])
        throw std::logic_error("color procedure: label mismatch at state " + std::to_string(s));
  }
  return result;
}

std::vector<int> language_colors(const ColorfulFdfa& f) {
  std::set<int> used;
  for (size_t c = 0; c < f.colors.size(); ++c)
    for (size_t s = 0; s < f.colors[c].size(); ++s) used.insert(f.colors[c][s]);
  return std::vector<int>(used.begin(), used.end());
}

}  // namespace omegacanon
