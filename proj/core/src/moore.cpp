#include "omegacanon/moore.hpp"

#include <algorithm>
#include <map>

namespace omegacanon {

MooreMinimization minimize_moore(const AutomatonStructure& s, const std::vector<int>& output,
                                 bool respect_initial_output) {
  if (static_cast<int>(output.size()) != s.state_count())
    throw InputError("minimize_moore: output must cover every state");
  std::vector<State> reachable = s.reachable_states();
  std::vector<bool> is_reachable(s.state_count(), false);
  for (State q : reachable) is_reachable[q] = true;

  // Initial partition by output.  With the flag off, the initial state is
  // pre-separated so its (unobservable) output can never merge it away;
  // refinement only ever splits blocks, so it stays designated.
  std::vector<int> block(s.state_count(), -1);
  {
    std::map<int, int> by_output;
    int next = 0;
    for (State q : reachable) {
      if (!respect_initial_output && q == s.initial()) continue;
      auto [it, inserted] = by_output.emplace(output[q], next);
      if (inserted) ++next;
      block[q] = it->second;
    }
    if (!respect_initial_output) block[s.initial()] = next;
  }

  for (;;) {
    std::map<std::vector<int>, int> signature_to_block;
    std::vector<int> next_block(s.state_count(), -1);
    for (State q : reachable) {
      std::vector<int> sig;
      sig.reserve(1 + s.alphabet().size());
      sig.push_back(block[q]);
      for (Symbol a = 0; a < s.alphabet().size(); ++a) sig.push_back(block[s.step(q, a)]);
      auto [it, inserted] =
          signature_to_block.emplace(std::move(sig), static_cast<int>(signature_to_block.size()));
      next_block[q] = it->second;
    }
    bool changed = false;
    for (State q : reachable)
      if (next_block[q] != block[q]) changed = true;
    block = std::move(next_block);
    if (!changed) break;
  }

  // Quotient with BFS-canonical numbering from the initial class.
  int raw_blocks = 0;
  for (State q : reachable) raw_blocks = std::max(raw_blocks, block[q] + 1);
  std::vector<State> representative(raw_blocks, -1);
  for (State q : reachable)
    if (representative[block[q]] == -1 || q < representative[block[q]])
      representative[block[q]] = q;

  std::vector<int> renumber(raw_blocks, -1);
  std::vector<int> order;
  order.push_back(block[s.initial()]);
  renumber[block[s.initial()]] = 0;
  for (size_t i = 0; i < order.size(); ++i) {
    State rep = representative[order[i]];
    for (Symbol a = 0; a < s.alphabet().size(); ++a) {
      int b = block[s.step(rep, a)];
      if (renumber[b] == -1) {
        renumber[b] = static_cast<int>(order.size());
        order.push_back(b);
      }
    }
  }

  int n = static_cast<int>(order.size());
  std::vector<std::vector<State>> delta(n, std::vector<State>(s.alphabet().size()));
  std::vector<int> qoutput(n);
  for (int i = 0; i < n; ++i) {
    State rep = representative[order[i]];
    qoutput[i] = output[rep];
    for (Symbol a = 0; a < s.alphabet().size(); ++a) delta[i][a] = renumber[block[s.step(rep, a)]];
  }

  MooreMinimization out{AutomatonStructure(s.alphabet(), n, 0, std::move(delta)),
                        std::move(qoutput), std::vector<State>(s.state_count(), -1)};
  for (State q = 0; q < s.state_count(); ++q)
    if (is_reachable[q]) out.state_map[q] = renumber[block[q]];
  return out;
}

Dfa minimize_dfa(const Dfa& d) {
  std::vector<int> output(d.state_count());
  for (State q = 0; q < d.state_count(); ++q) output[q] = d.accepting[q] ? 1 : 0;
  MooreMinimization m = minimize_moore(d.structure, output, true);
  std::vector<bool> acc(m.structure.state_count());
  for (State q = 0; q < m.structure.state_count(); ++q) acc[q] = m.output[q] == 1;
  return Dfa(std::move(m.structure), std::move(acc));
}

}  // namespace omegacanon
