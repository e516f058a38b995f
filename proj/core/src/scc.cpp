#include "omegacanon/scc.hpp"

#include <algorithm>
#include <set>

namespace omegacanon {

namespace {

// Iterative Tarjan over the induced subgraph.  Emits components in reverse
// topological order; the caller flips them.
struct TarjanState {
  const AutomatonStructure& aut;
  const std::vector<bool>& in_set;
  std::vector<int> index, low;
  std::vector<bool> on_stack;
  std::vector<State> stack;
  int counter = 0;
  std::vector<std::vector<State>> components;
  std::vector<int> component_of;

  explicit TarjanState(const AutomatonStructure& a, const std::vector<bool>& s)
      : aut(a), in_set(s), index(a.state_count(), -1), low(a.state_count(), 0),
        on_stack(a.state_count(), false), component_of(a.state_count(), -1) {}

  void run(State root) {
    struct Frame {
      State v;
      Symbol next_sym;
    };
    std::vector<Frame> frames{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.next_sym < aut.alphabet().size()) {
        State w = aut.step(f.v, f.next_sym++);
        if (!in_set[w]) continue;
        if (index[w] == -1) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
      } else {
        State v = f.v;
        frames.pop_back();
        if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
        if (low[v] == index[v]) {
          std::vector<State> comp;
          State w;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            component_of[w] = static_cast<int>(components.size());
            comp.push_back(w);
          } while (w != v);
          std::sort(comp.begin(), comp.end());
          components.push_back(std::move(comp));
        }
      }
    }
  }
};

}  // namespace

SccDecomposition sccs(const AutomatonStructure& s,
                      const std::optional<std::vector<State>>& restrict_to) {
  std::vector<bool> in_set(s.state_count(), false);
  std::vector<State> domain;
  if (restrict_to) {
    for (State q : *restrict_to) {
      if (q < 0 || q >= s.state_count()) throw InputError("sccs: state out of range");
      if (!in_set[q]) {
        in_set[q] = true;
        domain.push_back(q);
      }
    }
  } else {
    domain = s.reachable_states();
    for (State q : domain) in_set[q] = true;
  }

  TarjanState t(s, in_set);
  for (State q : domain)
    if (t.index[q] == -1) t.run(q);

  // Tarjan emits reverse-topological; renumber to topological order.
  int n = static_cast<int>(t.components.size());
  SccDecomposition out;
  out.component_of.assign(s.state_count(), -1);
  out.components.resize(n);
  out.proper.assign(n, false);
  for (int c = 0; c < n; ++c) out.components[c] = std::move(t.components[n - 1 - c]);
  for (int c = 0; c < n; ++c)
    for (State q : out.components[c]) out.component_of[q] = c;

  out.condensation.assign(n, {});
  for (int c = 0; c < n; ++c) {
    std::set<int> succ;
    bool has_internal_edge = false;
    for (State q : out.components[c]) {
      for (Symbol a = 0; a < s.alphabet().size(); ++a) {
        State w = s.step(q, a);
        if (!in_set[w]) continue;
        int d = out.component_of[w];
        if (d == c)
          has_internal_edge = true;
        else
          succ.insert(d);
      }
    }
    out.condensation[c].assign(succ.begin(), succ.end());
    out.proper[c] = out.components[c].size() > 1 || has_internal_edge;
  }
  return out;
}

bool is_scc(const AutomatonStructure& s, const std::vector<State>& set) {
  if (set.empty()) return false;
  std::vector<bool> in_set(s.state_count(), false);
  for (State q : set) {
    if (q < 0 || q >= s.state_count()) throw InputError("is_scc: state out of range");
    in_set[q] = true;
  }
  if (set.size() == 1) {
    State q = set[0];
    for (Symbol a = 0; a < s.alphabet().size(); ++a)
      if (s.step(q, a) == q) return true;
    return false;
  }
  // Every state must reach every other inside the set.
  for (State start : set) {
    std::vector<bool> seen(s.state_count(), false);
    std::vector<State> stack{start};
    seen[start] = true;
    int found = 1;
    while (!stack.empty()) {
      State q = stack.back();
      stack.pop_back();
      for (Symbol a = 0; a < s.alphabet().size(); ++a) {
        State w = s.step(q, a);
        if (in_set[w] && !seen[w]) {
          seen[w] = true;
          ++found;
          stack.push_back(w);
        }
      }
    }
    for (State q : set)
      if (!seen[q]) return false;
    (void)found;
  }
  return true;
}

}  // namespace omegacanon
