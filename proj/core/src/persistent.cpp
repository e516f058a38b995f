#include "omegacanon/persistent.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace omegacanon {

bool VectorState::operator<(const VectorState& o) const {
  if (leading != o.leading) return leading < o.leading;
  return entries < o.entries;
}

namespace {

bool entries_on_cycles(const std::vector<State>& e) {
  int n = static_cast<int>(e.size());
  for (State q = 0; q < n; ++q) {
    State t = e[q];
    State x = e[t];
    int steps = 0;
    while (x != t && steps < n) {
      x = e[x];
      ++steps;
    }
    if (x != t) return false;
  }
  return true;
}

}  // namespace

PersistentDfa::PersistentDfa(const Fdfa& f, int class_u, const Limits& limits)
    : class_u_(class_u), sigma_(f.leading.alphabet().size()) {
  if (class_u < 0 || class_u >= f.leading_states())
    throw InputError("persistent dfa: class out of range");
  const Dfa& p = f.progress[class_u];
  progress_states_ = p.state_count();
  progress_initial_ = p.structure.initial();

  VectorState init;
  init.leading = class_u;
  init.entries.resize(progress_states_);
  for (State q = 0; q < progress_states_; ++q) init.entries[q] = q;

  std::map<VectorState, State> index;
  std::deque<State> queue;
  auto intern = [&](VectorState v) {
    auto [it, inserted] = index.emplace(std::move(v), static_cast<State>(states_.size()));
    if (inserted) {
      states_.push_back(it->first);
      if (static_cast<long>(states_.size()) > limits.vector_state_cap)
        throw CapacityError("persistent dfa: vector-state cap " +
                            std::to_string(limits.vector_state_cap) + " exceeded");
      queue.push_back(it->second);
    }
    return it->second;
  };
  intern(std::move(init));
  while (!queue.empty()) {
    State s = queue.front();
    queue.pop_front();
    VectorState current = states_[s];  // copy: states_ may reallocate
    for (Symbol a = 0; a < sigma_; ++a) {
      VectorState next;
      next.leading = f.leading.step(current.leading, a);
      next.entries.resize(progress_states_);
      for (State q = 0; q < progress_states_; ++q)
        next.entries[q] = p.structure.step(current.entries[q], a);
      State t = intern(std::move(next));
      delta_.resize(states_.size() * sigma_, -1);
      delta_[s * sigma_ + a] = t;
      if (t == 0) initial_reentered_ = true;
    }
  }

  int n = state_count();
  significant_.resize(n);
  accepting_.resize(n);
  for (State s = 0; s < n; ++s) {
    const VectorState& v = states_[s];
    State reached = v.entries[progress_initial_];
    accepting_[s] = p.accepting[reached];
    significant_[s] = v.leading == class_u_ && v.entries[reached] == reached &&
                      entries_on_cycles(v.entries);
  }

  std::vector<std::vector<State>> rows(n, std::vector<State>(sigma_));
  for (State s = 0; s < n; ++s)
    for (Symbol a = 0; a < sigma_; ++a) rows[s][a] = delta_[s * sigma_ + a];
  graph_.emplace(f.leading.alphabet(), n, 0, std::move(rows));
  scc_ = sccs(*graph_);

  // Polarity purity: significant states of one SCC share acceptance.  A
  // violation would falsify the color-monotonicity theory, so it is a
  // build error, not an input error.
  for (const auto& comp : scc_.components) {
    int seen = -1;
    for (State s : comp) {
      if (!significant_[s]) continue;
      int pol = accepting_[s] ? 1 : 0;
      if (seen == -1) seen = pol;
      if (seen != pol)
        throw std::logic_error("persistent dfa: SCC mixes significant polarities");
    }
  }
}

State PersistentDfa::run_word(const Word& v) const {
  State s = initial();
  for (Symbol a : v) {
    if (a < 0 || a >= sigma_) throw InputError("persistent dfa: symbol out of range");
    s = step(s, a);
  }
  return s;
}

State PersistentDfa::compose(State sv, State sw) const {
  const VectorState& a = states_[sv];
  const VectorState& b = states_[sw];
  VectorState c;
  // b was reached from the class state, so b.leading already accounts for
  // reading w after any word looping back to the class; composition is
  // only meaningful when a.leading is the class state itself.
  c.leading = a.leading == class_u_ ? b.leading : -1;
  if (c.leading == -1) throw InputError("persistent dfa: compose from a non-looping state");
  c.entries.resize(progress_states_);
  for (State q = 0; q < progress_states_; ++q) c.entries[q] = b.entries[a.entries[q]];
  auto it = std::find(states_.begin(), states_.end(), c);
  if (it == states_.end()) throw std::logic_error("persistent dfa: composed state not reachable");
  return static_cast<State>(it - states_.begin());
}

AlternationTable alternation_table(const PersistentDfa& p) {
  const SccDecomposition& d = p.condensation();
  int nc = static_cast<int>(d.components.size());
  AlternationTable t;
  t.from_accepting.assign(nc, 0);
  t.from_rejecting.assign(nc, 0);
  t.has_accepting.assign(nc, false);
  t.has_rejecting.assign(nc, false);
  for (int c = 0; c < nc; ++c) {
    for (State s : d.components[c]) {
      if (!p.significant(s)) continue;
      // The empty-word state only counts as a chain element when some
      // nonempty word reaches it.
      if (s == p.initial() && !p.initial_reentered()) continue;
      (p.accepting(s) ? t.has_accepting : t.has_rejecting)[c] = true;
    }
  }
  // Components are in topological order; process sinks first.
  for (int c = nc - 1; c >= 0; --c) {
    int succ_acc = 0, succ_rej = 0;
    for (int s : d.condensation[c]) {
      succ_acc = std::max(succ_acc, t.from_accepting[s]);
      succ_rej = std::max(succ_rej, t.from_rejecting[s]);
    }
    t.from_accepting[c] = std::max(succ_acc, t.has_accepting[c] ? 1 + succ_rej : 0);
    t.from_rejecting[c] = std::max(succ_rej, t.has_rejecting[c] ? 1 + succ_acc : 0);
  }
  return t;
}

bool is_persistent(const Fdfa& f, const Word& u, const Word& v, const Limits& limits) {
  if (v.empty()) throw InputError("is_persistent: the period must be nonempty");
  int class_u = f.leading.run(u);
  PersistentDfa p(f, class_u, limits);
  return p.significant(p.run_word(v));
}

DiameterMeasure diameter(const Fdfa& f, const Limits& limits) {
  DiameterMeasure m;
  std::vector<bool> reachable(f.leading_states(), false);
  for (State q : f.leading.reachable_states()) reachable[q] = true;
  for (int c = 0; c < f.leading_states(); ++c) {
    if (!reachable[c]) continue;
    PersistentDfa p(f, c, limits);
    AlternationTable t = alternation_table(p);
    int root = p.condensation().component_of[p.initial()];
    m.d_plus = std::max(m.d_plus, t.from_accepting[root]);
    m.d_minus = std::max(m.d_minus, t.from_rejecting[root]);
  }
  return m;
}

namespace {

Word shortest_path(const PersistentDfa& p, State from, State to, bool nonempty) {
  if (from == to && !nonempty) return {};
  std::vector<int> parent(p.state_count(), -2);
  std::vector<int> depth(p.state_count(), -1);
  std::vector<Symbol> via(p.state_count(), -1);
  std::deque<State> queue;
  auto expand = [&](State s, int d) {
    for (Symbol a = 0; a < p.alphabet_size(); ++a) {
      State t = p.step(s, a);
      if (parent[t] == -2) {
        parent[t] = s;
        via[t] = a;
        depth[t] = d + 1;
        queue.push_back(t);
      }
    }
  };
  expand(from, 0);
  while (!queue.empty()) {
    State s = queue.front();
    queue.pop_front();
    if (s == to) break;
    expand(s, depth[s]);
  }
  if (parent[to] == -2) throw std::logic_error("persistent dfa: no path between chain states");
  Word w;
  State s = to;
  for (int d = depth[to]; d > 0; --d) {
    w.push_back(via[s]);
    s = parent[s];
  }
  std::reverse(w.begin(), w.end());
  return w;
}

}  // namespace

std::optional<PersistentChain> persistent_chain_witness(const Fdfa& f, Polarity polarity, int k,
                                                        const Limits& limits) {
  if (k < 1) throw InputError("persistent_chain_witness: k must be >= 1");
  std::vector<bool> reachable(f.leading_states(), false);
  for (State q : f.leading.reachable_states()) reachable[q] = true;

  for (int c = 0; c < f.leading_states(); ++c) {
    if (!reachable[c]) continue;
    PersistentDfa p(f, c, limits);
    AlternationTable t = alternation_table(p);
    const SccDecomposition& d = p.condensation();
    int root = d.component_of[p.initial()];
    bool want_acc = polarity == Polarity::Positive;
    if ((want_acc ? t.from_accepting : t.from_rejecting)[root] < k) continue;

    // Walk the DP greedily: pick, per step, a component at or below the
    // current one holding a significant state of the wanted polarity whose
    // table value still supports the remaining length.
    std::vector<Word> periods;
    Word prefix;
    State cursor = p.initial();
    int comp = root;
    bool want = want_acc;
    for (int step = 0; step < k; ++step) {
      int remaining = k - step;
      // find a target component reachable from comp with the needed value
      std::deque<int> queue{comp};
      std::vector<int> come_from(d.components.size(), -3);
      come_from[comp] = -1;
      int found = -1;
      while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        const auto& has = want ? t.has_accepting : t.has_rejecting;
        const auto& val = want ? t.from_accepting : t.from_rejecting;
        if (has[x] && val[x] >= remaining) {
          found = x;
          break;
        }
        for (int s : d.condensation[x])
          if (come_from[s] == -3) {
            come_from[s] = x;
            queue.push_back(s);
          }
      }
      if (found == -1) throw std::logic_error("persistent chain: DP and walk disagree");
      State target = -1;
      for (State s : d.components[found])
        if (p.significant(s) && p.accepting(s) == want &&
            (s != p.initial() || p.initial_reentered())) {
          target = s;
          break;
        }
      Word hop = shortest_path(p, cursor, target, /*nonempty=*/true);
      prefix.insert(prefix.end(), hop.begin(), hop.end());
      periods.push_back(prefix);
      cursor = target;
      comp = found;
      want = !want;
    }

    // Verify before returning: each element persistent, acceptance strictly
    // alternating from the requested polarity.
    Word u = [&] {
      std::vector<int> dist(f.leading_states(), -1);
      std::vector<std::pair<State, Symbol>> par(f.leading_states(), {-1, -1});
      std::deque<State> queue{f.leading.initial()};
      dist[f.leading.initial()] = 0;
      while (!queue.empty()) {
        State x = queue.front();
        queue.pop_front();
        for (Symbol a = 0; a < f.leading.alphabet().size(); ++a) {
          State y = f.leading.step(x, a);
          if (dist[y] == -1) {
            dist[y] = dist[x] + 1;
            par[y] = {x, a};
            queue.push_back(y);
          }
        }
      }
      Word w;
      for (State x = c; x != f.leading.initial() || w.empty();) {
        auto [prev, a] = par[x];
        if (prev == -1) break;
        w.push_back(a);
        x = prev;
      }
      std::reverse(w.begin(), w.end());
      return w;
    }();
    bool expect = want_acc;
    for (const Word& v : periods) {
      if (!is_persistent(f, u, v, limits))
        throw std::logic_error("persistent chain: non-persistent element");
      State s = p.run_word(v);
      if (p.accepting(s) != expect) throw std::logic_error("persistent chain: polarity mismatch");
      expect = !expect;
    }
    return PersistentChain{std::move(u), std::move(periods)};
  }
  return std::nullopt;
}

}  // namespace omegacanon
