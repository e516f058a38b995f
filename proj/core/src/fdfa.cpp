#include "omegacanon/fdfa.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "omegacanon/product.hpp"

namespace omegacanon {

std::string to_string(AcceptanceMode m) {
  switch (m) {
    case AcceptanceMode::Exact: return "exact";
    case AcceptanceMode::Normalized: return "normalized";
    case AcceptanceMode::DuoNormalized: return "duo";
  }
  return "?";
}

NormalizationKind kind_of_mode(AcceptanceMode m) {
  switch (m) {
    case AcceptanceMode::Exact: return NormalizationKind::Exact;
    case AcceptanceMode::Normalized: return NormalizationKind::Normalized;
    case AcceptanceMode::DuoNormalized: return NormalizationKind::DuoNormalized;
  }
  return NormalizationKind::Exact;
}

Fdfa::Fdfa(AutomatonStructure lead, std::vector<Dfa> prog, AcceptanceMode m)
    : leading(std::move(lead)), progress(std::move(prog)), mode(m) {
  if (static_cast<int>(progress.size()) != leading.state_count())
    throw InputError("fdfa: need one progress DFA per leading state");
  for (const Dfa& p : progress)
    if (!(p.structure.alphabet() == leading.alphabet()))
      throw InputError("fdfa: progress alphabet differs from the leading alphabet");
}

Fdfa with_mode(Fdfa f, AcceptanceMode mode) {
  f.mode = mode;
  return f;
}

namespace {

// Transition function of v on a progress DFA, as a state vector.
std::vector<State> word_function(const Dfa& p, const Word& v) {
  std::vector<State> f(p.state_count());
  for (State q = 0; q < p.state_count(); ++q) f[q] = p.structure.run(q, v);
  return f;
}

std::vector<State> compose(const std::vector<State>& first, const std::vector<State>& then) {
  std::vector<State> out(first.size());
  for (size_t i = 0; i < first.size(); ++i) out[i] = then[first[i]];
  return out;
}

// Every image point of f must lie on a cycle of f, i.e. reading the word
// again from any reached state eventually returns to it.
bool image_on_cycles(const std::vector<State>& f) {
  int n = static_cast<int>(f.size());
  for (State q = 0; q < n; ++q) {
    State e = f[q];
    State x = f[e];
    int steps = 0;
    while (x != e && steps < n) {
      x = f[x];
      ++steps;
    }
    if (x != e) return false;
  }
  return true;
}

bool check_kind(const Fdfa& f, State lead_u, State lead_uv, const std::vector<State>& fv,
                NormalizationKind kind) {
  if (kind == NormalizationKind::Exact) return true;
  if (lead_u != lead_uv) return false;
  if (kind == NormalizationKind::Normalized) return true;
  const Dfa& p = f.progress[lead_u];
  State pv = fv[p.structure.initial()];
  if (fv[pv] != pv) return false;
  if (kind == NormalizationKind::DuoNormalized) return true;
  return image_on_cycles(fv);
}

}  // namespace

bool is_normalized(const Fdfa& f, const Word& u, const Word& v, NormalizationKind kind) {
  if (v.empty()) throw InputError("is_normalized: the period must be nonempty");
  if (kind == NormalizationKind::Exact) return true;
  State lead_u = f.leading.run(u);
  State lead_uv = f.leading.run(lead_u, v);
  if (kind == NormalizationKind::Normalized) return lead_u == lead_uv;
  std::vector<State> fv = word_function(f.progress[lead_u], v);
  return check_kind(f, lead_u, lead_uv, fv, kind);
}

UPWord normalize(const Fdfa& f, const UPWord& w, NormalizationKind kind) {
  if (kind == NormalizationKind::Exact) return w;
  const Word& v = w.cycle;
  // For each spoke extension u v^i, the j-search state is the pair
  // (leading state after u v^{i+j}, transition function of v^j on the
  // progress DFA of u v^i); it is eventually periodic, so an unsuccessful
  // i is detected by a repeated pair.  A successful i exists within the
  // number of leading states.
  int max_i = f.leading_states() + 1;
  State lead = f.leading.run(w.spoke);
  for (int i = 0; i <= max_i; ++i) {
    const Dfa& p = f.progress[lead];
    std::vector<State> step = word_function(p, v);
    std::vector<State> fj = step;
    State lead_j = f.leading.run(lead, v);
    std::set<std::pair<State, std::vector<State>>> seen;
    for (int j = 1;; ++j) {
      if (check_kind(f, lead, lead_j, fj, kind)) {
        Word spoke = w.spoke;
        for (int r = 0; r < i; ++r) spoke.insert(spoke.end(), v.begin(), v.end());
        Word cycle;
        for (int r = 0; r < j; ++r) cycle.insert(cycle.end(), v.begin(), v.end());
        return UPWord(std::move(spoke), std::move(cycle));
      }
      if (!seen.insert({lead_j, fj}).second) break;  // cycled: no j for this i
      fj = compose(fj, step);
      lead_j = f.leading.run(lead_j, v);
    }
    lead = f.leading.run(lead, v);
  }
  throw std::logic_error("normalize: no normalized decomposition found");
}

bool accepts(const Fdfa& f, const UPWord& w) {
  UPWord n = normalize(f, w, kind_of_mode(f.mode));
  return f.progress_of_word(n.spoke).accepts(n.cycle);
}

bool accepts_persistent_mode(const Fdfa& f, const UPWord& w) {
  UPWord n = normalize(f, w, NormalizationKind::Persistent);
  return f.progress_of_word(n.spoke).accepts(n.cycle);
}

Fdfa complement(Fdfa f) {
  for (Dfa& p : f.progress)
    for (size_t q = 0; q < p.accepting.size(); ++q) p.accepting[q] = !p.accepting[q];
  return f;
}

namespace {

Fdfa combine(const Fdfa& f1, const Fdfa& f2, bool conjunction) {
  if (!(f1.leading.alphabet() == f2.leading.alphabet()))
    throw InputError("fdfa combination: alphabet mismatch");
  if (f1.mode != f2.mode) throw InputError("fdfa combination: acceptance mode mismatch");
  Product lead = product(f1.leading, f2.leading);
  std::vector<Dfa> progress;
  progress.reserve(lead.structure.state_count());
  for (State p = 0; p < lead.structure.state_count(); ++p) {
    const Dfa& p1 = f1.progress[lead.projections[0][p]];
    const Dfa& p2 = f2.progress[lead.projections[1][p]];
    Product prog = product(p1.structure, p2.structure);
    std::vector<bool> acc(prog.structure.state_count());
    for (State q = 0; q < prog.structure.state_count(); ++q) {
      bool a = p1.accepting[prog.projections[0][q]];
      bool b = p2.accepting[prog.projections[1][q]];
      acc[q] = conjunction ? (a && b) : (a || b);
    }
    progress.emplace_back(std::move(prog.structure), std::move(acc));
  }
  return Fdfa(std::move(lead.structure), std::move(progress), f1.mode);
}

// Shortest word from the leading initial state to q (BFS, symbol order).
Word leading_access_word(const AutomatonStructure& lead, State q) {
  std::vector<int> parent(lead.state_count(), -2);
  std::vector<Symbol> via(lead.state_count(), -1);
  std::deque<State> queue{lead.initial()};
  parent[lead.initial()] = -1;
  while (!queue.empty()) {
    State x = queue.front();
    queue.pop_front();
    for (Symbol a = 0; a < lead.alphabet().size(); ++a) {
      State y = lead.step(x, a);
      if (parent[y] == -2) {
        parent[y] = x;
        via[y] = a;
        queue.push_back(y);
      }
    }
  }
  if (parent[q] == -2) throw InputError("leading state unreachable");
  Word w;
  for (State x = q; parent[x] != -1; x = parent[x]) w.push_back(via[x]);
  std::reverse(w.begin(), w.end());
  return w;
}

}  // namespace

Fdfa intersect(const Fdfa& f1, const Fdfa& f2) { return combine(f1, f2, true); }
Fdfa unite(const Fdfa& f1, const Fdfa& f2) { return combine(f1, f2, false); }

std::optional<UPWord> is_empty(const Fdfa& f) {
  const Alphabet& sigma = f.leading.alphabet();
  std::vector<bool> lead_reachable(f.leading_states(), false);
  for (State q : f.leading.reachable_states()) lead_reachable[q] = true;

  for (State q = 0; q < f.leading_states(); ++q) {
    if (!lead_reachable[q]) continue;
    const Dfa& p = f.progress[q];
    for (State q_acc = 0; q_acc < p.state_count(); ++q_acc) {
      if (!p.accepting[q_acc]) continue;
      // BFS over (leading from q, progress from init, progress from q_acc)
      // for the shortest nonempty word reaching (q, q_acc, q_acc).  Parent
      // links decrease the depth by exactly one, so walking depth(goal)
      // steps back from the goal reconstructs the word even when the start
      // node is re-entered along the way.
      struct Node {
        State l, a, b;
        bool operator<(const Node& o) const { return std::tie(l, a, b) < std::tie(o.l, o.a, o.b); }
        bool operator==(const Node& o) const { return l == o.l && a == o.a && b == o.b; }
      };
      Node start{q, p.structure.initial(), q_acc};
      Node goal{q, q_acc, q_acc};
      std::map<Node, std::pair<Node, Symbol>> parent;
      std::map<Node, int> depth;
      std::deque<Node> queue;
      auto expand = [&](const Node& n, int d) {
        for (Symbol a = 0; a < sigma.size(); ++a) {
          Node m{f.leading.step(n.l, a), p.structure.step(n.a, a), p.structure.step(n.b, a)};
          if (!parent.count(m)) {
            parent.emplace(m, std::make_pair(n, a));
            depth.emplace(m, d + 1);
            queue.push_back(m);
          }
        }
      };
      expand(start, 0);  // paths of length >= 1 only; the period is nonempty
      std::optional<Node> reached;
      while (!queue.empty()) {
        Node n = queue.front();
        queue.pop_front();
        if (n == goal) {
          reached = n;
          break;
        }
        expand(n, depth.at(n));
      }
      if (reached) {
        Word y;
        Node n = *reached;
        for (int d = depth.at(n); d > 0; --d) {
          auto [prev, a] = parent.at(n);
          y.push_back(a);
          n = prev;
        }
        std::reverse(y.begin(), y.end());
        return UPWord(leading_access_word(f.leading, q), std::move(y));
      }
    }
  }
  return std::nullopt;
}

CheckResult is_universal(const Fdfa& f) {
  auto witness = is_empty(complement(with_mode(f, AcceptanceMode::DuoNormalized)));
  return {!witness.has_value(), witness};
}

CheckResult contains(const Fdfa& f1, const Fdfa& f2) {
  Fdfa a = with_mode(f2, AcceptanceMode::DuoNormalized);
  Fdfa b = with_mode(f1, AcceptanceMode::DuoNormalized);
  auto witness = is_empty(intersect(a, complement(b)));
  return {!witness.has_value(), witness};
}

CheckResult equivalent(const Fdfa& f1, const Fdfa& f2) {
  CheckResult c1 = contains(f1, f2);
  if (!c1.holds) return c1;
  return contains(f2, f1);
}

std::optional<SaturationCounterexample> check_saturation_bounded(const Fdfa& f, int max_u,
                                                                 int max_v) {
  if (max_u < 1 || max_v < 1) throw InputError("check_saturation_bounded: bounds must be >= 1");
  NormalizationKind kind = kind_of_mode(f.mode);
  int sigma = f.leading.alphabet().size();
  // Group decompositions by the omega-word they denote.
  std::map<std::pair<Word, Word>, std::pair<UPWord, bool>> first_seen;
  for (const Word& x : enumerate_words(sigma, 0, max_u)) {
    for (const Word& y : enumerate_words(sigma, 1, max_v)) {
      if (!is_normalized(f, x, y, kind)) continue;
      bool member = f.progress_of_word(x).accepts(y);
      UPWord key = canonical_up(UPWord(x, y));
      auto [it, inserted] =
          first_seen.emplace(std::make_pair(key.spoke, key.cycle), std::make_pair(UPWord(x, y), member));
      if (!inserted && it->second.second != member) {
        if (member) return SaturationCounterexample{UPWord(x, y), it->second.first};
        return SaturationCounterexample{it->second.first, UPWord(x, y)};
      }
    }
  }
  return std::nullopt;
}

}  // namespace omegacanon
