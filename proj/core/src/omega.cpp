#include "omegacanon/omega.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "omegacanon/product.hpp"
#include "omegacanon/scc.hpp"

namespace omegacanon {

std::string to_string(AcceptanceKind k) {
  switch (k) {
    case AcceptanceKind::Buchi: return "buchi";
    case AcceptanceKind::CoBuchi: return "cobuchi";
    case AcceptanceKind::Parity: return "parity";
    case AcceptanceKind::Muller: return "muller";
  }
  return "?";
}

static std::vector<bool> state_set(const std::vector<State>& f, int n, const char* what) {
  std::vector<bool> out(n, false);
  for (State q : f) {
    if (q < 0 || q >= n) throw InputError(std::string(what) + ": state out of range");
    out[q] = true;
  }
  return out;
}

OmegaAcceptance OmegaAcceptance::buchi(std::vector<State> f, int state_count) {
  OmegaAcceptance a;
  a.kind = AcceptanceKind::Buchi;
  a.set = state_set(f, state_count, "buchi");
  return a;
}

OmegaAcceptance OmegaAcceptance::cobuchi(std::vector<State> f, int state_count) {
  OmegaAcceptance a;
  a.kind = AcceptanceKind::CoBuchi;
  a.set = state_set(f, state_count, "cobuchi");
  return a;
}

OmegaAcceptance OmegaAcceptance::parity(std::vector<int> colors) {
  OmegaAcceptance a;
  a.kind = AcceptanceKind::Parity;
  for (int c : colors)
    if (c < 0) throw InputError("parity: colors must be nonnegative");
  a.colors = std::move(colors);
  return a;
}

OmegaAcceptance OmegaAcceptance::muller(std::vector<std::vector<State>> alpha, int state_count) {
  OmegaAcceptance a;
  a.kind = AcceptanceKind::Muller;
  std::set<std::vector<State>> seen;
  for (auto& f : alpha) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    for (State q : f)
      if (q < 0 || q >= state_count) throw InputError("muller: state out of range");
    if (!seen.insert(f).second) throw InputError("muller: duplicate set in alpha");
  }
  // canonical order, so equal conditions compare and serialize equal
  a.alpha.assign(seen.begin(), seen.end());
  return a;
}

bool OmegaAcceptance::accepts_inf_set(const std::vector<State>& sorted_set) const {
  switch (kind) {
    case AcceptanceKind::Buchi:
      for (State q : sorted_set)
        if (set[q]) return true;
      return false;
    case AcceptanceKind::CoBuchi:
      for (State q : sorted_set)
        if (set[q]) return false;
      return true;
    case AcceptanceKind::Parity: {
      int min_color = -1;
      for (State q : sorted_set)
        if (min_color == -1 || colors[q] < min_color) min_color = colors[q];
      return min_color != -1 && min_color % 2 == 0;
    }
    case AcceptanceKind::Muller:
      return std::find(alpha.begin(), alpha.end(), sorted_set) != alpha.end();
  }
  return false;
}

OmegaAutomaton::OmegaAutomaton(AutomatonStructure s, OmegaAcceptance a)
    : structure(std::move(s)), acceptance(std::move(a)) {
  int n = structure.state_count();
  switch (acceptance.kind) {
    case AcceptanceKind::Buchi:
    case AcceptanceKind::CoBuchi:
      if (static_cast<int>(acceptance.set.size()) != n)
        throw InputError("acceptance set inconsistent with structure");
      break;
    case AcceptanceKind::Parity:
      if (static_cast<int>(acceptance.colors.size()) != n)
        throw InputError("parity coloring must be total");
      break;
    case AcceptanceKind::Muller:
      for (const auto& f : acceptance.alpha)
        for (State q : f)
          if (q >= n) throw InputError("muller set inconsistent with structure");
      break;
  }
}

bool accepts_up(const OmegaAutomaton& m, const UPWord& w) {
  const AutomatonStructure& s = m.structure;
  State q = s.run(w.spoke);
  // Determinism lets the loop detection key on the state after each full
  // cycle only.
  std::map<State, int> seen;
  std::vector<State> after;
  while (!seen.count(q)) {
    seen[q] = static_cast<int>(after.size());
    after.push_back(q);
    q = s.run(q, w.cycle);
  }
  int k = seen[q];
  int l = static_cast<int>(after.size());
  std::set<State> inf;
  State p = after[k];
  for (int i = k; i < l; ++i)
    for (Symbol a : w.cycle) {
      p = s.step(p, a);
      inf.insert(p);
    }
  return m.acceptance.accepts_inf_set(std::vector<State>(inf.begin(), inf.end()));
}

bool accepting_scc(const OmegaAutomaton& m, const std::vector<State>& set) {
  if (!is_scc(m.structure, set)) throw InputError("accepting_scc: the given set is not an SCC");
  std::vector<State> sorted = set;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  return m.acceptance.accepts_inf_set(sorted);
}

namespace {

// Parity encoding of the three non-Muller conditions.
std::vector<int> as_parity(const OmegaAcceptance& a, int n) {
  std::vector<int> colors(n);
  switch (a.kind) {
    case AcceptanceKind::Buchi:
      for (State q = 0; q < n; ++q) colors[q] = a.set[q] ? 0 : 1;
      break;
    case AcceptanceKind::CoBuchi:
      for (State q = 0; q < n; ++q) colors[q] = a.set[q] ? 1 : 2;
      break;
    case AcceptanceKind::Parity:
      colors = a.colors;
      break;
    default:
      throw InputError("as_parity: Muller not supported");
  }
  return colors;
}

// Exact disagreement search for parity-encodable conditions: a strongly
// connected product subset with min colors (c1, c2) of opposite parity
// exists iff some MSCC of the product restricted to colors >= (c1, c2)
// contains witnesses of both exact minima.
bool parity_equiv(const AutomatonStructure& prod, const std::vector<State>& proj1,
                  const std::vector<State>& proj2, const std::vector<int>& col1,
                  const std::vector<int>& col2) {
  int n = prod.state_count();
  std::vector<int> c1(n), c2(n);
  int max1 = 0, max2 = 0;
  for (State p = 0; p < n; ++p) {
    c1[p] = col1[proj1[p]];
    c2[p] = col2[proj2[p]];
    max1 = std::max(max1, c1[p]);
    max2 = std::max(max2, c2[p]);
  }
  for (int a = 0; a <= max1; ++a) {
    for (int b = 0; b <= max2; ++b) {
      if (a % 2 == b % 2) continue;
      std::vector<State> allowed;
      for (State p = 0; p < n; ++p)
        if (c1[p] >= a && c2[p] >= b) allowed.push_back(p);
      if (allowed.empty()) continue;
      SccDecomposition d = sccs(prod, allowed);
      for (size_t comp = 0; comp < d.components.size(); ++comp) {
        if (!d.proper[comp]) continue;
        bool has_a = false, has_b = false;
        for (State p : d.components[comp]) {
          if (c1[p] == a) has_a = true;
          if (c2[p] == b) has_b = true;
        }
        if (has_a && has_b) return false;  // disagreement witness
      }
    }
  }
  return true;
}

// Enumerates the strongly connected subsets of one product MSCC and checks
// for a membership disagreement between the two projections.
bool muller_equiv(const OmegaAutomaton& m, const AutomatonStructure& prod,
                  const std::vector<State>& proj1, const std::vector<State>& proj2,
                  const Limits& limits) {
  SccDecomposition d = sccs(prod);
  for (size_t comp = 0; comp < d.components.size(); ++comp) {
    const std::vector<State>& mscc = d.components[comp];
    if (!d.proper[comp]) continue;
    if (static_cast<int>(mscc.size()) > limits.subset_cap)
      throw CapacityError("state_equiv: product MSCC of size " + std::to_string(mscc.size()) +
                          " exceeds the subset enumeration cap " +
                          std::to_string(limits.subset_cap));
    int k = static_cast<int>(mscc.size());
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
      std::vector<State> subset;
      for (int i = 0; i < k; ++i)
        if (mask >> i & 1) subset.push_back(mscc[i]);
      if (!is_scc(prod, subset)) continue;
      std::set<State> s1, s2;
      for (State p : subset) {
        s1.insert(proj1[p]);
        s2.insert(proj2[p]);
      }
      bool a1 = m.acceptance.accepts_inf_set(std::vector<State>(s1.begin(), s1.end()));
      bool a2 = m.acceptance.accepts_inf_set(std::vector<State>(s2.begin(), s2.end()));
      if (a1 != a2) return false;
    }
  }
  return true;
}

}  // namespace

bool state_equiv(const OmegaAutomaton& m, State q1, State q2, const Limits& limits) {
  if (q1 < 0 || q1 >= m.structure.state_count() || q2 < 0 || q2 >= m.structure.state_count())
    throw InputError("state_equiv: state out of range");
  if (q1 == q2) return true;
  Product prod = product_from({&m.structure, &m.structure}, {q1, q2});
  if (m.acceptance.kind == AcceptanceKind::Muller)
    return muller_equiv(m, prod.structure, prod.projections[0], prod.projections[1], limits);
  std::vector<int> colors = as_parity(m.acceptance, m.structure.state_count());
  return parity_equiv(prod.structure, prod.projections[0], prod.projections[1], colors, colors);
}

LeadingCongruence leading_congruence(const OmegaAutomaton& m, const Limits& limits) {
  std::vector<State> reachable = m.structure.reachable_states();
  // Group reachable states into language-equivalence classes.  Equivalence
  // is transitive, so comparing against one representative per class
  // suffices.
  std::vector<State> reps;
  std::vector<int> class_of(m.structure.state_count(), -1);
  for (State q : reachable) {
    int found = -1;
    for (size_t c = 0; c < reps.size(); ++c) {
      if (state_equiv(m, reps[c], q, limits)) {
        found = static_cast<int>(c);
        break;
      }
    }
    if (found == -1) {
      found = static_cast<int>(reps.size());
      reps.push_back(q);
    }
    class_of[q] = found;
  }

  int n = static_cast<int>(reps.size());
  std::vector<std::vector<State>> delta(n, std::vector<State>(m.structure.alphabet().size()));
  for (int c = 0; c < n; ++c)
    for (Symbol a = 0; a < m.structure.alphabet().size(); ++a)
      delta[c][a] = class_of[m.structure.step(reps[c], a)];
  // Determinism makes language-equivalence a congruence; verify anyway.
  for (State q : reachable)
    for (Symbol a = 0; a < m.structure.alphabet().size(); ++a)
      if (class_of[m.structure.step(q, a)] != delta[class_of[q]][a])
        throw std::logic_error("leading_congruence: quotient is not a congruence");

  AutomatonStructure raw(m.structure.alphabet(), n, class_of[m.structure.initial()],
                         std::move(delta));
  std::vector<State> renumber;
  AutomatonStructure canonical = canonical_form(raw, &renumber);
  LeadingCongruence out{std::move(canonical), std::vector<int>(m.structure.state_count(), -1)};
  for (State q : reachable) out.class_of[q] = renumber[class_of[q]];
  return out;
}

UPWord canonical_up(const UPWord& w) {
  Word u = w.spoke;
  Word v = w.cycle;
  auto primitive_root = [](Word x) {
    int n = static_cast<int>(x.size());
    for (int p = 1; p <= n; ++p) {
      if (n % p != 0) continue;
      bool ok = true;
      for (int i = p; i < n && ok; ++i) ok = x[i] == x[i - p];
      if (ok) return Word(x.begin(), x.begin() + p);
    }
    return x;
  };
  v = primitive_root(v);
  while (!u.empty() && u.back() == v.back()) {
    u.pop_back();
    std::rotate(v.begin(), v.end() - 1, v.end());
  }
  return UPWord(std::move(u), std::move(v));
}

std::vector<Word> enumerate_words(int sigma, int min_len, int max_len) {
  std::vector<Word> out;
  std::vector<Word> layer{Word{}};
  for (int len = 0; len <= max_len; ++len) {
    if (len >= min_len)
      for (const Word& w : layer) out.push_back(w);
    if (len == max_len) break;
    std::vector<Word> next;
    next.reserve(layer.size() * sigma);
    for (const Word& w : layer)
      for (Symbol a = 0; a < sigma; ++a) {
        Word x = w;
        x.push_back(a);
        next.push_back(std::move(x));
      }
    layer = std::move(next);
  }
  return out;
}

}  // namespace omegacanon
