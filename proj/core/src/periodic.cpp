#include "omegacanon/periodic.hpp"

#include <algorithm>
#include <map>

#include "omegacanon/moore.hpp"

namespace omegacanon {

TransitionProfile TransitionProfile::identity(int n) {
  TransitionProfile p;
  p.target.resize(n);
  p.visited.assign(n, 0);
  for (State q = 0; q < n; ++q) p.target[q] = q;
  return p;
}

TransitionProfile TransitionProfile::letter(const AutomatonStructure& s, Symbol a) {
  int n = s.state_count();
  TransitionProfile p;
  p.target.resize(n);
  p.visited.resize(n);
  for (State q = 0; q < n; ++q) {
    p.target[q] = s.step(q, a);
    p.visited[q] = std::uint64_t{1} << p.target[q];
  }
  return p;
}

TransitionProfile TransitionProfile::then(const TransitionProfile& next) const {
  int n = static_cast<int>(target.size());
  TransitionProfile p;
  p.target.resize(n);
  p.visited.resize(n);
  for (State q = 0; q < n; ++q) {
    p.target[q] = next.target[target[q]];
    p.visited[q] = visited[q] | next.visited[target[q]];
  }
  return p;
}

bool TransitionProfile::operator<(const TransitionProfile& o) const {
  if (target != o.target) return target < o.target;
  return visited < o.visited;
}

namespace {

// Acceptance of the period summarized by profile p, read from state from:
// iterate p to its cycle and evaluate the acceptance condition on the
// states visited along the repeating part.
bool profile_accepts(const OmegaAutomaton& m, const TransitionProfile& p, State from) {
  std::map<State, int> seen;
  std::vector<State> order;
  State q = from;
  while (!seen.count(q)) {
    seen[q] = static_cast<int>(order.size());
    order.push_back(q);
    q = p.target[q];
  }
  int k = seen[q];
  std::uint64_t inf = 0;
  for (int i = k; i < static_cast<int>(order.size()); ++i) inf |= p.visited[order[i]];
  std::vector<State> inf_set;
  for (State s = 0; s < m.structure.state_count(); ++s)
    if (inf >> s & 1) inf_set.push_back(s);
  return m.acceptance.accepts_inf_set(inf_set);
}

}  // namespace

Dfa periodic_progress_dfa(const OmegaAutomaton& m, const LeadingCongruence& leading, int class_u,
                          const Limits& limits) {
  if (m.structure.state_count() > 64)
    throw CapacityError("periodic_progress_dfa: more than 64 automaton states");
  if (class_u < 0 || class_u >= leading.structure.state_count())
    throw InputError("periodic_progress_dfa: class out of range");
  // Any automaton state in the class will do: equivalent states accept the
  // same omega-words.
  State rep = -1;
  for (State q = 0; q < m.structure.state_count(); ++q)
    if (leading.class_of[q] == class_u) {
      rep = q;
      break;
    }
  if (rep == -1) throw InputError("periodic_progress_dfa: class has no automaton state");

  int n = m.structure.state_count();
  std::vector<TransitionProfile> letters;
  for (Symbol a = 0; a < m.structure.alphabet().size(); ++a)
    letters.push_back(TransitionProfile::letter(m.structure, a));

  std::map<TransitionProfile, State> index;
  std::vector<TransitionProfile> profiles;
  std::vector<std::vector<State>> delta;
  auto intern = [&](const TransitionProfile& p) {
    auto [it, inserted] = index.emplace(p, static_cast<State>(profiles.size()));
    if (inserted) {
      profiles.push_back(p);
      if (static_cast<long>(profiles.size()) > limits.profile_cap)
        throw CapacityError("periodic_progress_dfa: profile cap exceeded");
    }
    return it->second;
  };
  intern(TransitionProfile::identity(n));
  for (size_t i = 0; i < profiles.size(); ++i) {
    delta.emplace_back();
    for (const TransitionProfile& a : letters) delta[i].push_back(intern(profiles[i].then(a)));
  }

  std::vector<bool> accepting(profiles.size(), false);
  for (size_t i = 1; i < profiles.size(); ++i)  // the identity stays rejecting: periods are nonempty
    accepting[i] = profile_accepts(m, profiles[i], rep);

  Dfa raw(AutomatonStructure(m.structure.alphabet(), static_cast<int>(profiles.size()), 0,
                             std::move(delta)),
          std::move(accepting));
  return minimize_dfa(raw);
}

Fdfa periodic_fdfa(const OmegaAutomaton& m, const LeadingCongruence& leading,
                   const Limits& limits) {
  std::vector<Dfa> progress;
  progress.reserve(leading.structure.state_count());
  for (int c = 0; c < leading.structure.state_count(); ++c)
    progress.push_back(periodic_progress_dfa(m, leading, c, limits));
  return Fdfa(leading.structure, std::move(progress), AcceptanceMode::Exact);
}

Fdfa periodic_fdfa(const OmegaAutomaton& m, const Limits& limits) {
  return periodic_fdfa(m, leading_congruence(m, limits), limits);
}

}  // namespace omegacanon
