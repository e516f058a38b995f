#include "omegacanon/automaton.hpp"

#include <algorithm>
#include <deque>

namespace omegacanon {

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw InputError("alphabet must be nonempty");
  for (int i = 0; i < static_cast<int>(symbols_.size()); ++i) {
    if (symbols_[i].empty()) throw InputError("alphabet symbols must be nonempty tokens");
    if (!index_.emplace(symbols_[i], i).second)
      throw InputError("duplicate alphabet symbol: " + symbols_[i]);
  }
}

const std::string& Alphabet::name(Symbol s) const {
  if (s < 0 || s >= size()) throw InputError("symbol index out of range");
  return symbols_[s];
}

Symbol Alphabet::index(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw InputError("unknown symbol: " + name);
  return it->second;
}

Word Alphabet::parse(const std::string& text) const {
  Word w;
  w.reserve(text.size());
  for (char c : text) w.push_back(index(std::string(1, c)));
  return w;
}

std::string Alphabet::format(const Word& w) const {
  std::string out;
  for (Symbol s : w) out += name(s);
  return out;
}

AutomatonStructure::AutomatonStructure(Alphabet alphabet, int state_count, State initial,
                                       std::vector<std::vector<State>> delta)
    : alphabet_(std::move(alphabet)), state_count_(state_count), initial_(initial) {
  if (state_count_ <= 0) throw InputError("state count must be positive");
  if (initial_ < 0 || initial_ >= state_count_) throw InputError("initial state out of range");
  if (static_cast<int>(delta.size()) != state_count_)
    throw InputError("delta must have one row per state");
  delta_.resize(static_cast<size_t>(state_count_) * alphabet_.size());
  for (State q = 0; q < state_count_; ++q) {
    if (static_cast<int>(delta[q].size()) != alphabet_.size())
      throw InputError("delta row " + std::to_string(q) + " must list every symbol");
    for (Symbol s = 0; s < alphabet_.size(); ++s) {
      State t = delta[q][s];
      if (t < 0 || t >= state_count_)
        throw InputError("delta target out of range at state " + std::to_string(q));
      delta_[q * alphabet_.size() + s] = t;
    }
  }
}

State AutomatonStructure::run(State from, const Word& w) const {
  if (from < 0 || from >= state_count_) throw InputError("run: source state out of range");
  State q = from;
  for (Symbol s : w) {
    if (s < 0 || s >= alphabet_.size()) throw InputError("run: symbol index out of range");
    q = step(q, s);
  }
  return q;
}

std::vector<State> AutomatonStructure::reachable_states() const {
  std::vector<bool> seen(state_count_, false);
  std::vector<State> order;
  std::deque<State> queue{initial_};
  seen[initial_] = true;
  while (!queue.empty()) {
    State q = queue.front();
    queue.pop_front();
    order.push_back(q);
    for (Symbol s = 0; s < alphabet_.size(); ++s) {
      State t = step(q, s);
      if (!seen[t]) {
        seen[t] = true;
        queue.push_back(t);
      }
    }
  }
  return order;
}

bool AutomatonStructure::operator==(const AutomatonStructure& other) const {
  return alphabet_ == other.alphabet_ && state_count_ == other.state_count_ &&
         initial_ == other.initial_ && delta_ == other.delta_;
}

Dfa::Dfa(AutomatonStructure s, std::vector<bool> acc)
    : structure(std::move(s)), accepting(std::move(acc)) {
  if (static_cast<int>(accepting.size()) != structure.state_count())
    throw InputError("accepting vector must cover every state");
}

Dfa dfa_reaching(const Dfa& d, State q) {
  std::vector<bool> acc(d.state_count(), false);
  acc.at(q) = true;
  return Dfa(d.structure, std::move(acc));
}

Dfa dfa_from(const Dfa& d, State q) {
  if (q < 0 || q >= d.state_count()) throw InputError("dfa_from: state out of range");
  AutomatonStructure s = d.structure;
  std::vector<std::vector<State>> delta(s.state_count(), std::vector<State>(s.alphabet().size()));
  for (State p = 0; p < s.state_count(); ++p)
    for (Symbol a = 0; a < s.alphabet().size(); ++a) delta[p][a] = s.step(p, a);
  return Dfa(AutomatonStructure(s.alphabet(), s.state_count(), q, std::move(delta)), d.accepting);
}

Dfa dfa_between(const Dfa& d, State q, State q_to) {
  Dfa from = dfa_from(d, q);
  std::vector<bool> acc(d.state_count(), false);
  acc.at(q_to) = true;
  return Dfa(from.structure, std::move(acc));
}

AutomatonStructure canonical_form(const AutomatonStructure& s, std::vector<State>* old_to_new) {
  std::vector<State> order = s.reachable_states();
  std::vector<State> renumber(s.state_count(), -1);
  for (int i = 0; i < static_cast<int>(order.size()); ++i) renumber[order[i]] = i;
  std::vector<std::vector<State>> delta(order.size(), std::vector<State>(s.alphabet().size()));
  for (int i = 0; i < static_cast<int>(order.size()); ++i)
    for (Symbol a = 0; a < s.alphabet().size(); ++a)
      delta[i][a] = renumber[s.step(order[i], a)];
  if (old_to_new) *old_to_new = renumber;
  return AutomatonStructure(s.alphabet(), static_cast<int>(order.size()), 0, std::move(delta));
}

}  // namespace omegacanon
