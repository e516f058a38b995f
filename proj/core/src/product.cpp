#include "omegacanon/product.hpp"

#include <deque>
#include <map>

namespace omegacanon {

Product product_from(const std::vector<const AutomatonStructure*>& components,
                     const std::vector<State>& start) {
  if (components.empty()) throw InputError("product: need at least one component");
  if (start.size() != components.size()) throw InputError("product: start tuple size mismatch");
  const Alphabet& sigma = components[0]->alphabet();
  for (const auto* c : components)
    if (!(c->alphabet() == sigma)) throw InputError("product: alphabet mismatch");

  std::map<std::vector<State>, State> index;
  std::vector<std::vector<State>> tuples;
  std::deque<State> queue;
  auto intern = [&](const std::vector<State>& t) {
    auto [it, inserted] = index.emplace(t, static_cast<State>(tuples.size()));
    if (inserted) {
      tuples.push_back(t);
      queue.push_back(it->second);
    }
    return it->second;
  };
  intern(start);

  std::vector<std::vector<State>> delta;
  while (!queue.empty()) {
    State p = queue.front();
    queue.pop_front();
    std::vector<State> tuple = tuples[p];
    if (static_cast<int>(delta.size()) <= p) delta.resize(tuples.size());
    delta[p].resize(sigma.size());
    for (Symbol a = 0; a < sigma.size(); ++a) {
      std::vector<State> next(tuple.size());
      for (size_t i = 0; i < tuple.size(); ++i) next[i] = components[i]->step(tuple[i], a);
      delta[p][a] = intern(next);
    }
  }
  delta.resize(tuples.size());

  Product out{AutomatonStructure(sigma, static_cast<int>(tuples.size()), 0, std::move(delta)), {}};
  out.projections.assign(components.size(), std::vector<State>(tuples.size()));
  for (size_t p = 0; p < tuples.size(); ++p)
    for (size_t i = 0; i < components.size(); ++i) out.projections[i][p] = tuples[p][i];
  return out;
}

Product product(const std::vector<const AutomatonStructure*>& components) {
  std::vector<State> start;
  start.reserve(components.size());
  for (const auto* c : components) start.push_back(c->initial());
  return product_from(components, start);
}

Product product(const AutomatonStructure& a, const AutomatonStructure& b) {
  return product({&a, &b});
}

}  // namespace omegacanon
