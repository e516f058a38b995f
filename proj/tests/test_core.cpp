#include <doctest.h>

#include <algorithm>
#include <set>

#include "omegacanon/fixtures.hpp"
#include "omegacanon/moore.hpp"
#include "omegacanon/product.hpp"
#include "omegacanon/scc.hpp"

using namespace omegacanon;

namespace {

Word w(const Alphabet& sigma, const std::string& text) { return sigma.parse(text); }

// Path-closure oracle for is_scc: every ordered pair connected inside S.
bool brute_scc(const AutomatonStructure& s, const std::vector<State>& set) {
  std::set<State> in(set.begin(), set.end());
  if (set.size() == 1) {
    for (Symbol a = 0; a < s.alphabet().size(); ++a)
      if (s.step(set[0], a) == set[0]) return true;
    return false;
  }
  for (State from : set) {
    std::set<State> reach;
    std::vector<State> stack{from};
    while (!stack.empty()) {
      State q = stack.back();
      stack.pop_back();
      for (Symbol a = 0; a < s.alphabet().size(); ++a) {
        State t = s.step(q, a);
        if (in.count(t) && !reach.count(t)) {
          reach.insert(t);
          stack.push_back(t);
        }
      }
    }
    for (State to : set)
      if (!reach.count(to)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("alphabet validation") {
  CHECK_THROWS_AS(Alphabet({}), InputError);
  CHECK_THROWS_AS(Alphabet({"a", "a"}), InputError);
  CHECK_THROWS_AS(Alphabet({""}), InputError);
  Alphabet ab({"a", "b"});
  CHECK(ab.index("b") == 1);
  CHECK_THROWS_AS(ab.index("c"), InputError);
  CHECK(ab.format(ab.parse("abba")) == "abba");
}

TEST_CASE("structures must be complete") {
  Alphabet ab({"a", "b"});
  CHECK_THROWS_AS(AutomatonStructure(ab, 2, 0, {{1, 0}}), InputError);
  CHECK_THROWS_AS(AutomatonStructure(ab, 2, 0, {{1}, {0, 1}}), InputError);
  CHECK_THROWS_AS(AutomatonStructure(ab, 2, 0, {{1, 2}, {0, 1}}), InputError);
  CHECK_THROWS_AS(AutomatonStructure(ab, 2, 5, {{1, 0}, {0, 1}}), InputError);
}

TEST_CASE("finite runs") {
  OmegaAutomaton m = fixtures::dma_inf_aa_fin_bb();
  const AutomatonStructure& s = m.structure;
  const Alphabet& sigma = s.alphabet();
  CHECK(s.run(0, w(sigma, "b")) == 2);
  CHECK(s.run(3, Word{}) == 3);
  CHECK(s.run(0, w(sigma, "baab")) == 2);

  // run(q, xy) == run(run(q, x), y)
  for (State q = 0; q < s.state_count(); ++q)
    for (const Word& x : enumerate_words(2, 0, 3))
      for (const Word& y : enumerate_words(2, 0, 3)) {
        Word xy = x;
        xy.insert(xy.end(), y.begin(), y.end());
        CHECK(s.run(q, xy) == s.run(s.run(q, x), y));
      }
}

TEST_CASE("scc decomposition of the five-state fixture") {
  OmegaAutomaton m = fixtures::dma_inf_aa_fin_bb();
  SccDecomposition d = sccs(m.structure);
  REQUIRE(d.components.size() == 2);
  // initial state is transient, the rest is one MSCC
  int c0 = d.component_of[0];
  CHECK_FALSE(d.proper[c0]);
  CHECK(d.components[c0] == std::vector<State>{0});
  int big = d.component_of[1];
  CHECK(d.proper[big]);
  CHECK(d.components[big] == std::vector<State>{1, 2, 3, 4});
  // topological order: edges go forward
  for (size_t c = 0; c < d.condensation.size(); ++c)
    for (int succ : d.condensation[c]) CHECK(succ > static_cast<int>(c));
  CHECK_FALSE(is_scc(m.structure, {2, 3}));
}

TEST_CASE("scc singleton needs a self-loop") {
  OmegaAutomaton m = fixtures::dma_inf_aa_fin_bb();
  CHECK(is_scc(m.structure, {3}));
  CHECK(is_scc(m.structure, {4}));
  CHECK_FALSE(is_scc(m.structure, {0}));
  CHECK(is_scc(m.structure, {1, 2}));

  OmegaAutomaton all = fixtures::dba_all_words();
  SccDecomposition d = sccs(all.structure);
  REQUIRE(d.components.size() == 1);
  CHECK(d.proper[0]);
}

TEST_CASE("is_scc agrees with the brute-force oracle") {
  for (const auto& [name, m] : fixtures::property_languages()) {
    const AutomatonStructure& s = m.structure;
    int n = s.state_count();
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      std::vector<State> subset;
      for (int i = 0; i < n; ++i)
        if (mask >> i & 1) subset.push_back(i);
      if (subset.size() > 4) continue;
      CAPTURE(name);
      CHECK(is_scc(s, subset) == brute_scc(s, subset));
    }
  }
}

TEST_CASE("products") {
  OmegaAutomaton m = fixtures::dma_inf_aa_fin_bb();
  SUBCASE("self-product of a deterministic machine stays diagonal") {
    Product p = product(m.structure, m.structure);
    CHECK(p.structure.state_count() == m.structure.reachable_states().size());
    for (State q = 0; q < p.structure.state_count(); ++q)
      CHECK(p.projections[0][q] == p.projections[1][q]);
  }
  SUBCASE("projections compose homomorphically") {
    Fdfa f = fixtures::fdfa_n_inf_b_even_b();
    Product p = product(f.leading, f.progress[0].structure);
    CHECK(p.structure.state_count() <= 6);
    CHECK(p.structure.state_count() == 3);
    for (State q = 0; q < p.structure.state_count(); ++q)
      for (Symbol a = 0; a < 2; ++a) {
        State t = p.structure.step(q, a);
        CHECK(p.projections[0][t] == f.leading.step(p.projections[0][q], a));
        CHECK(p.projections[1][t] == f.progress[0].structure.step(p.projections[1][q], a));
      }
  }
  SUBCASE("alphabet mismatch is rejected") {
    AutomatonStructure other(Alphabet({"x", "y"}), 1, 0, {{0, 0}});
    CHECK_THROWS_AS(product(m.structure, other), InputError);
  }
}

TEST_CASE("moore minimization") {
  Alphabet ab({"a", "b"});
  SUBCASE("constant output collapses to one state") {
    AutomatonStructure s(ab, 4, 0, {{1, 2}, {3, 0}, {0, 3}, {2, 1}});
    MooreMinimization m = minimize_moore(s, {7, 7, 7, 7});
    CHECK(m.structure.state_count() == 1);
    CHECK(m.output == std::vector<int>{7});
  }
  SUBCASE("accepting-bit output gives the classical minimal DFA") {
    // two redundant copies of a two-state parity counter
    AutomatonStructure s(ab, 4, 0, {{1, 1}, {2, 2}, {3, 3}, {2, 2}});
    Dfa d(s, {false, true, false, true});
    Dfa m = minimize_dfa(d);
    CHECK(m.state_count() == 2);
    for (const Word& v : enumerate_words(2, 0, 5)) CHECK(m.accepts(v) == d.accepts(v));
  }
  SUBCASE("ten-state progress fixture minimizes to an equivalent machine") {
    Dfa p = fixtures::fdfa_n_inf_aa_fin_bb().progress[0];
    Dfa m = minimize_dfa(p);
    CHECK(m.state_count() <= p.state_count());
    CHECK(m.state_count() == 10);  // already minimal
    for (const Word& v : enumerate_words(2, 0, 7)) CHECK(m.accepts(v) == p.accepts(v));
  }
  SUBCASE("no two distinct quotient states are equivalent") {
    for (const auto& [name, lang] : fixtures::property_languages()) {
      std::vector<int> output(lang.structure.state_count());
      for (State q = 0; q < lang.structure.state_count(); ++q) output[q] = q % 2;
      MooreMinimization m = minimize_moore(lang.structure, output);
      for (State s = 0; s < m.structure.state_count(); ++s)
        for (State t = s + 1; t < m.structure.state_count(); ++t) {
          bool distinguished = false;
          for (const Word& z : enumerate_words(2, 0, m.structure.state_count()))
            if (m.output[m.structure.run(s, z)] != m.output[m.structure.run(t, z)]) {
              distinguished = true;
              break;
            }
          CAPTURE(name);
          CHECK(distinguished);
        }
    }
  }
  SUBCASE("designated initial state never merges") {
    AutomatonStructure s(ab, 2, 0, {{1, 1}, {1, 1}});
    MooreMinimization keep = minimize_moore(s, {0, 0}, /*respect_initial_output=*/false);
    CHECK(keep.structure.state_count() == 2);
    MooreMinimization merge = minimize_moore(s, {0, 0}, /*respect_initial_output=*/true);
    CHECK(merge.structure.state_count() == 1);
  }
}

TEST_CASE("dfa views") {
  Fdfa f = fixtures::fdfa_n_inf_b_even_b();
  Dfa p = f.progress[0];
  const Alphabet& sigma = p.structure.alphabet();
  SUBCASE("words reaching the initial state include the empty word") {
    Dfa reach = dfa_reaching(p, p.structure.initial());
    CHECK(reach.accepts(Word{}));
  }
  SUBCASE("from-q composed with reaching-q accepts the empty word") {
    Dfa view = dfa_between(p, 2, 2);
    CHECK(view.accepts(Word{}));
  }
  SUBCASE("loop words between a state and itself") {
    Dfa view = dfa_between(p, 1, 1);
    CHECK(view.accepts(w(sigma, "a")));
    CHECK_FALSE(view.accepts(w(sigma, "b")));
    CHECK(view.accepts(w(sigma, "bb")));
  }
}

TEST_CASE("canonical form equality is isomorphism") {
  Fdfa f = fixtures::fdfa_duo_inf_aa_fin_bb();
  // renumber the progress by swapping two states; canonical forms agree
  const AutomatonStructure& s = f.progress[0].structure;
  std::vector<State> perm{0, 2, 1, 3, 4, 5};
  std::vector<State> inv(perm.size());
  for (size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = static_cast<State>(i);
  std::vector<std::vector<State>> delta(s.state_count(), std::vector<State>(2));
  for (State q = 0; q < s.state_count(); ++q)
    for (Symbol a = 0; a < 2; ++a) delta[perm[q]][a] = perm[s.step(q, a)];
  AutomatonStructure renamed(s.alphabet(), s.state_count(), perm[s.initial()], std::move(delta));
  CHECK(canonical_form(s) == canonical_form(renamed));
}
