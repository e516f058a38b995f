#include <doctest.h>

#include "omegacanon/fixtures.hpp"
#include "omegacanon/periodic.hpp"

using namespace omegacanon;

namespace {

UPWord up(const Alphabet& sigma, const std::string& u, const std::string& v) {
  return UPWord(sigma.parse(u), sigma.parse(v));
}

}  // namespace

TEST_CASE("lasso membership on the five-state fixture") {
  OmegaAutomaton m = fixtures::dma_inf_aa_fin_bb();
  const Alphabet& sigma = m.structure.alphabet();
  CHECK(accepts_up(m, up(sigma, "", "abaa")));
  CHECK_FALSE(accepts_up(m, up(sigma, "", "b")));
  CHECK_FALSE(accepts_up(m, up(sigma, "", "ab")));

  // whole table against the semantic definition: aa in vv and bb not in vv
  for (const Word& v : enumerate_words(2, 1, 6)) {
    Word vv = v;
    vv.insert(vv.end(), v.begin(), v.end());
    std::string text = sigma.format(vv);
    bool expected = text.find("aa") != std::string::npos && text.find("bb") == std::string::npos;
    CAPTURE(sigma.format(v));
    CHECK(accepts_up(m, UPWord({}, v)) == expected);
  }
}

TEST_CASE("lasso membership is invariant under representation changes") {
  for (const auto& [name, m] : fixtures::property_languages()) {
    const Alphabet& sigma = m.structure.alphabet();
    for (const Word& u : enumerate_words(2, 0, 2))
      for (const Word& v : enumerate_words(2, 1, 3)) {
        UPWord word(u, v);
        bool base = accepts_up(m, word);
        CAPTURE(name);
        CHECK(accepts_up(m, canonical_up(word)) == base);
        Word uv = u;
        uv.insert(uv.end(), v.begin(), v.end());
        CHECK(accepts_up(m, UPWord(uv, v)) == base);
        Word vk = v;
        for (int k = 2; k <= 4; ++k) {
          vk.insert(vk.end(), v.begin(), v.end());
          CHECK(accepts_up(m, UPWord(u, vk)) == base);
        }
      }
    (void)sigma;
  }
}

TEST_CASE("accepting sccs") {
  OmegaAutomaton m = fixtures::dma_inf_aa_fin_bb();
  CHECK(accepting_scc(m, {1, 2, 3}));
  CHECK_FALSE(accepting_scc(m, {1, 2}));
  CHECK_THROWS_AS(accepting_scc(m, {2, 3}), InputError);

  OmegaAutomaton b = fixtures::dba_inf_aa();
  CHECK(accepting_scc(b, {0, 1, 2}));
  CHECK_FALSE(accepting_scc(b, {0}));
}

TEST_CASE("state equivalence") {
  SUBCASE("reflexive and total on the one-class language") {
    OmegaAutomaton m = fixtures::dma_inf_aa_fin_bb();
    for (State q1 = 0; q1 < 5; ++q1)
      for (State q2 = 0; q2 < 5; ++q2) CHECK(state_equiv(m, q1, q2));
  }
  SUBCASE("the b-parity language distinguishes its residuals") {
    OmegaAutomaton m = fixtures::dpa_inf_b_even_b();
    State q_eps = m.structure.run(Word{});
    State q_b = m.structure.run(m.structure.alphabet().parse("b"));
    CHECK_FALSE(state_equiv(m, q_eps, q_b));
    // a^omega distinguishes them explicitly
    OmegaAutomaton from_eps(m.structure, m.acceptance);
    CHECK(accepts_up(m, UPWord({}, m.structure.alphabet().parse("a"))));
    CHECK_FALSE(accepts_up(m, up(m.structure.alphabet(), "b", "a")));
  }
  SUBCASE("equivalence relation on every fixture") {
    for (const auto& [name, m] : fixtures::property_languages()) {
      int n = m.structure.state_count();
      for (State a = 0; a < n; ++a)
        for (State b = 0; b < n; ++b) {
          CHECK(state_equiv(m, a, a));
          CHECK(state_equiv(m, a, b) == state_equiv(m, b, a));
          for (State c = 0; c < n; ++c)
            if (state_equiv(m, a, b) && state_equiv(m, b, c)) CHECK(state_equiv(m, a, c));
        }
    }
  }
}

TEST_CASE("leading congruence") {
  CHECK(leading_congruence(fixtures::dma_inf_aa_fin_bb()).structure.state_count() == 1);
  CHECK(leading_congruence(fixtures::dba_all_words()).structure.state_count() == 1);
  LeadingCongruence l = leading_congruence(fixtures::dpa_inf_b_even_b());
  REQUIRE(l.structure.state_count() == 2);
  // b toggles, a self-loops
  CHECK(l.structure.step(0, 0) == 0);
  CHECK(l.structure.step(0, 1) == 1);
  CHECK(l.structure.step(1, 0) == 1);
  CHECK(l.structure.step(1, 1) == 0);

  // words in one class agree on all sampled infinite tails
  OmegaAutomaton m = fixtures::dpa_inf_b_even_b();
  for (const Word& x : enumerate_words(2, 0, 3))
    for (const Word& y : enumerate_words(2, 0, 3)) {
      if (l.class_of_word(x) != l.class_of_word(y)) continue;
      for (const Word& z1 : enumerate_words(2, 0, 2))
        for (const Word& z2 : enumerate_words(2, 1, 2)) {
          Word xs = x, ys = y;
          xs.insert(xs.end(), z1.begin(), z1.end());
          ys.insert(ys.end(), z1.begin(), z1.end());
          CHECK(accepts_up(m, UPWord(xs, z2)) == accepts_up(m, UPWord(ys, z2)));
        }
    }
}

TEST_CASE("canonical forms of ultimately periodic words") {
  Alphabet sigma({"a", "b"});
  CHECK(canonical_up(up(sigma, "", "aa")) == up(sigma, "", "a"));
  CHECK(canonical_up(up(sigma, "ab", "ab")) == up(sigma, "", "ab"));
  CHECK(canonical_up(up(sigma, "a", "ba")) == up(sigma, "", "ab"));
  // canonical forms are equal iff the unrollings agree
  for (const Word& u1 : enumerate_words(2, 0, 2))
    for (const Word& v1 : enumerate_words(2, 1, 3))
      for (const Word& u2 : enumerate_words(2, 0, 2))
        for (const Word& v2 : enumerate_words(2, 1, 3)) {
          UPWord w1(u1, v1), w2(u2, v2);
          auto unroll = [](const UPWord& w, int len) {
            Word out = w.spoke;
            while (static_cast<int>(out.size()) < len)
              out.insert(out.end(), w.cycle.begin(), w.cycle.end());
            out.resize(len);
            return out;
          };
          int len = 2 * (3 + 3 + 2);
          bool same_word = unroll(w1, len) == unroll(w2, len);
          CHECK((canonical_up(w1) == canonical_up(w2)) == same_word);
        }
}

TEST_CASE("periodic progress DFA") {
  SUBCASE("all words: accepting sink plus the empty-word state") {
    OmegaAutomaton m = fixtures::dba_all_words();
    LeadingCongruence l = leading_congruence(m);
    Dfa p = periodic_progress_dfa(m, l, 0);
    CHECK(p.state_count() == 2);
    CHECK_FALSE(p.accepts(Word{}));
    for (const Word& v : enumerate_words(2, 1, 4)) CHECK(p.accepts(v));
  }
  SUBCASE("five-state fixture periods") {
    OmegaAutomaton m = fixtures::dma_inf_aa_fin_bb();
    LeadingCongruence l = leading_congruence(m);
    Dfa p = periodic_progress_dfa(m, l, 0);
    const Alphabet& sigma = m.structure.alphabet();
    CHECK(p.accepts(sigma.parse("aa")));
    CHECK_FALSE(p.accepts(sigma.parse("b")));
    CHECK(p.state_count() == 10);
    // membership agrees with lasso acceptance for every short period
    for (const Word& v : enumerate_words(2, 1, 6))
      CHECK(p.accepts(v) == accepts_up(m, UPWord({}, v)));
  }
  SUBCASE("membership matches the lasso oracle for every class") {
    for (const auto& [name, m] : fixtures::property_languages()) {
      LeadingCongruence l = leading_congruence(m);
      for (int c = 0; c < l.structure.state_count(); ++c) {
        Dfa p = periodic_progress_dfa(m, l, c);
        // find a representative automaton state of the class
        State rep = -1;
        for (State q = 0; q < m.structure.state_count(); ++q)
          if (l.class_of[q] == c) rep = q;
        REQUIRE(rep >= 0);
        OmegaAutomaton from_rep(
            AutomatonStructure(m.structure.alphabet(), m.structure.state_count(), rep,
                               [&] {
                                 std::vector<std::vector<State>> d(m.structure.state_count());
                                 for (State q = 0; q < m.structure.state_count(); ++q)
                                   for (Symbol a = 0; a < 2; ++a)
                                     d[q].push_back(m.structure.step(q, a));
                                 return d;
                               }()),
            m.acceptance);
        for (const Word& v : enumerate_words(2, 1, 5)) {
          CAPTURE(name);
          CHECK(p.accepts(v) == accepts_up(from_rep, UPWord({}, v)));
        }
      }
    }
  }
}

TEST_CASE("periodic fdfa") {
  SUBCASE("all words") {
    Fdfa f = periodic_fdfa(fixtures::dba_all_words());
    CHECK(f.leading_states() == 1);
    CHECK(f.progress[0].state_count() == 2);
    CHECK(f.mode == AcceptanceMode::Exact);
  }
  SUBCASE("two leading states for the b-parity language") {
    Fdfa f = periodic_fdfa(fixtures::dpa_inf_b_even_b());
    CHECK(f.leading_states() == 2);
  }
  SUBCASE("agrees with the automaton on sampled words") {
    OmegaAutomaton m = fixtures::dma_inf_aa_fin_bb();
    Fdfa f = periodic_fdfa(m);
    for (const Word& u : enumerate_words(2, 0, 3))
      for (const Word& v : enumerate_words(2, 1, 5))
        CHECK(accepts(f, UPWord(u, v)) == accepts_up(m, UPWord(u, v)));
  }
}
