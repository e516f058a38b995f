#include <doctest.h>

#include "omegacanon/fixtures.hpp"
#include "omegacanon/periodic.hpp"
#include "omegacanon/persistent.hpp"

using namespace omegacanon;

namespace {

Word w(const Fdfa& f, const std::string& text) { return f.leading.alphabet().parse(text); }

}  // namespace

TEST_CASE("vector-state machine basics") {
  SUBCASE("the universal language has a single significant accepting region") {
    Fdfa f = fixtures::fdfa_all_words();
    PersistentDfa p(f, 0, Limits{});
    // every nonempty word maps both progress states to the sink
    State s = p.run_word(w(f, "a"));
    CHECK(p.significant(s));
    CHECK(p.accepting(s));
    CHECK(p.run_word(w(f, "ba")) == s);
  }
  SUBCASE("a word into the rejecting sink is significant") {
    Fdfa f = fixtures::fdfa_duo_inf_aa_fin_bb();
    PersistentDfa p(f, 0, Limits{});
    State s = p.run_word(w(f, "bb"));
    CHECK(p.significant(s));
    CHECK_FALSE(p.accepting(s));
  }
  SUBCASE("an entry off every cycle makes the state insignificant") {
    Fdfa f = fixtures::fdfa_duo_inf_aa();
    PersistentDfa p(f, 0, Limits{});
    // "a" maps the b-region state 2 to 3, and 3 never returns to itself
    State s = p.run_word(w(f, "a"));
    CHECK_FALSE(p.significant(s));
    CHECK(p.vector_of(s).entries[2] == 3);
  }
  SUBCASE("vector-state cap raises a capacity error") {
    Limits tiny;
    tiny.vector_state_cap = 2;
    CHECK_THROWS_AS(PersistentDfa(fixtures::fdfa_duo_inf_aa_fin_bb(), 0, tiny), CapacityError);
  }
}

TEST_CASE("persistence agrees with the normalization route") {
  for (Fdfa f : {fixtures::fdfa_duo_inf_aa_fin_bb(), fixtures::fdfa_duo_inf_aa(),
                 fixtures::fdfa_duo_inf_b_even_b()}) {
    for (const Word& u : enumerate_words(2, 0, 2))
      for (const Word& v : enumerate_words(2, 1, 4))
        CHECK(is_persistent(f, u, v) == is_normalized(f, u, v, NormalizationKind::Persistent));
  }
}

TEST_CASE("specific persistent pairs") {
  Fdfa fc = fixtures::fdfa_duo_inf_aa_fin_bb();
  CHECK(is_persistent(fc, {}, w(fc, "bb")));
  Fdfa inf_aa = fixtures::fdfa_duo_inf_aa();
  // duo-normalized but not weakly normalized from the b-region state
  CHECK(is_normalized(inf_aa, {}, w(inf_aa, "a"), NormalizationKind::DuoNormalized));
  CHECK_FALSE(is_persistent(inf_aa, {}, w(inf_aa, "a")));
}

TEST_CASE("diameter measures") {
  CHECK(diameter(fixtures::fdfa_duo_inf_aa_fin_bb()) == DiameterMeasure{2, 3});
  CHECK(diameter(fixtures::fdfa_n_inf_aa_fin_bb()) == DiameterMeasure{2, 3});
  CHECK(diameter(periodic_fdfa(fixtures::dma_inf_aa_fin_bb())) == DiameterMeasure{2, 3});
  CHECK(diameter(fixtures::fdfa_duo_inf_aa()) == DiameterMeasure{1, 2});
  CHECK(diameter(fixtures::fdfa_all_words()) == DiameterMeasure{1, 0});
  CHECK(diameter(fixtures::fdfa_n_inf_b_even_b()) ==
        diameter(fixtures::fdfa_duo_inf_b_even_b()));
}

TEST_CASE("persistent chains") {
  Fdfa fc = fixtures::fdfa_duo_inf_aa_fin_bb();
  SUBCASE("negative chain of length three") {
    auto chain = persistent_chain_witness(fc, Polarity::Negative, 3);
    REQUIRE(chain.has_value());
    REQUIRE(chain->periods.size() == 3);
    bool expect = false;
    for (size_t i = 0; i < 3; ++i) {
      const Word& v = chain->periods[i];
      CHECK(is_persistent(fc, chain->leading_word, v));
      CHECK(accepts(fc, UPWord(chain->leading_word, v)) == expect);
      if (i > 0) {  // strict prefix growth
        const Word& prev = chain->periods[i - 1];
        REQUIRE(v.size() > prev.size());
        CHECK(std::equal(prev.begin(), prev.end(), v.begin()));
      }
      expect = !expect;
    }
  }
  SUBCASE("no negative chain of length four") {
    CHECK_FALSE(persistent_chain_witness(fc, Polarity::Negative, 4).has_value());
  }
  SUBCASE("positive length one exists for a nonempty language") {
    auto chain = persistent_chain_witness(fc, Polarity::Positive, 1);
    REQUIRE(chain.has_value());
    CHECK(accepts(fc, UPWord(chain->leading_word, chain->periods[0])));
  }
  SUBCASE("bounds for the three-state acceptor of infinitely many aa") {
    Fdfa inf_aa = fixtures::fdfa_duo_inf_aa();
    CHECK(persistent_chain_witness(inf_aa, Polarity::Negative, 2).has_value());
    CHECK_FALSE(persistent_chain_witness(inf_aa, Polarity::Negative, 3).has_value());
    CHECK_FALSE(persistent_chain_witness(inf_aa, Polarity::Positive, 2).has_value());
  }
}

TEST_CASE("persistent pairs are reliable for acceptance") {
  Fdfa fc = fixtures::fdfa_duo_inf_aa_fin_bb();
  for (const Word& u : enumerate_words(2, 0, 2))
    for (const Word& v : enumerate_words(2, 1, 4)) {
      if (!is_persistent(fc, u, v)) continue;
      bool base = accepts(fc, UPWord(u, v));
      Word vi = v;
      for (int i = 2; i <= 4; ++i) {
        vi.insert(vi.end(), v.begin(), v.end());
        CHECK(accepts(fc, UPWord(u, vi)) == base);
      }
    }
}

TEST_CASE("diameter is robust across representations of one language") {
  OmegaAutomaton m = fixtures::dpa_inf_b_even_b();
  DiameterMeasure d1 = diameter(fixtures::fdfa_n_inf_b_even_b());
  DiameterMeasure d2 = diameter(fixtures::fdfa_duo_inf_b_even_b());
  DiameterMeasure d3 = diameter(periodic_fdfa(m));
  CHECK(d1 == d2);
  CHECK(d2 == d3);
}
