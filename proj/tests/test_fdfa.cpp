#include <doctest.h>

#include "omegacanon/fixtures.hpp"
#include "omegacanon/periodic.hpp"

using namespace omegacanon;

namespace {

UPWord up(const Fdfa& f, const std::string& u, const std::string& v) {
  const Alphabet& sigma = f.leading.alphabet();
  return UPWord(sigma.parse(u), sigma.parse(v));
}

Word w(const Fdfa& f, const std::string& text) { return f.leading.alphabet().parse(text); }

}  // namespace

TEST_CASE("normalization kinds") {
  Fdfa f1 = fixtures::fdfa_n_inf_b_even_b();
  CHECK(is_normalized(f1, w(f1, ""), w(f1, "a"), NormalizationKind::Normalized));

  Fdfa f2 = fixtures::fdfa_duo_inf_b_even_b();
  CHECK(is_normalized(f2, w(f2, ""), w(f2, "aa"), NormalizationKind::DuoNormalized));
  CHECK_FALSE(is_normalized(f2, w(f2, ""), w(f2, "a"), NormalizationKind::DuoNormalized));
  CHECK(is_normalized(f2, w(f2, ""), w(f2, "a"), NormalizationKind::Normalized));

  Fdfa inf_aa = fixtures::fdfa_duo_inf_aa();
  for (const char* v : {"a", "ab", "abaa"})
    CHECK(is_normalized(inf_aa, w(inf_aa, ""), w(inf_aa, v), NormalizationKind::DuoNormalized));

  // exact is vacuous
  CHECK(is_normalized(f2, w(f2, "ab"), w(f2, "b"), NormalizationKind::Exact));
}

TEST_CASE("normalize returns the least decomposition") {
  Fdfa f2 = fixtures::fdfa_duo_inf_b_even_b();
  SUBCASE("already duo-normalized input is unchanged") {
    UPWord in = up(f2, "", "aa");
    CHECK(normalize(f2, in, NormalizationKind::DuoNormalized) == in);
  }
  SUBCASE("a^omega needs the doubled period") {
    CHECK(normalize(f2, up(f2, "", "a"), NormalizationKind::DuoNormalized) == up(f2, "", "aa"));
  }
  SUBCASE("search over spoke extensions and period powers") {
    Fdfa fc = fixtures::fdfa_duo_inf_aa_fin_bb();
    UPWord n = normalize(fc, up(fc, "b", "ab"), NormalizationKind::DuoNormalized);
    CHECK(is_normalized(fc, n.spoke, n.cycle, NormalizationKind::DuoNormalized));
    CHECK(canonical_up(n) == canonical_up(up(fc, "b", "ab")));
    CHECK(n == up(fc, "b", "ab"));  // (i, j) = (0, 1) is already least
  }
}

TEST_CASE("acceptance by mode") {
  Fdfa f1 = fixtures::fdfa_n_inf_b_even_b();
  CHECK(accepts(f1, up(f1, "", "a")));

  Fdfa f2 = fixtures::fdfa_duo_inf_b_even_b();
  CHECK_FALSE(accepts(with_mode(f2, AcceptanceMode::Normalized), up(f2, "", "a")));
  CHECK(accepts(f2, up(f2, "", "a")));

  Fdfa fc = fixtures::fdfa_duo_inf_aa_fin_bb();
  CHECK_FALSE(accepts(fc, up(fc, "", "bb")));
}

TEST_CASE("complement flips membership pointwise") {
  Fdfa f2 = fixtures::fdfa_duo_inf_b_even_b();
  Fdfa comp = complement(f2);
  CHECK_FALSE(accepts(comp, up(f2, "", "a")));  // f2 accepts a^omega
  CHECK(accepts(comp, up(f2, "b", "a")));
  SUBCASE("involution") {
    Fdfa twice = complement(complement(f2));
    for (int q = 0; q < f2.leading_states(); ++q)
      CHECK(twice.progress[q].accepting == f2.progress[q].accepting);
  }
  SUBCASE("complement of the periodic fixture accepts the rejected word") {
    Fdfa p = with_mode(periodic_fdfa(fixtures::dma_inf_aa_fin_bb()),
                       AcceptanceMode::DuoNormalized);
    CHECK(accepts(complement(p), up(p, "", "bb")));
  }
}

TEST_CASE("intersection matches the conjunction of the factor languages") {
  OmegaAutomaton dma = fixtures::dma_inf_aa_fin_bb();
  Fdfa f_inf_aa = with_mode(periodic_fdfa(fixtures::dba_inf_aa()), AcceptanceMode::DuoNormalized);
  Fdfa f_fin_bb = with_mode(periodic_fdfa(fixtures::dca_fin_bb()), AcceptanceMode::DuoNormalized);
  Fdfa both = intersect(f_inf_aa, f_fin_bb);
  for (const Word& u : enumerate_words(2, 0, 2))
    for (const Word& v : enumerate_words(2, 1, 4))
      CHECK(accepts(both, UPWord(u, v)) == accepts_up(dma, UPWord(u, v)));
  SUBCASE("mode mismatch is an input error") {
    CHECK_THROWS_AS(intersect(f_inf_aa, fixtures::fdfa_n_inf_b_even_b()), InputError);
  }
}

TEST_CASE("de morgan on sampled words") {
  Fdfa f1 = with_mode(fixtures::fdfa_n_inf_aa_fin_bb(), AcceptanceMode::DuoNormalized);
  Fdfa f2 = fixtures::fdfa_duo_inf_aa();
  Fdfa inter = intersect(f1, f2);
  Fdfa uni = unite(f1, f2);
  for (const Word& u : enumerate_words(2, 0, 2))
    for (const Word& v : enumerate_words(2, 1, 4)) {
      UPWord word(u, v);
      bool a = accepts(f1, word);
      bool b = accepts(f2, word);
      CHECK(accepts(inter, word) == (a && b));
      CHECK(accepts(uni, word) == (a || b));
      CHECK(accepts(complement(f1), word) == !a);
    }
}

TEST_CASE("emptiness") {
  SUBCASE("all-rejecting progress is empty") {
    Fdfa f = fixtures::fdfa_all_words();
    for (Dfa& p : f.progress) p.accepting.assign(p.state_count(), false);
    CHECK_FALSE(is_empty(f).has_value());
  }
  SUBCASE("complement of the universal fdfa is empty") {
    CHECK_FALSE(is_empty(complement(fixtures::fdfa_all_words())).has_value());
  }
  SUBCASE("witness replays through acceptance and the source automaton") {
    Fdfa fc = fixtures::fdfa_duo_inf_aa_fin_bb();
    auto witness = is_empty(fc);
    REQUIRE(witness.has_value());
    CHECK(accepts(fc, *witness));
    CHECK(accepts_up(fixtures::dma_inf_aa_fin_bb(), *witness));
  }
}

TEST_CASE("universality and containment") {
  Fdfa all = fixtures::fdfa_all_words();
  Fdfa fc = fixtures::fdfa_duo_inf_aa_fin_bb();
  CHECK(is_universal(all).holds);
  CHECK_FALSE(is_universal(fc).holds);
  CHECK(contains(all, fc).holds);
  CheckResult not_contained = contains(fc, all);
  CHECK_FALSE(not_contained.holds);
  REQUIRE(not_contained.witness.has_value());
  CHECK(accepts(with_mode(all, AcceptanceMode::DuoNormalized), *not_contained.witness));
  CHECK_FALSE(accepts(fc, *not_contained.witness));
}

TEST_CASE("equivalence") {
  Fdfa fs = fixtures::fdfa_n_inf_aa_fin_bb();
  Fdfa fc = fixtures::fdfa_duo_inf_aa_fin_bb();
  CHECK(equivalent(fs, fs).holds);
  CHECK(equivalent(fs, fc).holds);  // normalized vs duo-normalized mode
  CHECK_FALSE(equivalent(fs, fixtures::fdfa_duo_inf_aa()).holds);
}

TEST_CASE("bounded saturation check") {
  SUBCASE("periodic fdfa of the five-state fixture is saturated") {
    Fdfa f = periodic_fdfa(fixtures::dma_inf_aa_fin_bb());
    CHECK_FALSE(check_saturation_bounded(f, 3, 4).has_value());
  }
  SUBCASE("the gadget is caught, and both decompositions denote one word") {
    Fdfa g = fixtures::fdfa_unsaturated_gadget();
    auto counterexample = check_saturation_bounded(g, 2, 4);
    REQUIRE(counterexample.has_value());
    CHECK(canonical_up(counterexample->accepted_as) == canonical_up(counterexample->rejected_as));
    CHECK(g.progress_of_word(counterexample->accepted_as.spoke)
              .accepts(counterexample->accepted_as.cycle));
    CHECK_FALSE(g.progress_of_word(counterexample->rejected_as.spoke)
                    .accepts(counterexample->rejected_as.cycle));
  }
  SUBCASE("one-letter alphabet is trivially saturated") {
    Alphabet a({"a"});
    AutomatonStructure lead(a, 1, 0, {{0}});
    Dfa prog(AutomatonStructure(a, 2, 0, {{1}, {1}}), {false, true});
    Fdfa f(lead, {prog}, AcceptanceMode::DuoNormalized);
    CHECK_FALSE(check_saturation_bounded(f, 2, 3).has_value());
  }
  SUBCASE("bounds are validated") {
    CHECK_THROWS_AS(check_saturation_bounded(fixtures::fdfa_all_words(), 0, 3), InputError);
  }
}

TEST_CASE("persistent-mode acceptance equals duo-normalized acceptance") {
  Fdfa f2 = fixtures::fdfa_duo_inf_b_even_b();
  CHECK(accepts_persistent_mode(f2, up(f2, "", "a")));
  Fdfa fc = fixtures::fdfa_duo_inf_aa_fin_bb();
  CHECK_FALSE(accepts_persistent_mode(fc, up(fc, "", "bb")));
  for (const Word& u : enumerate_words(2, 0, 2))
    for (const Word& v : enumerate_words(2, 1, 4))
      CHECK(accepts_persistent_mode(fc, UPWord(u, v)) == accepts(fc, UPWord(u, v)));
}
