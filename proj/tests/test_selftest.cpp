#include <doctest.h>

#include "omegacanon/fdfa.hpp"
#include "omegacanon/fixtures.hpp"
#include "omegacanon/selftest.hpp"

using namespace omegacanon;

TEST_CASE("property suites pass on the fixture languages") {
  std::vector<Violation> violations = run_property_suites();
  for (const Violation& v : violations)
    MESSAGE(v.language, ": ", v.property, " [", v.witness, "]");
  CHECK(violations.empty());
}

TEST_CASE("the injected bug is detected with a replayable witness") {
  std::vector<Violation> violations = run_injected_bug_check();
  REQUIRE(violations.size() == 1);
  CHECK(violations[0].property == "saturation-violation");
  // replay: the two decompositions denote one word and disagree
  Fdfa g = fixtures::fdfa_unsaturated_gadget();
  auto counterexample = check_saturation_bounded(g, 2, 5);
  REQUIRE(counterexample.has_value());
  CHECK(canonical_up(counterexample->accepted_as) == canonical_up(counterexample->rejected_as));
}

TEST_CASE("bounds are validated") {
  SelftestBounds zero;
  zero.max_u = 0;
  CHECK_THROWS_AS(run_property_suites(zero), InputError);
}
