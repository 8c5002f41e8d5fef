#include "properties.hpp"

#include <doctest.h>

namespace {

void check(const props::Tally& t, long min_cases) {
    CHECK(t.cases >= min_cases);
    for (const auto& f : t.failures) FAIL_CHECK(f);
}

} // namespace

TEST_CASE("mutation involutivity") { check(props::mutation_involutivity(101, 400), 400); }

TEST_CASE("knit then verify") { check(props::knit_then_verify(102, 300), 300); }

TEST_CASE("belt values are positive Laurent polynomials") { check(props::belt_positivity(3), 100); }

TEST_CASE("semiring axioms") { check(props::semiring_axioms(103, 500), 500); }
