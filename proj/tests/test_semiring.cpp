#include "oracles.hpp"

#include "yfrieze/errors.hpp"
#include "yfrieze/semiring.hpp"

#include <doctest.h>

using namespace yfrieze;

namespace {

SemiringValue random_value(std::mt19937_64& rng, const SemiringId& s) {
    std::uniform_int_distribution<long> d(1, 20), t(-20, 20);
    switch (s.kind) {
    case SemiringKind::zpos: return SemiringValue::integer(s, d(rng));
    case SemiringKind::tropn: return SemiringValue::integer(s, d(rng) - 1);
    case SemiringKind::trop: return SemiringValue::integer(s, t(rng));
    case SemiringKind::qpos: return SemiringValue::rational(oracle::random_positive_rational(rng, 20));
    case SemiringKind::universal: {
        const auto x = RationalFn::variable(s.nvars, static_cast<std::size_t>(d(rng)) % s.nvars);
        return SemiringValue::expression(RationalFn::constant(s.nvars, oracle::random_positive_rational(rng)) * x);
    }
    }
    return sr_one(s);
}

} // namespace

TEST_CASE("semiring axioms on every carrier") {
    std::mt19937_64 rng(19);
    for (const auto& s : {SemiringId::zpos(), SemiringId::qpos(), SemiringId::tropn(), SemiringId::trop(),
                          SemiringId::universal(2)}) {
        CAPTURE(s.name());
        for (int trial = 0; trial < 60; ++trial) {
            const auto a = random_value(rng, s), b = random_value(rng, s), c = random_value(rng, s);
            CHECK(sr_add(a, b) == sr_add(b, a));
            CHECK(sr_mul(a, b) == sr_mul(b, a));
            CHECK(sr_add(sr_add(a, b), c) == sr_add(a, sr_add(b, c)));
            CHECK(sr_mul(sr_mul(a, b), c) == sr_mul(a, sr_mul(b, c)));
            CHECK(sr_mul(a, sr_add(b, c)) == sr_add(sr_mul(a, b), sr_mul(a, c)));
            CHECK(sr_mul(a, sr_one(s)) == a);
            CHECK(sr_pow(a, 3) == sr_mul(a, sr_mul(a, a)));
            CHECK(sr_try_div(sr_mul(a, b), b) == a);
        }
    }
}

TEST_CASE("tropical operations are max and plus") {
    const auto s = SemiringId::trop();
    const auto a = SemiringValue::integer(s, -3), b = SemiringValue::integer(s, 5);
    CHECK(sr_add(a, b) == b);
    CHECK(sr_mul(a, b) == SemiringValue::integer(s, 2));
    CHECK(sr_one(s) == SemiringValue::integer(s, 0));
    CHECK(sr_one_plus(a) == SemiringValue::integer(s, 0));
    CHECK(sr_pow(b, 3) == SemiringValue::integer(s, 15));
    const auto n = SemiringId::tropn();
    CHECK_THROWS_AS(sr_try_div(SemiringValue::integer(n, 1), SemiringValue::integer(n, 2)), DivisionFailure);
    CHECK(sr_try_div(SemiringValue::integer(n, 5), SemiringValue::integer(n, 2)) == SemiringValue::integer(n, 3));
}

TEST_CASE("division failures and carrier checks") {
    const auto z = SemiringId::zpos();
    CHECK_THROWS_AS(sr_try_div(SemiringValue::integer(z, 3), SemiringValue::integer(z, 2)), DivisionFailure);
    CHECK(sr_try_div(SemiringValue::integer(z, 6), SemiringValue::integer(z, 2)) == SemiringValue::integer(z, 3));
    CHECK_THROWS_AS(SemiringValue::integer(z, 0), ParseError);
    CHECK_THROWS_AS(SemiringValue::integer(SemiringId::tropn(), -1), ParseError);
    CHECK_THROWS_AS(SemiringValue::rational(mpq_class(-1, 2)), ParseError);
    CHECK_THROWS_AS(sr_add(SemiringValue::integer(z, 1), SemiringValue::rational(1)), MixedSemirings);
    CHECK_THROWS_AS(sr_add(sr_one(SemiringId::universal(2)), sr_one(SemiringId::universal(3))), MixedSemirings);
}

TEST_CASE("parsing values") {
    CHECK(sr_parse(SemiringId::qpos(), "6/4") == SemiringValue::rational(mpq_class(3, 2)));
    CHECK(sr_parse(SemiringId::zpos(), " 12 ") == SemiringValue::integer(SemiringId::zpos(), 12));
    CHECK_THROWS_AS(sr_parse(SemiringId::zpos(), "1.5"), ParseError);
    CHECK_THROWS_AS(sr_parse(SemiringId::qpos(), "1/0"), ParseError);
    CHECK_THROWS_AS(sr_parse(SemiringId::universal(2), "y1-y2"), ParseError);
    const auto u = sr_parse(SemiringId::universal(2), "(1+y1)/y2");
    CHECK(u.to_string() == "(1 + y1)/y2");
    CHECK(SemiringId::parse("universal(3)") == SemiringId::universal(3));
    CHECK(SemiringId::parse("universal", 4).name() == "universal(4)");
    CHECK_THROWS_AS(SemiringId::parse("reals"), ParseError);
}
