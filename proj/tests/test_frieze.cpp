#include "oracles.hpp"

#include "yfrieze/errors.hpp"
#include "yfrieze/frieze.hpp"

#include <doctest.h>

using namespace yfrieze;

namespace {

std::vector<SemiringValue> ints(const SemiringId& s, std::initializer_list<long> v) {
    std::vector<SemiringValue> out;
    for (auto x : v) out.push_back(SemiringValue::integer(s, x));
    return out;
}

std::vector<long> row(const PatternWindow& w, std::size_t i) {
    std::vector<long> out;
    for (long m = w.lo(); m <= w.hi(); ++m) out.push_back(w.at(i, m).as_int().get_si());
    return out;
}

} // namespace

TEST_CASE("A2 Y-frieze from (2,1)") {
    const auto z = SemiringId::zpos();
    const auto w = knit(parse_cartan("A2"), z, PatternKind::yfrieze, ints(z, {2, 1}), 0, 5);
    CHECK(row(w, 0) == std::vector<long>{2, 1, 3, 1, 2, 2});
    CHECK(row(w, 1) == std::vector<long>{1, 2, 2, 1, 3, 1});
    CHECK(verify(w));
    CHECK(has_period(w, 5));
    CHECK(check_glide(w));
}

TEST_CASE("affine A1 Y-frieze grows") {
    const auto z = SemiringId::zpos();
    const auto w = knit(parse_cartan("A1~"), z, PatternKind::yfrieze, ints(z, {4, 1}), -1, 4);
    CHECK(row(w, 0) == std::vector<long>{169, 4, 1, 25, 1156, 54289});
    CHECK(row(w, 1) == std::vector<long>{25, 1, 4, 169, 7921, 372100});
    CHECK(verify(w));
}

TEST_CASE("knitting failure reports the first bad cell") {
    const auto z = SemiringId::zpos();
    try {
        knit(parse_cartan("A2"), z, PatternKind::yfrieze, ints(z, {2, 2}), 0, 5);
        FAIL("expected KnitFailure");
    } catch (const KnitFailure& e) {
        CHECK(e.at() == GridPoint{0, 1});
        CHECK(e.direction() == KnitDirection::forward);
    }
    const auto r = try_knit(parse_cartan("A2"), z, PatternKind::yfrieze, ints(z, {2, 2}), -2, 0);
    REQUIRE(r.failure);
    CHECK(r.failure->direction() == KnitDirection::backward);
    CHECK_FALSE(r.window);
}

TEST_CASE("knitting agrees with the naive rational knitter") {
    std::mt19937_64 rng(23);
    const auto q = SemiringId::qpos();
    for (const auto& name : {"A3", "B3", "C3", "G2", "D4", "F4", "A1~", "2,-1,0;-1,2,-2;0,-1,2"}) {
        const auto a = parse_cartan(name);
        for (bool y : {false, true}) {
            for (int trial = 0; trial < 5; ++trial) {
                oracle::Column c0;
                std::vector<SemiringValue> init;
                for (std::size_t i = 0; i < a.rank(); ++i) {
                    c0.push_back(oracle::random_positive_rational(rng));
                    init.push_back(SemiringValue::rational(c0.back()));
                }
                const auto kind = y ? PatternKind::yfrieze : PatternKind::frieze;
                const auto w = knit(a, q, kind, init, 0, 6);
                const auto ref = oracle::knit(a.entries(), y, c0, 7);
                for (long m = 0; m <= 6; ++m)
                    for (std::size_t i = 0; i < a.rank(); ++i) CHECK(w.at(i, m).as_rat() == ref[m][i]);
            }
        }
    }
}

TEST_CASE("backward knitting matches forward knitting from the earlier column") {
    const auto q = SemiringId::qpos();
    const auto a = parse_cartan("B3");
    std::vector<SemiringValue> init;
    for (long v : {2, 3, 5}) init.push_back(SemiringValue::rational(mpq_class(v, 7)));
    const auto w = knit(a, q, PatternKind::yfrieze, init, -4, 2);
    const auto fwd = knit(a, q, PatternKind::yfrieze, w.column(-4), -4, 2);
    for (long m = -4; m <= 2; ++m)
        for (std::size_t i = 0; i < 3; ++i) CHECK(w.at(i, m) == fwd.at(i, m));
}

TEST_CASE("verify detects a tampered cell") {
    const auto z = SemiringId::zpos();
    auto w = knit(parse_cartan("A2"), z, PatternKind::frieze, ints(z, {1, 2}), 0, 5);
    CHECK(verify(w));
    w.set(1, 3, SemiringValue::integer(z, 7));
    CHECK_FALSE(verify(w));
    REQUIRE(first_violation(w));
    CHECK_THROWS_AS(w.set(0, 0, SemiringValue::rational(1)), MixedSemirings);
}

TEST_CASE("ensemble image matches the monomial formula") {
    const auto q = SemiringId::qpos();
    for (const auto& name : {"A3", "C3", "G2", "D4"}) {
        const auto a = parse_cartan(name);
        std::vector<SemiringValue> init;
        // Unreduced on purpose (3/3, 6/3): values must be normalized on entry.
        for (std::size_t i = 0; i < a.rank(); ++i) init.push_back(SemiringValue::rational(mpq_class(i + 2, 3)));
        const auto f = knit(a, q, PatternKind::frieze, init, 0, 6);
        const auto y = ensemble_image(f);
        CHECK(y.kind() == PatternKind::yfrieze);
        CHECK(y.hi() == 5);
        CHECK(verify(y));
        for (long m = 0; m <= 5; ++m)
            for (std::size_t i = 0; i < a.rank(); ++i) {
                mpq_class v = 1;
                for (std::size_t j = 0; j < a.rank(); ++j) {
                    if (j == i) continue;
                    v *= oracle::qpow(f.at(j, j < i ? m + 1 : m).as_rat(), -a(j, i));
                }
                CHECK(y.at(i, m).as_rat() == v);
            }
    }
}

TEST_CASE("symbolic A3 Y-frieze from generic values") {
    const auto u = SemiringId::universal(3);
    const auto a = parse_cartan("A3");
    std::vector<SemiringValue> init;
    for (std::size_t i = 0; i < 3; ++i) init.push_back(SemiringValue::expression(RationalFn::variable(3, i)));
    const auto w = knit(a, u, PatternKind::yfrieze, init, 0, 6);
    CHECK(verify(w));
    CHECK(has_period(w, 6));
    CHECK(check_glide(w));
    const auto e = [&](const char* s) { return sr_parse(u, s); };
    CHECK(w.at(0, 1) == e("(1+y2)/y1"));
    CHECK(w.at(1, 1) == e("(1+y1+y2)*(1+y3)/(y1*y2)"));
    CHECK(w.at(2, 1) == e("(y1*y2+y1*y3+y2*y3+y1+y2+y3+1)/(y1*y2*y3)"));
    CHECK(w.at(0, 2) == e("(y1*y2+y1*y3+y2*y3+y1+y2+y3+1)/(y2*(1+y2))"));
    CHECK(w.at(1, 2) == e("(1+y1)*(1+y2+y3)/(y2*y3)"));
    CHECK(w.at(2, 2) == e("y1"));
    CHECK(w.at(0, 3) == e("(1+y2)/y3"));
    CHECK(w.at(1, 3) == e("y2"));
    CHECK(w.at(2, 3) == e("(1+y2)/y1"));
}

TEST_CASE("window bookkeeping") {
    const auto z = SemiringId::zpos();
    PatternWindow w(PatternKind::frieze, parse_cartan("A2"), z, 0, 3);
    CHECK(w.width() == 4);
    CHECK_THROWS_AS(w.at(0, 9), WindowTooNarrow);
    CHECK_THROWS_AS(knit(parse_cartan("A2"), z, PatternKind::frieze, ints(z, {1}), 0, 3), DimensionMismatch);
    CHECK(parse_kind("y") == PatternKind::yfrieze);
    CHECK(parse_kind("frieze") == PatternKind::frieze);
    CHECK_THROWS_AS(parse_kind("zz"), ParseError);
    const auto narrow = knit(parse_cartan("A3"), z, PatternKind::frieze, ints(z, {1, 2, 3}), 0, 1);
    CHECK_THROWS_AS(check_glide(narrow), WindowTooNarrow);
}
