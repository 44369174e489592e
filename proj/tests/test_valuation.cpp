#include "padicgl/valuation.hpp"

#include "test_util.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

using namespace padic;

TEST_CASE("prime validation") {
    CHECK(Prime(2).value() == 2);
    CHECK(Prime(3).value() == 3);
    CHECK(Prime(97).value() == 97);
    CHECK_THROWS_AS(Prime(0), std::invalid_argument);
    CHECK_THROWS_AS(Prime(1), std::invalid_argument);
    CHECK_THROWS_AS(Prime(4), std::invalid_argument);
    CHECK_THROWS_AS(Prime(91), std::invalid_argument);  // 7 * 13
}

TEST_CASE("valuation of fixed rationals") {
    Prime p3(3);
    CHECK(valuation_of_rational(make_rational(18), p3) == ExtendedValuation(2));
    CHECK(valuation_of_rational(make_rational(2, 9), p3) == ExtendedValuation(-2));
    CHECK(valuation_of_rational(make_rational(-12), Prime(2)) == ExtendedValuation(2));
    CHECK(valuation_of_rational(make_rational(0), Prime(5)) == ExtendedValuation::infinity());
    CHECK(valuation_of_rational(make_rational(1), p3) == ExtendedValuation(0));
    CHECK(valuation_of_rational(make_rational(-5, 27), p3) == ExtendedValuation(-3));
}

TEST_CASE("extended valuation ordering and arithmetic") {
    ExtendedValuation inf = ExtendedValuation::infinity();
    ExtendedValuation zero(0);
    ExtendedValuation half(make_rational(1, 2));
    ExtendedValuation neg(make_rational(-3));

    CHECK(neg < zero);
    CHECK(zero < half);
    CHECK(half < inf);
    CHECK(inf == inf);
    CHECK_FALSE(inf < inf);
    CHECK(inf >= half);
    CHECK(min(half, inf) == half);
    CHECK(min(neg, zero) == neg);

    CHECK(zero + half == half);
    CHECK((inf + neg).is_infinite());
    CHECK((inf + inf).is_infinite());
    CHECK(scale(half, make_rational(4)) == ExtendedValuation(2));
    CHECK(scale(inf, make_rational(2)).is_infinite());
    CHECK_THROWS_AS(scale(half, make_rational(-1)), std::invalid_argument);
    CHECK_THROWS_AS(inf.finite(), std::domain_error);

    CHECK(inf.str() == "inf");
    CHECK(ExtendedValuation(make_rational(-1, 2)).str() == "-1/2");
}

TEST_CASE("multiplicativity on random rationals") {
    std::mt19937_64 rng(20240811);
    for (unsigned long pv : {2ul, 3ul, 5ul, 13ul}) {
        Prime p(pv);
        for (int i = 0; i < 2000; ++i) {
            Rational x = testutil::random_nonzero_rational(rng, 200);
            Rational y = testutil::random_nonzero_rational(rng, 200);
            ExtendedValuation vx = valuation_of_rational(x, p);
            ExtendedValuation vy = valuation_of_rational(y, p);
            CHECK(val_mul(vx, vy) == valuation_of_rational(Rational(x * y), p));
        }
    }
}

TEST_CASE("ultrametric inequality on random rationals") {
    std::mt19937_64 rng(907);
    for (unsigned long pv : {2ul, 7ul}) {
        Prime p(pv);
        for (int i = 0; i < 2000; ++i) {
            Rational x = testutil::random_rational(rng, 100);
            Rational y = testutil::random_rational(rng, 100);
            ExtendedValuation vx = valuation_of_rational(x, p);
            ExtendedValuation vy = valuation_of_rational(y, p);
            ExtendedValuation vsum = valuation_of_rational(Rational(x + y), p);
            ExtendedValuation bound = val_add_lower_bound(vx, vy);
            CHECK(vsum >= bound);
            if (vx != vy) CHECK(vsum == bound);
        }
    }
}

TEST_CASE("valuation matches power counting") {
    Prime p(7);
    Rational x(1);
    for (int e = 0; e <= 12; ++e) {
        CHECK(valuation_of_rational(x, p) == ExtendedValuation(e));
        CHECK(valuation_of_rational(Rational(1 / x), p) == ExtendedValuation(-e));
        x *= 7;
    }
}
