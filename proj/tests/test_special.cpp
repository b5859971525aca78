#include "doctest.h"

#include "liouville/errors.hpp"
#include "liouville/special.hpp"
#include "support.hpp"

using namespace liouville;
using test_support::rel;

// Reference values computed with mpmath at 40 digits.
TEST_CASE("complex Gamma against reference values") {
    struct Case {
        Complex s, expected;
    };
    const Case cases[] = {
        {{0.3, 0.7}, {0.30968625674374917, -0.85678775293927056}},
        {{-3.7, 2.2}, {-0.00061190872038372043, 0.00034663630649002411}},
        {{9.5, -9.5}, {-1495.9826723219219, 386.40576957407626}},
        {{-9.3, 0.1}, {4.5512037763166581e-06, 2.1750213467869322e-06}},
        {{2.5, 8.0}, {0.00029272819273025642, -0.00048945710116417112}},
        {{-0.5, 0.0}, {-3.5449077018110322, 0.0}},
        {{0.1, -10.0}, {1.4815875493685428e-07, 2.5840447322347109e-08}},
        {{-7.5, -4.0}, {-2.3759647519648091e-09, -3.3187454395630343e-09}},
    };
    for (const auto& c : cases) {
        CAPTURE(c.s);
        CHECK(rel(complex_gamma(c.s), c.expected) < 1e-13);
    }
    CHECK(complex_gamma(5.0).real() == doctest::Approx(24.0).epsilon(1e-14));
}

TEST_CASE("Gamma poles") {
    for (int k = 0; k >= -5; --k) CHECK_THROWS_AS(complex_gamma(static_cast<double>(k)), PoleError);
}

TEST_CASE("Riemann zeta against reference values") {
    struct Case {
        Complex s, expected;
    };
    const Case cases[] = {
        {{0.5, 3.0}, {0.53273667097423283, -0.078896513425833384}},
        {{0.25, 14.0}, {-0.18370547275206811, -0.16442729042553977}},
        {{-2.5, 1.0}, {0.023593610586379647, 0.001407799605838377}},
        {{3.0, 0.0}, {1.2020569031595942, 0.0}},
        {{-0.75, 0.0}, {-0.13364277443658457, 0.0}},
        {{1.5, -2.0}, {0.75218186903423256, 0.33397906099331398}},
        {{0.0, 5.0}, {0.63307858403674988, 0.29065989971694939}},
        {{-5.5, 0.5}, {-0.0034026198764201352, -0.0023608578250918178}},
    };
    for (const auto& c : cases) {
        CAPTURE(c.s);
        CHECK(rel(zeta(c.s), c.expected) < 1e-13);
    }
}

TEST_CASE("zeta classical values") {
    CHECK(zeta(2.0).real() == doctest::Approx(kPi * kPi / 6.0).epsilon(1e-15));
    CHECK(std::abs(zeta(-1.0) + 1.0 / 12.0) < 1e-15);
    CHECK(zeta(-2.0) == Complex(0.0, 0.0));
    CHECK(zeta(-4.0) == Complex(0.0, 0.0));
    CHECK(std::abs(zeta(0.0) + 0.5) < 4e-15);
    CHECK_THROWS_AS(zeta(1.0), PoleError);
}

TEST_CASE("zeta at the removable points of the eta quotient") {
    // s = 1 + 2 pi i / ln 2, where 1 - 2^(1-s) vanishes; reference is mpmath at s + 1e-25
    const Complex s(1.0, 2.0 * kPi / std::log(2.0));
    const Complex expected(1.3465795428363170, 0.10988313679626964);
    CHECK(rel(zeta(s), expected) < 1e-13);
    CHECK(rel(zeta(s + Complex(1e-9, 0.0)), expected) < 1e-8);
    const double near_one = 1.0 + 1e-7;
    CHECK(std::abs(zeta(Complex(near_one, 0.0)) - (1.0 / (near_one - 1.0) + 0.5772156649015329)) <
          1e-5);
}

TEST_CASE("alternating zeta") {
    CHECK(zeta_alternating(1.0).real() == doctest::Approx(std::log(2.0)).epsilon(1e-15));
    CHECK_THROWS_AS(zeta_alternating(Complex(-0.5, 0.0)), DomainError);
    CHECK(alternating_order(Complex(0.5, 14.0), EvalConfig{}) >= 50);
}
