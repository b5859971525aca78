#include "doctest.h"

#include "liouville/errors.hpp"
#include "liouville/quadrature.hpp"
#include "liouville/special.hpp"
#include "liouville/zeta_family.hpp"
#include "support.hpp"

using namespace liouville;
using test_support::rel;

namespace {

MellinIntegrand exponential(double rate) {
    MellinIntegrand f;
    f.eval = [rate](std::span<const double> xs, std::span<Sample> out) {
        for (std::size_t i = 0; i < xs.size(); ++i) out[i] = Sample{std::exp(-rate * xs[i]), 0.0};
    };
    f.tail = TailModel::exponential;
    f.decay_power = rate;
    f.decay_constant = 1.0;
    return f;
}

MellinIntegrand scaled(const MellinIntegrand& f, Complex c) {
    MellinIntegrand g = f;
    g.eval = [inner = f.eval, c](std::span<const double> xs, std::span<Sample> out) {
        inner(xs, out);
        for (auto& s : out) s.value *= c;
    };
    return g;
}

}  // namespace

TEST_CASE("calibration integrals") {
    const QuadratureSpec spec;
    CHECK(std::abs(integrate_gamma_zeta_a(2.0, spec).value - kPi * kPi / 12.0) < 1e-10);
    CHECK(std::abs(integrate_gamma_zeta_a(1.0, spec).value - std::log(2.0)) < 1e-10);
    CHECK(std::abs(integrate_gamma_zeta_a(-0.5, spec).value + 1.3474364777155080) < 1e-8);
    const Complex s(0.5, 1.5);
    CHECK(rel(integrate_gamma_zeta_a(s, spec).value, complex_gamma(s) * zeta_a(s)) < 1e-9);
    const Complex t(-0.4, 0.8);
    CHECK(rel(integrate_gamma_zeta_a(t, spec).value, complex_gamma(t) * zeta_a(t)) < 1e-8);
}

TEST_CASE("calibration domain") {
    CHECK_THROWS_AS(integrate_gamma_zeta_a(-1.5, QuadratureSpec{}), DomainError);
    CHECK_THROWS_AS(integrate_gamma_zeta_a(0.0, QuadratureSpec{}), DomainError);
}

TEST_CASE("power times exponential has a known closed form") {
    // int_0^inf e^(-x) x^a dx = Gamma(a + 1)
    for (Complex a : {Complex(-0.6, 0.0), Complex(0.5, 1.0), Complex(2.0, 0.0)}) {
        CAPTURE(a);
        const auto r = integrate_power_weighted(exponential(1.0), a, QuadratureSpec{});
        CHECK(rel(r.value, complex_gamma(a + 1.0)) < 1e-11);
        CHECK_FALSE(r.tail_bound_empirical);
    }
}

TEST_CASE("tail bound is honest on closed forms") {
    // the discarded part is Gamma(a+1, X) for f = e^-x; compare with the reported bound
    for (double a : {-0.5, 0.0, 1.5, 3.0}) {
        QuadratureSpec spec;
        spec.tail_stop_rel = 1e-4;
        const auto r = integrate_power_weighted(exponential(1.0), a, spec);
        const double X = r.upper_limit;
        // Gamma(a+1, X) by integrating e^-x x^a over [X, inf) with a fine rule
        MellinIntegrand shifted;
        shifted.eval = [X, a](std::span<const double> us, std::span<Sample> out) {
            for (std::size_t i = 0; i < us.size(); ++i) {
                const double x = X + us[i];
                out[i] = Sample{std::exp(-x) * std::pow(x, a), 0.0};
            }
        };
        shifted.tail = TailModel::exponential;
        shifted.decay_constant = std::exp(-X) * std::pow(2.0 * X + 10.0, std::max(a, 0.0));
        const double true_tail = integrate_power_weighted(shifted, 0.0, QuadratureSpec{}).value.real();
        CAPTURE(a);
        CAPTURE(X);
        CHECK(true_tail > 0.0);
        CHECK(true_tail <= r.tail_bound);
    }
}

TEST_CASE("linearity") {
    const auto f = exponential(0.7);
    const Complex c(2.5, -1.25);
    const Complex a(-0.3, 0.6);
    const auto r1 = integrate_power_weighted(f, a, QuadratureSpec{});
    const auto r2 = integrate_power_weighted(scaled(f, c), a, QuadratureSpec{});
    CHECK(rel(r2.value, c * r1.value) < 1e-13);
}

TEST_CASE("non-convergence carries the partial result") {
    MellinIntegrand slow;
    slow.eval = [](std::span<const double> xs, std::span<Sample> out) {
        for (std::size_t i = 0; i < xs.size(); ++i) out[i] = Sample{1.0 / (1.0 + xs[i]), 0.0};
    };
    QuadratureSpec spec;
    spec.max_panels = 5;
    try {
        integrate_mellin(slow, -0.4, spec);
        FAIL("expected NonConvergence");
    } catch (const NonConvergence& e) {
        CHECK(e.partial().panels_used == 5);
        CHECK(std::abs(e.partial().value) > 0.0);
    }
}

TEST_CASE("strip and spec validation") {
    const auto f = exponential(1.0);
    CHECK_THROWS_AS(integrate_mellin(f, 0.5, QuadratureSpec{}), DomainError);
    CHECK_THROWS_AS(integrate_mellin(f, -1.5, QuadratureSpec{}), DomainError);
    QuadratureSpec bad;
    bad.panel_growth = 1.0;
    CHECK_THROWS_AS(bad.validate(), InvalidArgument);
    bad = QuadratureSpec{};
    bad.split_point = 0.0;
    CHECK_THROWS_AS(bad.validate(), InvalidArgument);
}

TEST_CASE("kernel integrals: N and M forms agree, splice point does not matter") {
    const auto t = ArithTable::build(200'001);
    KernelConfig cfg;
    cfg.n_terms_N = cfg.n_terms_M = 100'000;
    QuadratureSpec spec;
    spec.tail_stop_rel = 1e-7;
    const Complex s(-0.75, 0.0);
    const auto rn = integrate_mellin(make_kernel_integrand(IntegrandKind::N, t, cfg), s, spec);
    const auto rm = integrate_mellin(make_kernel_integrand(IntegrandKind::M_plain, t, cfg), s, spec);
    // a 10^5-term table; the full-size comparison is part of the acceptance run
    CHECK(rel(rn.value, rm.value) < 1e-5);
    CHECK(rm.tail_bound_empirical);
    for (double splice : {1.5, 3.0, 10.0}) {
        CAPTURE(splice);
        const auto rs = integrate_mellin(make_kernel_integrand(IntegrandKind::spliced, t, cfg, splice), s, spec);
        CHECK(rel(rs.value, rn.value) < 1e-5);
    }
    // the prefactor zero at s = -1 forces the represented value to vanish
    const auto r1 = integrate_mellin(make_kernel_integrand(IntegrandKind::M_plain, t, cfg), -1.0, spec);
    CHECK(std::abs(mellin_prefactor(-1.0) * r1.value) <= 1e-8);
}
