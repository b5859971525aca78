#include "doctest.h"

#include "liouville/kernels.hpp"
#include "liouville/quadrature.hpp"
#include "liouville/special.hpp"
#include "liouville/verification.hpp"
#include "liouville/zeta_family.hpp"
#include "support.hpp"

#include <random>

using namespace liouville;
using test_support::rel;

namespace {

// Generators draw from raw mt19937 output so every platform sees the same cases.
struct Gen {
    std::mt19937_64 rng;
    explicit Gen(std::uint64_t seed) : rng(seed) {}
    std::int64_t integer(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    double real(double lo, double hi) { return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53); }
    Complex complex(double re_lo, double re_hi, double im_abs) { return {real(re_lo, re_hi), real(-im_abs, im_abs)}; }
};

const ArithTable& table() {
    static const ArithTable t = ArithTable::build(1'000'000);
    return t;
}

const ArithTable& kernel_table() {
    static const ArithTable t = ArithTable::build(200'001);
    return t;
}

KernelConfig kernel_config() {
    KernelConfig c;
    c.n_terms_N = c.n_terms_M = 100'000;
    return c;
}

std::int64_t isqrt(std::int64_t n) {
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

}  // namespace

TEST_CASE("lambda is completely multiplicative") {
    Gen g(1);
    const auto& t = table();
    for (int i = 0; i < 20000; ++i) {
        const std::int64_t a = g.integer(1, 1000);
        const std::int64_t b = g.integer(1, t.limit() / a);
        CAPTURE(a);
        CAPTURE(b);
        REQUIRE(t.liouville(a * b) == t.liouville(a) * t.liouville(b));
    }
}

TEST_CASE("mu is multiplicative on coprime pairs and vanishes on non-squarefree n") {
    Gen g(2);
    const auto& t = table();
    for (int i = 0; i < 20000; ++i) {
        const std::int64_t a = g.integer(1, 1000);
        const std::int64_t b = g.integer(1, t.limit() / a);
        if (std::gcd(a, b) == 1) REQUIRE(t.mobius(a * b) == t.mobius(a) * t.mobius(b));
        const std::int64_t p = g.integer(2, 31);
        if (p * p * a <= t.limit()) REQUIRE(t.mobius(p * p * a) == 0);
    }
}

TEST_CASE("beta magnitude is the square part and the ratio bound holds") {
    Gen g(3);
    const auto& t = table();
    for (int i = 0; i < 20000; ++i) {
        const std::int64_t n = 2 * g.integer(0, (t.limit() - 1) / 2) + 1;
        const auto f = factorize(t, n);
        std::int64_t h = 1;
        for (auto [p, e] : f) {
            for (int k = 0; k < e / 2; ++k) h *= p;
        }
        const int b = t.beta(n);
        CAPTURE(n);
        REQUIRE(std::abs(b) == h);
        REQUIRE(b == t.mobius(n / (h * h)) * h);
        const double r = b / std::sqrt(static_cast<double>(n));
        REQUIRE(r > -1.0);
        REQUIRE(r <= 1.0);
        REQUIRE((b * static_cast<std::int64_t>(b) == n) == (isqrt(n) * isqrt(n) == n));
    }
}

TEST_CASE("parity convention and cumulative sums") {
    Gen g(4);
    const auto& t = table();
    const auto beta = t.beta_column();
    for (int i = 0; i < 20000; ++i) {
        const std::int64_t n = g.integer(2, t.limit());
        if (n % 2 == 0) {
            REQUIRE(t.nu(n) == 0.0);
            REQUIRE(beta[static_cast<std::size_t>(n)] == 0);
        }
        REQUIRE(t.nu_partial_sum(n) - t.nu_partial_sum(n - 1) == doctest::Approx(t.nu(n)).epsilon(1e-9));
        REQUIRE(std::fabs(t.nu(n)) * static_cast<double>(n) <= t.divisor_count(n) * (1.0 + 1e-12));
        REQUIRE(t.nu_sum_envelope(n) >= std::fabs(t.nu_partial_sum(n)));
    }
}

TEST_CASE("zeta family: conjugate symmetry and functional equations at random points") {
    Gen g(5);
    for (int i = 0; i < 40; ++i) {
        const Complex s = g.complex(-2.0, 3.0, 6.0);
        CAPTURE(s);
        if (std::abs(s - 1.0) < 0.05) continue;
        CHECK(rel(zeta(std::conj(s)), std::conj(zeta(s))) < 1e-13);
        if (s.real() < 1.0) CHECK(rel(functional_eq_rhs_zeta_a(s), zeta_a(s)) < 1e-11);
        if (s.real() < 0.5 && s.real() > -1.5) CHECK(rel(functional_eq_rhs_zeta_alpha(s), zeta_alpha(s)) < 1e-10);
        CHECK(rel(zeta_alpha(s), zeta_alpha(s, AlphaMode::lambda_relation)) < 1e-10);
    }
}

TEST_CASE("kernels are odd and real on the real axis") {
    Gen g(6);
    const auto& t = kernel_table();
    const auto cfg = kernel_config();
    for (int i = 0; i < 12; ++i) {
        const Complex z = g.complex(-3.0, 3.0, 2.5);
        CAPTURE(z);
        const Complex n = kernel_N(z, t, cfg).value;
        CHECK(std::abs(kernel_N(-z, t, cfg).value + n) < 1e-15);
        CHECK(std::abs(kernel_N(std::conj(z), t, cfg).value - std::conj(n)) < 1e-15);
        const Complex m = kernel_M_budgeted(z, t, cfg.n_terms_M, MForm::half_shifted).value;
        CHECK(std::abs(kernel_M_budgeted(-z, t, cfg.n_terms_M, MForm::half_shifted).value + m) < 1e-15);
        CHECK(std::abs(m - n) < 1e-5);
    }
}

TEST_CASE("series coefficients agree") {
    for (const auto& r : verify_series_coefficients(10)) CHECK(r.pass);
}

TEST_CASE("quadrature is linear") {
    Gen g(7);
    MellinIntegrand f;
    f.eval = [](std::span<const double> xs, std::span<Sample> out) {
        for (std::size_t i = 0; i < xs.size(); ++i) out[i] = Sample{fermi(xs[i]), 0.0};
    };
    f.tail = TailModel::exponential;
    f.decay_constant = 1.0;
    for (int i = 0; i < 5; ++i) {
        const Complex c = g.complex(-5.0, 5.0, 5.0);
        const Complex s = g.complex(-0.4, 0.4, 2.0);
        MellinIntegrand h = f;
        h.eval = [c](std::span<const double> xs, std::span<Sample> out) {
            for (std::size_t k = 0; k < xs.size(); ++k) out[k] = Sample{c * fermi(xs[k]), 0.0};
        };
        const auto a = integrate_mellin(f, s, QuadratureSpec{});
        const auto b = integrate_mellin(h, s, QuadratureSpec{});
        CHECK(rel(b.value, c * a.value) < 1e-13);
    }
}

TEST_CASE("refinement changes the kernel integral by less than the reported error") {
    const auto& t = kernel_table();
    const auto cfg = kernel_config();
    const auto f = make_kernel_integrand(IntegrandKind::N, t, cfg);
    QuadratureSpec coarse = default_theorem2_spec();
    QuadratureSpec fine = coarse;
    fine.de_levels += 1;
    fine.panel_nodes *= 2;
    for (Complex s : default_theorem2_grid()) {
        CAPTURE(s);
        const auto a = integrate_mellin(f, s, coarse);
        const auto b = integrate_mellin(f, s, fine);
        CHECK(std::abs(a.value - b.value) < a.est_error);
    }
}
