#include "doctest.h"

#include "liouville/errors.hpp"
#include "liouville/kernels.hpp"
#include "liouville/zeta_family.hpp"
#include "support.hpp"

using namespace liouville;
using test_support::big_table;

TEST_CASE("fermi") {
    CHECK(fermi(0.0) == Complex(0.5, 0.0));
    CHECK(fermi(1.0).real() == doctest::Approx(0.26894142136999512).epsilon(1e-15));
    CHECK(std::abs(fermi(100.0)) <= 1e-40);
    CHECK(std::abs(fermi(-800.0) - 1.0) == 0.0);
    CHECK(std::isfinite(fermi(800.0).real()));
    CHECK_THROWS_AS(fermi(Complex(0.0, kPi)), PoleError);
    CHECK_THROWS_AS(fermi(Complex(1e-13, -3.0 * kPi)), PoleError);
    CHECK_NOTHROW(fermi(Complex(0.0, kPi + 1e-6)));
}

TEST_CASE("fermi partial fractions at z = 1") {
    double acc = 0.0;
    const long n_max = 100000;
    for (long n = n_max; n >= 0; --n) {
        const double a = (2.0 * n + 1.0) * kPi;
        acc += 1.0 / (1.0 + a * a);
    }
    const double partial = 0.5 - 2.0 * acc;
    // tail: 2 sum_{n > n_max} 1/((2n+1)^2 pi^2) < 1/(pi^2 (2 n_max + 1))
    const double tail = 1.0 / (kPi * kPi * (2.0 * n_max + 1.0));
    CHECK(std::abs(partial - fermi(1.0).real()) <= tail);
}

TEST_CASE("fermi power series") {
    for (Complex z : {Complex(1.0, 0.0), Complex(0.0, 1.0), Complex(0.6, -0.8)}) {
        CAPTURE(z);
        CHECK(std::abs(fermi_series(z, 30) - fermi(z)) < 1e-14);
    }
    CHECK_THROWS_AS(fermi_series(4.0, 10), DomainError);
}

TEST_CASE("N basics") {
    const auto& t = big_table();
    const KernelConfig cfg;
    CHECK(kernel_N(0.0, t, cfg).value == Complex(0.0, 0.0));
    const auto p = kernel_N(0.7, t, cfg);
    const auto m = kernel_N(-0.7, t, cfg);
    CHECK(p.value == -m.value);
    CHECK(p.tail_bound > 0.0);
    CHECK_FALSE(p.empirical_bound);
    CHECK_THROWS_AS(kernel_N(Complex(0.0, 3.0 * kPi), t, cfg), PoleError);
    KernelConfig huge;
    huge.n_terms_N = 2'000'000;
    CHECK_THROWS_AS(kernel_N(1.0, t, huge), InvalidArgument);
}

TEST_CASE("N power series") {
    const auto& t = big_table();
    const KernelConfig cfg;
    CHECK(kernel_N_series(0.0, cfg) == Complex(0.0, 0.0));
    const double lead = 2.0 * 0.1 * zeta_beta(2.5).real() / (kPi * kPi);
    // the deviation is the z^2 correction, -(zeta_beta(9/2) / zeta_beta(5/2)) (0.1/pi)^2 = -1.093e-3
    const double deviation = kernel_N_series(0.1, cfg).real() / lead - 1.0;
    const double second = -zeta_beta(4.5).real() / zeta_beta(2.5).real() * 0.01 / (kPi * kPi);
    CHECK(std::abs(deviation) < 1.1e-3);
    CHECK(std::abs(deviation - second) < 3e-6);
    const auto direct = kernel_N(1.0, t, cfg);
    CHECK(std::abs(kernel_N_series(1.0, cfg) - direct.value) <= direct.tail_bound + 1e-14);
    CHECK_THROWS_AS(kernel_N_series(Complex(0.0, 3.2), cfg), DomainError);
}

TEST_CASE("M forms agree with N") {
    const auto& t = big_table();
    const KernelConfig cfg;
    CHECK(kernel_M(0.0, t, cfg, MForm::half_shifted).value == Complex(0.0, 0.0));
    const Complex n1 = kernel_N(1.0, t, cfg).value;
    for (MForm form : {MForm::half_shifted, MForm::plain}) {
        const auto m = kernel_M(1.0, t, cfg, form);
        CHECK(std::abs(m.value - n1) < 1e-6);
        CHECK(m.empirical_bound);
        CHECK(m.tail_bound < cfg.abel_tail_tol);
    }
    const Complex z(0.5, 0.5);
    CHECK(std::abs(kernel_M(z, t, cfg).value - kernel_N(z, t, cfg).value) < 1e-6);
}

TEST_CASE("M at x = 50 lies under the recorded decay envelope") {
    const auto& t = big_table();
    const auto m = kernel_M(50.0, t, KernelConfig{}, MForm::plain);
    // 50 |M(50)| = 0.27455 on the reference run
    CHECK(50.0 * std::abs(m.value) < 0.275);
}

TEST_CASE("M truncation budget") {
    const auto small = ArithTable::build(20001);
    KernelConfig cfg;
    cfg.n_terms_M = 10000;
    try {
        kernel_M(1000.0, small, cfg, MForm::plain);
        FAIL("expected TruncationBudgetError");
    } catch (const TruncationBudgetError& e) {
        CHECK(e.achieved_bound() >= cfg.abel_tail_tol);
    }
}

TEST_CASE("M prime") {
    const auto& t = big_table();
    const KernelConfig cfg;
    CHECK(std::abs(kernel_M_prime(0.0, t, cfg).value.real() - zeta_nu(1.0).real() / 4.0) < 1e-7);
    const double h = 1e-4;
    const double fd = (kernel_M(2.0 + h, t, cfg).value.real() - kernel_M(2.0 - h, t, cfg).value.real()) / (2.0 * h);
    CHECK(std::abs(fd - kernel_M_prime(2.0, t, cfg).value.real()) <= 1e-6);
    CHECK_THROWS_AS(kernel_M_prime(-1.0, t, cfg), DomainError);
}

TEST_CASE("residues") {
    const auto& t = big_table();
    const KernelConfig cfg;
    CHECK(std::abs(residue_estimate(KernelKind::N, 0, t, cfg).value - 1.0) < 1e-4);
    CHECK(std::abs(residue_estimate(KernelKind::N, 1, t, cfg).value + 1.0 / std::sqrt(3.0)) < 1e-4);
    CHECK(std::abs(residue_estimate(KernelKind::M, 1, t, cfg).value + 1.0 / std::sqrt(3.0)) < 1e-4);
    const auto est = residue_estimate(KernelKind::M, 0, t, cfg);
    CHECK(est.sequence.size() == 17);
    CHECK(est.spread < 1e-6);
}

TEST_CASE("config validation") {
    KernelConfig c;
    c.series_order_K = 61;
    CHECK_THROWS_AS(c.validate(), InvalidArgument);
    c = KernelConfig{};
    c.abel_tail_tol = 0.0;
    CHECK_THROWS_AS(c.validate(), InvalidArgument);
    c = KernelConfig{};
    c.n_terms_N = 0;
    CHECK_THROWS_AS(c.validate(), InvalidArgument);
}
