#pragma once

#include "liouville/arith_table.hpp"
#include "liouville/complex.hpp"

#include <cstdint>
#include <vector>

namespace liouville {

struct KernelConfig {
    /// N sums m = 0..n_terms_N, i.e. odd n up to 2 n_terms_N + 1.
    std::int64_t n_terms_N = 1'000'000;
    /// M sums odd n up to 2 n_terms_M + 1.
    std::int64_t n_terms_M = 1'000'000;
    /// Power-series truncation for N near the origin (at most 60).
    int series_order_K = 30;
    /// Remainder target for the summation-by-parts evaluations of M and M'.
    double abel_tail_tol = 1e-8;

    void validate() const;
};

/// A truncated kernel value and a bound on what the truncation discarded.
struct KernelValue {
    Complex value;
    double tail_bound = 0.0;
    /// True when the bound relies on the observed envelope of the partial sums of nu
    /// rather than on an inequality that holds unconditionally.
    bool empirical_bound = false;
    /// Largest odd index n that entered the sum.
    std::int64_t last_index = 0;
};

/// Pole-proximity radius around i pi (2k + 1).
inline constexpr double kPoleProximity = 1e-12;

/// 1 / (e^z + 1), overflow-safe. Throws PoleError near i pi (2k + 1).
Complex fermi(Complex z);

/// 1/2 - 2 sum_{k<=K} (-1)^k z^(2k+1) pi^-(2k+2) zeta_imp(2k+2); requires |z| < pi.
Complex fermi_series(Complex z, int order);

/// N(z) = 2z sum_m beta(2m+1) / (sqrt(2m+1) (z^2 + pi^2 (2m+1)^2)), truncated at n_terms_N.
/// The tail bound uses |beta(n)| <= sqrt(n) and is unconditional.
KernelValue kernel_N(Complex z, const ArithTable& table, const KernelConfig& config);

/// Power series 2 sum_{k<=K} (-1)^k z^(2k+1) pi^-(2k+2) zeta_beta(2k + 5/2). Requires |z| < pi.
Complex kernel_N_series(Complex z, const KernelConfig& config);

/// 2 (-1)^k pi^-(2k+2) zeta_beta(2k + 5/2).
double kernel_N_series_coefficient(int k);

/// 2 (-1)^k pi^-(2k+2) zeta_imp(2k+2) zeta_nu(2k+1), the coefficient obtained by
/// expanding every term of M.
double kernel_M_series_coefficient(int k);

enum class MForm {
    /// sum nu(n) (1/2 - fermi(z/n))
    half_shifted,
    /// -sum nu(n) fermi(z/n), summed by parts against S(n) = sum_{m<=n} nu(m)
    plain,
};

/// M(z) over odd n. Both forms are summed by parts with S(infinity) = 0 assumed
/// beyond the table. For real z >= 0 the sum stops as soon as the remainder bound
/// drops below abel_tail_tol; otherwise n_terms_M terms are used. Throws
/// TruncationBudgetError when the final remainder bound exceeds abel_tail_tol.
KernelValue kernel_M(Complex z, const ArithTable& table, const KernelConfig& config,
                     MForm form = MForm::half_shifted);

/// M'(x) = sum nu(n)/n e^(x/n) / (e^(x/n) + 1)^2 for x >= 0, same stopping rule as kernel_M.
KernelValue kernel_M_prime(double x, const ArithTable& table, const KernelConfig& config);

/// Full-budget evaluations with no tolerance check, for use inside quadrature.
KernelValue kernel_N_budgeted(Complex z, const ArithTable& table, std::int64_t n_terms);
KernelValue kernel_M_budgeted(Complex z, const ArithTable& table, std::int64_t n_terms, MForm form);

enum class KernelKind { N, M };

struct ResidueEstimate {
    Complex value;
    /// |difference| of the two extrapolants the estimate was taken from.
    double spread = 0.0;
    /// r * K(pole + r * direction) for r = 2^-4 ... 2^-20.
    std::vector<Complex> sequence;
};

/// Residue of N or M at i pi (2l + 1): (z - pole) K(z) along z = pole + 2^-j e^(i pi/4),
/// 4 <= j <= 20, Richardson-extrapolated to second order. Throws EstimationFailure
/// if successive extrapolants never agree to 1e-6.
ResidueEstimate residue_estimate(KernelKind kernel, int l, const ArithTable& table,
                                 const KernelConfig& config);

}  // namespace liouville
