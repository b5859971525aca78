#pragma once

#include "liouville/arith_table.hpp"
#include "liouville/complex.hpp"

#include <cstdint>

namespace liouville {

/// A table-backed Dirichlet partial sum next to the closed form it should approach.
struct OracleSum {
    double partial = 0.0;
    double closed_form = 0.0;
    /// Rigorous bound on the terms beyond n = terms.
    double tail_bound = 0.0;
    std::int64_t terms = 0;
};

// Each sums n <= N from the table in decreasing n. N must not exceed the table limit.

/// sum lambda(n) n^-s against zeta(2s)/zeta(s); s > 1.
OracleSum dirichlet_lambda(const ArithTable& table, double s, std::int64_t N);
/// sum mu(n) n^-s against 1/zeta(s); s > 1.
OracleSum dirichlet_mu(const ArithTable& table, double s, std::int64_t N);
/// sum over odd n of beta(n) n^-s against zeta_imp(2s-1)/zeta_imp(s); s > 3/2.
OracleSum dirichlet_beta(const ArithTable& table, double s, std::int64_t N);
/// sum nu(n) n^-s against zeta_beta(s + 3/2)/zeta_imp(s + 1); s > 0.
OracleSum dirichlet_nu(const ArithTable& table, double s, std::int64_t N);

/// sum_{n > N} n^-a for a > 1.
double power_tail_bound(double a, std::int64_t N);
/// sum_{n > N} d(n) n^-a for a > 1, from sum_{n<=x} d(n) <= x (log x + 1).
double divisor_tail_bound(double a, std::int64_t N);

}  // namespace liouville
