#include "liouville/dirichlet_oracles.hpp"

#include "liouville/errors.hpp"
#include "liouville/special.hpp"
#include "liouville/zeta_family.hpp"

#include <cmath>
#include <string>

namespace liouville {

namespace {

void check_range(const ArithTable& table, std::int64_t N, const char* what) {
    if (N < 1 || N > table.limit()) {
        throw RangeError(std::string(what) + ": N = " + std::to_string(N) + " outside 1.." +
                         std::to_string(table.limit()));
    }
}

template <typename Coefficient>
double reverse_sum(std::int64_t N, double s, Coefficient c) {
    double acc = 0.0;
    for (std::int64_t n = N; n >= 1; --n) {
        const double a = c(n);
        if (a != 0.0) acc += a * std::pow(static_cast<double>(n), -s);
    }
    return acc;
}

}  // namespace

double power_tail_bound(double a, std::int64_t N) {
    if (!(a > 1.0)) throw DomainError("power_tail_bound requires a > 1");
    return std::pow(static_cast<double>(N), 1.0 - a) / (a - 1.0);
}

double divisor_tail_bound(double a, std::int64_t N) {
    if (!(a > 1.0)) throw DomainError("divisor_tail_bound requires a > 1");
    // sum_{n>N} d(n) n^-a <= a int_N^inf (log x + 1) x^-a dx
    const double x = static_cast<double>(N);
    const double b = a - 1.0;
    const double p = std::pow(x, -b);
    return a * (p * std::log(x) / b + p / (b * b) + p / b);
}

OracleSum dirichlet_lambda(const ArithTable& table, double s, std::int64_t N) {
    check_range(table, N, "dirichlet_lambda");
    if (!(s > 1.0)) throw DomainError("dirichlet_lambda requires s > 1");
    const auto lambda = table.lambda();
    OracleSum out;
    out.terms = N;
    out.partial = reverse_sum(N, s, [&](std::int64_t n) { return double(lambda[std::size_t(n)]); });
    out.closed_form = zeta_lambda(s).real();
    out.tail_bound = power_tail_bound(s, N);
    return out;
}

OracleSum dirichlet_mu(const ArithTable& table, double s, std::int64_t N) {
    check_range(table, N, "dirichlet_mu");
    if (!(s > 1.0)) throw DomainError("dirichlet_mu requires s > 1");
    const auto mu = table.mu();
    OracleSum out;
    out.terms = N;
    out.partial = reverse_sum(N, s, [&](std::int64_t n) { return double(mu[std::size_t(n)]); });
    out.closed_form = zeta_mu(s).real();
    out.tail_bound = power_tail_bound(s, N);
    return out;
}

OracleSum dirichlet_beta(const ArithTable& table, double s, std::int64_t N) {
    check_range(table, N, "dirichlet_beta");
    if (!(s > 1.5)) throw DomainError("dirichlet_beta requires s > 3/2");
    const auto beta = table.beta_column();
    OracleSum out;
    out.terms = N;
    out.partial = reverse_sum(N, s, [&](std::int64_t n) { return double(beta[std::size_t(n)]); });
    out.closed_form = zeta_beta(s).real();
    // |beta(n)| <= sqrt(n); over odd n > N the sum is at most the first term plus half the integral.
    const std::int64_t m = (N % 2 == 0) ? N + 1 : N + 2;
    const double a = s - 0.5;
    out.tail_bound = std::pow(static_cast<double>(m), -a) +
                     0.5 * std::pow(static_cast<double>(m), 1.0 - a) / (a - 1.0);
    return out;
}

OracleSum dirichlet_nu(const ArithTable& table, double s, std::int64_t N) {
    check_range(table, N, "dirichlet_nu");
    if (!(s > 0.0)) throw DomainError("dirichlet_nu requires s > 0");
    const auto nu = table.nu_column();
    OracleSum out;
    out.terms = N;
    out.partial = reverse_sum(N, s, [&](std::int64_t n) { return nu[std::size_t(n)]; });
    out.closed_form = zeta_nu(s).real();
    // |nu(n)| <= d(n)/n
    out.tail_bound = divisor_tail_bound(s + 1.0, N);
    return out;
}

}  // namespace liouville
