#include "liouville/arith_table.hpp"

#include "liouville/errors.hpp"

#include <algorithm>
#include <cmath>
#include <new>
#include <string>

namespace liouville {

namespace {

void check_range(std::int64_t n, std::int64_t limit) {
    if (n < 1 || n > limit) {
        throw RangeError("index " + std::to_string(n) + " outside table range 1.." +
                         std::to_string(limit));
    }
}

}  // namespace

void ArithTable::allocate(std::int64_t limit) {
    const auto size = static_cast<std::size_t>(limit) + 1;
    const std::size_t bytes = size * (2 * sizeof(std::uint32_t) + 2 * sizeof(std::int8_t) +
                                      sizeof(std::int32_t) + 3 * sizeof(double));
    try {
        limit_ = limit;
        spf_.assign(size, 0);
        lambda_.assign(size, 0);
        mu_.assign(size, 0);
        dcount_.assign(size, 0);
        beta_.assign(size, 0);
        nu_.assign(size, 0.0);
        nu_cumsum_.assign(size, 0.0);
        envelope_.assign(size, 0.0);
    } catch (const std::bad_alloc&) {
        throw ResourceError("cannot allocate arithmetic table for limit " + std::to_string(limit) +
                                " (" + std::to_string(bytes) + " bytes)",
                            bytes);
    } catch (const std::length_error&) {
        throw ResourceError("arithmetic table for limit " + std::to_string(limit) + " is too large",
                            bytes);
    }
}

ArithTable ArithTable::build(std::int64_t limit) {
    if (limit < 1) throw InvalidArgument("table limit must be >= 1");
    if (limit > std::int64_t{4'000'000'000}) throw InvalidArgument("table limit exceeds 32-bit sieve");
    ArithTable t;
    t.allocate(limit);
    const auto N = static_cast<std::size_t>(limit);

    std::vector<std::uint32_t> primes;
    for (std::size_t n = 2; n <= N; ++n) {
        if (t.spf_[n] == 0) {
            t.spf_[n] = static_cast<std::uint32_t>(n);
            primes.push_back(static_cast<std::uint32_t>(n));
        }
        for (std::uint32_t p : primes) {
            const std::size_t m = n * p;
            if (p > t.spf_[n] || m > N) break;
            t.spf_[m] = p;
        }
    }
    t.spf_[1] = 1;

    // exponent of spf(n) in n, the cofactor free of that prime, and the square part h
    // with n = k h^2 (k squarefree).
    std::vector<std::uint8_t> exponent(N + 1, 0);
    std::vector<std::uint32_t> rest(N + 1, 1);
    std::vector<std::uint32_t> square_root_part(N + 1, 1);

    t.lambda_[1] = 1;
    t.mu_[1] = 1;
    t.dcount_[1] = 1;
    for (std::size_t n = 2; n <= N; ++n) {
        const std::uint32_t p = t.spf_[n];
        const std::size_t m = n / p;
        if (m > 1 && t.spf_[m] == p) {
            exponent[n] = static_cast<std::uint8_t>(exponent[m] + 1);
            rest[n] = rest[m];
        } else {
            exponent[n] = 1;
            rest[n] = static_cast<std::uint32_t>(m);
        }
        const int e = exponent[n];
        t.lambda_[n] = static_cast<std::int8_t>(-t.lambda_[m]);
        t.mu_[n] = (e == 1) ? static_cast<std::int8_t>(-t.mu_[m]) : std::int8_t{0};
        t.dcount_[n] = t.dcount_[rest[n]] * static_cast<std::uint32_t>(e + 1);
        square_root_part[n] = square_root_part[m] * ((e % 2 == 0) ? p : 1u);
    }

    // n = k h^2 with k squarefree gives mu(k) = lambda(k) = lambda(n), so beta(n) = lambda(n) h.
    for (std::size_t n = 1; n <= N; n += 2) {
        t.beta_[n] = t.lambda_[n] * static_cast<std::int32_t>(square_root_part[n]);
    }

    // n nu(n) = sum_{k l = n} mu(k) beta(l) / sqrt(l), accumulated in increasing l.
    std::vector<std::uint32_t> odd_squarefree;
    for (std::size_t k = 1; k <= N; k += 2) {
        if (t.mu_[k] != 0) odd_squarefree.push_back(static_cast<std::uint32_t>(k));
    }
    for (std::size_t l = 1; l <= N; l += 2) {
        const double term = t.beta_[l] / std::sqrt(static_cast<double>(l));
        const std::size_t kmax = N / l;
        for (std::uint32_t k : odd_squarefree) {
            if (k > kmax) break;
            t.nu_[k * l] += t.mu_[k] * term;
        }
    }
    for (std::size_t n = 1; n <= N; n += 2) t.nu_[n] /= static_cast<double>(n);

    t.finish_derived();
    return t;
}

void ArithTable::finish_derived() {
    const auto N = static_cast<std::size_t>(limit_);
    nu_cumsum_[0] = 0.0;
    for (std::size_t n = 1; n <= N; ++n) nu_cumsum_[n] = nu_cumsum_[n - 1] + nu_[n];
    compute_envelope();
}

void ArithTable::compute_envelope() {
    const auto N = static_cast<std::size_t>(limit_);
    envelope_[N] = std::fabs(nu_cumsum_[N]);
    for (std::size_t n = N; n-- > 1;) {
        envelope_[n] = std::max(envelope_[n + 1], std::fabs(nu_cumsum_[n]));
    }
}

int ArithTable::liouville(std::int64_t n) const {
    check_range(n, limit_);
    return lambda_[static_cast<std::size_t>(n)];
}

int ArithTable::mobius(std::int64_t n) const {
    check_range(n, limit_);
    return mu_[static_cast<std::size_t>(n)];
}

std::uint32_t ArithTable::divisor_count(std::int64_t n) const {
    check_range(n, limit_);
    return dcount_[static_cast<std::size_t>(n)];
}

int ArithTable::beta(std::int64_t n) const {
    check_range(n, limit_);
    if (n % 2 == 0) throw DomainError("beta is defined on odd integers only, got " + std::to_string(n));
    return beta_[static_cast<std::size_t>(n)];
}

double ArithTable::nu(std::int64_t n) const {
    check_range(n, limit_);
    return nu_[static_cast<std::size_t>(n)];
}

double ArithTable::nu_partial_sum(std::int64_t n) const {
    check_range(n, limit_);
    return nu_cumsum_[static_cast<std::size_t>(n)];
}

std::uint32_t ArithTable::smallest_prime_factor(std::int64_t n) const {
    check_range(n, limit_);
    return spf_[static_cast<std::size_t>(n)];
}

double ArithTable::nu_sum_envelope(std::int64_t n) const {
    check_range(n, limit_);
    return envelope_[static_cast<std::size_t>(n)];
}

std::vector<std::pair<std::uint32_t, int>> factorize(const ArithTable& table, std::int64_t n) {
    std::vector<std::pair<std::uint32_t, int>> factors;
    auto m = static_cast<std::uint64_t>(n);
    table.smallest_prime_factor(n);  // range check
    while (m > 1) {
        const std::uint32_t p = table.spf()[m];
        int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        factors.emplace_back(p, e);
    }
    return factors;
}

}  // namespace liouville
