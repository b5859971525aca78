#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace liouville {

/// Sieve-backed values of lambda, mu, d, beta, nu and the partial sums of nu on 1..limit.
///
/// Arrays are indexed directly by n; slot 0 is unused and holds zero. beta and nu
/// are zero at even n so that Dirichlet sums over the full range need no parity
/// test. A built table is immutable and safe to share between threads.
class ArithTable {
public:
    /// Builds all columns with a smallest-prime-factor sieve.
    /// Throws InvalidArgument for limit < 1 and ResourceError if allocation fails.
    static ArithTable build(std::int64_t limit);

    std::int64_t limit() const noexcept { return limit_; }

    // Point queries. All throw RangeError outside 1..limit.
    int liouville(std::int64_t n) const;
    int mobius(std::int64_t n) const;
    std::uint32_t divisor_count(std::int64_t n) const;
    /// Throws DomainError for even n; beta is only defined on odd integers.
    int beta(std::int64_t n) const;
    double nu(std::int64_t n) const;
    /// S(n) = sum_{m <= n} nu(m).
    double nu_partial_sum(std::int64_t n) const;
    std::uint32_t smallest_prime_factor(std::int64_t n) const;

    /// max |S(m)| over m in [n, limit]; the empirical envelope used for
    /// summation-by-parts remainders.
    double nu_sum_envelope(std::int64_t n) const;

    // Whole-column views, index n at position n.
    std::span<const std::uint32_t> spf() const noexcept { return spf_; }
    std::span<const std::int8_t> lambda() const noexcept { return lambda_; }
    std::span<const std::int8_t> mu() const noexcept { return mu_; }
    std::span<const std::uint32_t> dcount() const noexcept { return dcount_; }
    std::span<const std::int32_t> beta_column() const noexcept { return beta_; }
    std::span<const double> nu_column() const noexcept { return nu_; }
    std::span<const double> nu_cumsum() const noexcept { return nu_cumsum_; }

    /// Binary cache with header "ARITHv1", the limit and a CRC-32 of the payload.
    void save(const std::filesystem::path& path) const;
    /// Throws TableFormatError on a bad magic, size or checksum.
    static ArithTable load(const std::filesystem::path& path);

private:
    ArithTable() = default;
    void allocate(std::int64_t limit);
    void finish_derived();
    void compute_envelope();

    std::int64_t limit_ = 0;
    std::vector<std::uint32_t> spf_;
    std::vector<std::int8_t> lambda_;
    std::vector<std::int8_t> mu_;
    std::vector<std::uint32_t> dcount_;
    std::vector<std::int32_t> beta_;
    std::vector<double> nu_;
    std::vector<double> nu_cumsum_;
    std::vector<double> envelope_;
};

/// Free-function spelling of ArithTable::build.
inline ArithTable build_table(std::int64_t limit) { return ArithTable::build(limit); }

/// Prime factorization (prime, exponent) of n by repeated smallest-prime-factor division.
std::vector<std::pair<std::uint32_t, int>> factorize(const ArithTable& table, std::int64_t n);

}  // namespace liouville
