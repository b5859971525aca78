#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace liouville {

class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class RangeError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Allocation of a table or buffer failed.
class ResourceError : public std::runtime_error {
public:
    ResourceError(const std::string& what, std::size_t requested_bytes)
        : std::runtime_error(what), requested_bytes_(requested_bytes) {}
    std::size_t requested_bytes() const noexcept { return requested_bytes_; }

private:
    std::size_t requested_bytes_;
};

/// Evaluation at (or within the proximity threshold of) a pole.
class PoleError : public std::domain_error {
public:
    PoleError(const std::string& what, std::complex<double> location)
        : std::domain_error(what), location_(location) {}
    std::complex<double> location() const noexcept { return location_; }

private:
    std::complex<double> location_;
};

/// A quotient whose denominator is indistinguishable from zero.
class NearZeroDenominator : public std::runtime_error {
public:
    NearZeroDenominator(const std::string& what, std::complex<double> numerator,
                        std::complex<double> denominator)
        : std::runtime_error(what), numerator_(numerator), denominator_(denominator) {}
    std::complex<double> numerator() const noexcept { return numerator_; }
    std::complex<double> denominator() const noexcept { return denominator_; }

private:
    std::complex<double> numerator_;
    std::complex<double> denominator_;
};

/// The table ran out before a series remainder dropped below its tolerance.
class TruncationBudgetError : public std::runtime_error {
public:
    TruncationBudgetError(const std::string& what, double achieved_bound)
        : std::runtime_error(what), achieved_bound_(achieved_bound) {}
    double achieved_bound() const noexcept { return achieved_bound_; }

private:
    double achieved_bound_;
};

/// Richardson extrapolation of a limit did not settle.
class EstimationFailure : public std::runtime_error {
public:
    EstimationFailure(const std::string& what, std::vector<std::complex<double>> sequence)
        : std::runtime_error(what), sequence_(std::move(sequence)) {}
    const std::vector<std::complex<double>>& sequence() const noexcept { return sequence_; }

private:
    std::vector<std::complex<double>> sequence_;
};

/// Corrupt or mismatched table cache file.
class TableFormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace liouville
