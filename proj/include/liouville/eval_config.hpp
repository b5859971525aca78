#pragma once

#include <cstdint>

namespace liouville {

/// Truncation and tolerance knobs shared by the series evaluators.
struct EvalConfig {
    /// Hard cap on the number of alternating-series terms.
    int series_terms = 400;
    /// Minimum order of the alternating-series acceleration.
    int accel_order = 50;
    double target_rel_err = 1e-15;
    /// Quotients with |den| < zero_threshold * max(|num|, 1) are rejected.
    double zero_threshold = 1e-13;

    /// Throws InvalidArgument if a field is out of range.
    void validate() const;
};

}  // namespace liouville
