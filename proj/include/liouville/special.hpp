#pragma once

#include "liouville/complex.hpp"
#include "liouville/eval_config.hpp"

namespace liouville {

/// Complex Gamma. Lanczos approximation for Re s >= 1/2, reflection below.
/// Throws PoleError at non-positive integers.
Complex complex_gamma(Complex s);

/// Alternating zeta sum_{n>=1} (-1)^(n-1) n^-s, accelerated. Requires Re s > 0.
Complex zeta_alternating(Complex s, const EvalConfig& config = {});

/// Riemann zeta on C \ {1}.
///
/// Re s >= 0 goes through the alternating series, zeta = eta / (1 - 2^(1-s)),
/// except where |1 - 2^(1-s)| < 1e-3 (near s = 1 + 2 pi i k / ln 2), which use
/// Euler-Maclaurin summation. Re s < 0 uses the reflection
///   zeta(s) = 2^s pi^(s-1) sin(pi s / 2) Gamma(1-s) zeta(1-s),
/// which gives exact zeros at the negative even integers.
Complex zeta(Complex s, const EvalConfig& config = {});

/// Acceleration order used for a given s (exposed for tests and manifests).
int alternating_order(Complex s, const EvalConfig& config);

}  // namespace liouville
