#pragma once

#include "liouville/complex.hpp"
#include "liouville/eval_config.hpp"

namespace liouville {

// Dirichlet functions built from zeta and Gamma in closed form. None of them sums
// its own Dirichlet series; the truncated sums live in dirichlet_oracles.hpp and
// serve only as independent checks.

/// Continued alternating zeta (1 - 2^(1-s)) zeta(s); accelerated series for Re s >= 0.
Complex zeta_a(Complex s, const EvalConfig& config = {});

/// Sum over odd integers: (1 - 2^-s) zeta(s).
Complex zeta_imp(Complex s, const EvalConfig& config = {});

/// Liouville generating function zeta(2s) / zeta(s).
Complex zeta_lambda(Complex s, const EvalConfig& config = {});

/// Moebius generating function 1 / zeta(s).
Complex zeta_mu(Complex s, const EvalConfig& config = {});

enum class AlphaMode { definition, lambda_relation };

/// zeta_a(2s) / zeta_a(s), either directly or as
/// zeta_lambda(s) (1 - 2^(1-2s)) / (1 - 2^(1-s)).
Complex zeta_alpha(Complex s, AlphaMode mode = AlphaMode::definition, const EvalConfig& config = {});

/// zeta_imp(2s - 1) / zeta_imp(s), the generating function of beta.
Complex zeta_beta(Complex s, const EvalConfig& config = {});

/// zeta_beta(s + 3/2) / zeta_imp(s + 1), the generating function of nu.
Complex zeta_nu(Complex s, const EvalConfig& config = {});

/// -2 pi^(s-1) sin(pi s / 2) Gamma(1-s) zeta_imp(1-s); equals zeta_a(s). Requires Re s < 1.
Complex functional_eq_rhs_zeta_a(Complex s, const EvalConfig& config = {});

/// 2^(1-2s) pi^(s-1/2) cos(pi s / 2) Gamma(1/2 - s) zeta_beta(1-s); equals zeta_alpha(s).
/// Requires Re s < 1/2.
Complex functional_eq_rhs_zeta_alpha(Complex s, const EvalConfig& config = {});

/// (2^(1-2s) / pi) cos(pi s / 2) cos(pi s / 2 + pi / 4) Gamma(1/2 - s), the prefactor of
/// the Mellin-type representation of zeta_alpha.
Complex mellin_prefactor(Complex s);

/// num / den, throwing NearZeroDenominator when |den| < zero_threshold * max(|num|, 1).
Complex guarded_divide(Complex num, Complex den, const EvalConfig& config, const char* what);

}  // namespace liouville
