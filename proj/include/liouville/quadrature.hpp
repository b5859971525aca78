#pragma once

#include "liouville/arith_table.hpp"
#include "liouville/complex.hpp"
#include "liouville/kernels.hpp"

#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>

namespace liouville {

struct QuadratureSpec {
    /// Boundary between the double-exponential region (0, split] and the tail panels.
    double split_point = 1.0;
    /// Step 2^-de_levels in the tanh-sinh variable.
    int de_levels = 6;
    /// Ratio between consecutive panel endpoints on [split, inf).
    double panel_growth = 2.0;
    /// Gauss-Legendre order per panel; the embedded estimate uses half as many nodes.
    int panel_nodes = 32;
    /// Stop after two consecutive panels contribute less than this fraction of the total.
    double tail_stop_rel = 1e-9;
    int max_panels = 400;

    void validate() const;
};

struct IntegralResult {
    Complex value;
    /// Level-difference estimate on (0, split] plus embedded-rule differences on the panels.
    double est_error = 0.0;
    /// Bound on the integral over the discarded range beyond the last panel.
    double tail_bound = 0.0;
    /// Integrated truncation bounds reported by the integrand at each node.
    double truncation_bound = 0.0;
    int panels_used = 0;
    /// Right end of the last panel.
    double upper_limit = 0.0;
    /// True when tail_bound rests on a decay constant read off the last panel.
    bool tail_bound_empirical = false;
};

class NonConvergence : public std::runtime_error {
public:
    NonConvergence(const std::string& what, IntegralResult partial)
        : std::runtime_error(what), partial_(partial) {}
    const IntegralResult& partial() const noexcept { return partial_; }

private:
    IntegralResult partial_;
};

struct Sample {
    Complex value;
    double trunc_bound = 0.0;
};

/// Fills out[i] with the integrand at xs[i]. Must be pure.
using BatchEvaluator = std::function<void(std::span<const double> xs, std::span<Sample> out)>;

enum class TailModel {
    /// |f(x)| <= C x^-decay_power
    power,
    /// |f(x)| <= C exp(-decay_power x)
    exponential,
};

struct MellinIntegrand {
    BatchEvaluator eval;
    TailModel tail = TailModel::power;
    double decay_power = 1.0;
    /// Known C; when absent, C = max |f(x)| x^p over the last panel (empirical).
    std::optional<double> decay_constant;
};

/// Integral of f(x) x^exponent over (0, inf).
/// head replaces f on (0, split] when provided.
IntegralResult integrate_power_weighted(const MellinIntegrand& f, Complex exponent,
                                        const QuadratureSpec& spec,
                                        const BatchEvaluator* head = nullptr);

/// Integral of f(x) x^(s - 1/2) over (0, inf) for -3/2 < Re s < 1/2.
IntegralResult integrate_mellin(const MellinIntegrand& f, Complex s, const QuadratureSpec& spec);

/// Integral of t^(s-1) / (e^t + 1) over (0, inf), which is Gamma(s) zeta_a(s).
/// For -1 < Re s < 0 the kernel 1/(e^t + 1) - 1/2 is integrated instead.
IntegralResult integrate_gamma_zeta_a(Complex s, const QuadratureSpec& spec);

enum class IntegrandKind {
    N,
    /// -sum nu(n) fermi(x/n)
    M_plain,
    M_half_shifted,
    /// N up to splice_point, plain M beyond
    spliced,
};

/// Kernel integrand with a memo of kernel values keyed by x, shared by all copies,
/// so that repeated integrals over the same nodes evaluate each kernel once.
/// The tail model is C/x with C read off the last panel.
MellinIntegrand make_kernel_integrand(IntegrandKind kind, const ArithTable& table,
                                      const KernelConfig& config, double splice_point = 3.0);

}  // namespace liouville
