#include "liouville/zeta_family.hpp"

#include "liouville/errors.hpp"
#include "liouville/special.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace liouville {

namespace {

const double kLn2 = std::log(2.0);
const double kLnPi = std::log(kPi);

Complex pow2(Complex w) { return std::exp(w * kLn2); }

void reject_pole(Complex s, Complex pole, const char* what) {
    if (s == pole) throw PoleError(std::string(what) + " has a pole at s = " + format_complex(pole), s);
}

}  // namespace

Complex guarded_divide(Complex num, Complex den, const EvalConfig& config, const char* what) {
    if (std::abs(den) < config.zero_threshold * std::max(std::abs(num), 1.0)) {
        throw NearZeroDenominator(std::string(what) + ": denominator " + format_complex(den) +
                                      " indistinguishable from zero",
                                  num, den);
    }
    return num / den;
}

Complex zeta_a(Complex s, const EvalConfig& config) {
    require_finite(s, "zeta_a argument");
    if (s.real() > 0.0) return zeta_alternating(s, config);
    return (1.0 - pow2(1.0 - s)) * zeta(s, config);
}

Complex zeta_imp(Complex s, const EvalConfig& config) {
    reject_pole(s, 1.0, "zeta_imp");
    return (1.0 - pow2(-s)) * zeta(s, config);
}

Complex zeta_lambda(Complex s, const EvalConfig& config) {
    reject_pole(s, 1.0, "zeta_lambda");
    reject_pole(s, 0.5, "zeta_lambda");
    return guarded_divide(zeta(2.0 * s, config), zeta(s, config), config, "zeta_lambda");
}

Complex zeta_mu(Complex s, const EvalConfig& config) {
    return guarded_divide(1.0, zeta(s, config), config, "zeta_mu");
}

Complex zeta_alpha(Complex s, AlphaMode mode, const EvalConfig& config) {
    if (mode == AlphaMode::definition) {
        return guarded_divide(zeta_a(2.0 * s, config), zeta_a(s, config), config, "zeta_alpha");
    }
    const Complex num = zeta_lambda(s, config) * (1.0 - pow2(1.0 - 2.0 * s));
    return guarded_divide(num, 1.0 - pow2(1.0 - s), config, "zeta_alpha (lambda relation)");
}

Complex zeta_beta(Complex s, const EvalConfig& config) {
    reject_pole(s, 1.0, "zeta_beta");
    return guarded_divide(zeta_imp(2.0 * s - 1.0, config), zeta_imp(s, config), config, "zeta_beta");
}

Complex zeta_nu(Complex s, const EvalConfig& config) {
    return guarded_divide(zeta_beta(s + 1.5, config), zeta_imp(s + 1.0, config), config, "zeta_nu");
}

Complex functional_eq_rhs_zeta_a(Complex s, const EvalConfig& config) {
    require_finite(s, "functional_eq_rhs_zeta_a argument");
    if (!(s.real() < 1.0)) throw DomainError("functional_eq_rhs_zeta_a requires Re s < 1");
    const Complex trig = sin_pi(0.5 * s);
    const Complex g = complex_gamma(1.0 - s);
    if (trig == Complex(0.0, 0.0)) return {0.0, 0.0};
    return -2.0 * std::exp((s - 1.0) * kLnPi) * trig * g * zeta_imp(1.0 - s, config);
}

Complex functional_eq_rhs_zeta_alpha(Complex s, const EvalConfig& config) {
    require_finite(s, "functional_eq_rhs_zeta_alpha argument");
    if (!(s.real() < 0.5)) throw DomainError("functional_eq_rhs_zeta_alpha requires Re s < 1/2");
    const Complex trig = cos_pi(0.5 * s);
    const Complex g = complex_gamma(0.5 - s);
    if (trig == Complex(0.0, 0.0)) return {0.0, 0.0};
    return pow2(1.0 - 2.0 * s) * std::exp((s - 0.5) * kLnPi) * trig * g * zeta_beta(1.0 - s, config);
}

Complex mellin_prefactor(Complex s) {
    require_finite(s, "mellin_prefactor argument");
    // cos(pi s/2 + pi/4) = cos(pi (s/2 + 1/4))
    return pow2(1.0 - 2.0 * s) / kPi * cos_pi(0.5 * s) * cos_pi(0.5 * s + 0.25) * complex_gamma(0.5 - s);
}

}  // namespace liouville
