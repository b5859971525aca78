#include "liouville/special.hpp"

#include "liouville/errors.hpp"

#include <array>
#include <cmath>
#include <string>

namespace liouville {

namespace {

// Lanczos coefficients for g = 607/128 with 14 partial-fraction terms, as
// tabulated for gammln in Numerical Recipes, 3rd ed. (Press et al., 2007, 6.1).
// Relative error of the real-axis log-gamma is below 1e-15.
constexpr double kLanczosShift = 5.24218750000000000;  // g + 1/2
constexpr double kLanczosBase = 0.999999999999997092;
constexpr std::array<double, 14> kLanczosCoef = {
    57.1562356658629235,      -59.5979603554754912,     14.1360979747417471,
    -0.491913816097620199,    0.339946499848118887e-4,  0.465236289270485756e-4,
    -0.983744753048795646e-4, 0.158088703224912494e-3,  -0.210264441724104883e-3,
    0.217439618115212643e-3,  -0.164318106536763890e-3, 0.844182239838527433e-4,
    -0.261908384015814087e-4, 0.368991826595316234e-5};
constexpr double kSqrtTwoPi = 2.5066282746310005;

const double kLn2 = std::log(2.0);

Complex log_gamma_lanczos(Complex x) {
    Complex tmp = x + kLanczosShift;
    tmp = (x + 0.5) * std::log(tmp) - tmp;
    Complex ser = kLanczosBase;
    Complex y = x;
    for (double c : kLanczosCoef) {
        y += 1.0;
        ser += c / y;
    }
    return tmp + std::log(kSqrtTwoPi * ser / x);
}

bool is_nonpositive_integer(Complex s) {
    return s.imag() == 0.0 && s.real() <= 0.0 && s.real() == std::floor(s.real());
}

// Cohen-Rodriguez Villegas-Zagier acceleration of sum (-1)^k (k+1)^-s.
Complex eta_accelerated(Complex s, int n) {
    double d = std::pow(3.0 + std::sqrt(8.0), n);
    d = (d + 1.0 / d) / 2.0;
    double b = -1.0;
    double c = -d;
    Complex sum = 0.0;
    const double nn = n;
    for (int k = 0; k < n; ++k) {
        c = b - c;
        sum += c * std::exp(-s * std::log(static_cast<double>(k + 1)));
        b = (k + nn) * (k - nn) * b / ((k + 0.5) * (k + 1.0));
    }
    return sum / d;
}

// B_2k / (2k)!
constexpr std::array<double, 15> kBernoulliRatio = {
    0.08333333333333333,    -0.001388888888888889,   3.306878306878307e-05,
    -8.267195767195768e-07, 2.08767569878681e-08,    -5.284190138687493e-10,
    1.3382536530684679e-11, -3.3896802963225827e-13, 8.586062056277845e-15,
    -2.174868698558062e-16, 5.5090028283602295e-18,  -1.3954464685812522e-19,
    3.534707039629467e-21,  -8.953517427037546e-23,  2.267952452337683e-24};

// Euler-Maclaurin with cutoff N > |s| + 20, so the correction terms shrink like (2 pi)^-2k.
Complex zeta_euler_maclaurin(Complex s) {
    const int cutoff = 20 + static_cast<int>(std::ceil(std::abs(s)));
    const double n = cutoff;
    Complex sum = 0.0;
    for (int k = cutoff - 1; k >= 1; --k) sum += std::exp(-s * std::log(static_cast<double>(k)));
    const Complex n_pow = std::exp(-s * std::log(n));
    sum += n_pow * n / (s - 1.0) + 0.5 * n_pow;
    Complex rising = s;
    Complex power = n_pow / n;
    for (std::size_t k = 0; k < kBernoulliRatio.size(); ++k) {
        sum += kBernoulliRatio[k] * rising * power;
        rising *= (s + static_cast<double>(2 * k + 1)) * (s + static_cast<double>(2 * k + 2));
        power /= n * n;
    }
    return sum;
}

Complex zeta_impl(Complex s, const EvalConfig& config) {
    if (s == Complex(1.0, 0.0)) throw PoleError("zeta has a pole at s = 1", s);
    if (s.real() >= 0.0) {
        const Complex den = 1.0 - std::exp((1.0 - s) * kLn2);
        if (std::abs(den) >= 1e-3) return eta_accelerated(s, alternating_order(s, config)) / den;
        return zeta_euler_maclaurin(s);
    }
    const Complex one_minus = 1.0 - s;
    const Complex factor = std::exp(s * kLn2) * std::exp((s - 1.0) * std::log(kPi)) *
                           sin_pi(0.5 * s) * complex_gamma(one_minus);
    if (factor == Complex(0.0, 0.0)) return {0.0, 0.0};
    return factor * zeta_impl(one_minus, config);
}

}  // namespace

int alternating_order(Complex s, const EvalConfig& config) {
    // Borwein-type bound: |error| <= 3 (1 + 2|t|) e^(pi |t| / 2) / (3 + sqrt 8)^n.
    const double t = std::fabs(s.imag());
    const double prefactor = 3.0 * (1.0 + 2.0 * t) * std::exp(kPi * t / 2.0);
    const double needed =
        std::ceil(std::log(prefactor / config.target_rel_err) / std::log(3.0 + std::sqrt(8.0)));
    const int cap = std::min(config.series_terms, 380);
    const int order = std::max(config.accel_order, static_cast<int>(needed));
    if (order > cap) {
        throw DomainError("imaginary part " + std::to_string(s.imag()) +
                          " needs acceleration order " + std::to_string(order) +
                          " beyond series_terms cap " + std::to_string(cap));
    }
    return order;
}

Complex complex_gamma(Complex s) {
    require_finite(s, "gamma argument");
    if (is_nonpositive_integer(s)) {
        throw PoleError("gamma has a pole at s = " + std::to_string(static_cast<long long>(s.real())),
                        s);
    }
    if (s.real() < 0.5) {
        return kPi / (sin_pi(s) * complex_gamma(1.0 - s));
    }
    if (s.imag() == 0.0) {
        return {std::exp(log_gamma_lanczos(s).real()), 0.0};
    }
    return std::exp(log_gamma_lanczos(s));
}

Complex zeta_alternating(Complex s, const EvalConfig& config) {
    config.validate();
    require_finite(s, "zeta_alternating argument");
    if (!(s.real() > 0.0)) {
        throw DomainError("alternating series requires Re s > 0; use the functional equation");
    }
    return eta_accelerated(s, alternating_order(s, config));
}

Complex zeta(Complex s, const EvalConfig& config) {
    config.validate();
    require_finite(s, "zeta argument");
    return require_finite(zeta_impl(s, config), "zeta value");
}

}  // namespace liouville
