#include "liouville/quadrature.hpp"

#include "liouville/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

namespace liouville {

namespace {

const double kInf = std::numeric_limits<double>::infinity();
constexpr double kSmallestNode = 1e-290;
constexpr double kDeRightEnd = 3.5;
constexpr double kRoundingFloor = 8.0 * std::numeric_limits<double>::epsilon();

struct GaussRule {
    std::vector<double> nodes;  // on [-1, 1]
    std::vector<double> weights;
};

GaussRule compute_gauss_rule(int n) {
    GaussRule rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            if (n == 1) p0 = 1.0;
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::fabs(dx) < 1e-16) break;
        }
        // recompute the derivative at the converged node
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
            const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[static_cast<std::size_t>(i)] = -x;
        rule.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
        rule.weights[static_cast<std::size_t>(i)] = w;
        rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
    }
    return rule;
}

const GaussRule& gauss_rule(int n) {
    static std::mutex mutex;
    static std::map<int, GaussRule> rules;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = rules.find(n);
    if (it == rules.end()) it = rules.emplace(n, compute_gauss_rule(n)).first;
    return it->second;
}

// x^exponent * dx/dt, assembled in logarithms so tiny x with negative exponents cannot overflow.
Complex scaled_weight(Complex exponent, double log_x, double log_jacobian) {
    return std::exp(exponent * log_x + log_jacobian);
}

struct DeResult {
    Complex fine;
    Complex coarse;
    double truncation = 0.0;
    /// sum of |terms|, for the rounding floor
    double magnitude = 0.0;
};

// tanh-sinh on (0, a]: x = a / (1 + exp(-2u)), u = (pi/2) sinh t.
DeResult tanh_sinh(const BatchEvaluator& eval, Complex exponent, double a, int level) {
    const double h = std::ldexp(1.0, -level);
    const double t_left = std::asinh(std::log(kSmallestNode / a) / kPi);
    const auto j_min = static_cast<long>(std::ceil(t_left / h));
    const auto j_max = static_cast<long>(std::floor(kDeRightEnd / h));

    std::vector<double> xs;
    std::vector<double> log_xs;
    std::vector<double> log_jac;
    std::vector<long> index;
    const double log_a = std::log(a);
    for (long j = j_min; j <= j_max; ++j) {
        const double t = static_cast<double>(j) * h;
        const double u = 0.5 * kPi * std::sinh(t);
        const double q = std::exp(-2.0 * std::fabs(u));
        double x, log_x;
        if (u >= 0.0) {
            x = a / (1.0 + q);
            log_x = log_a - std::log1p(q);
        } else {
            x = a * q / (1.0 + q);
            log_x = log_a + 2.0 * u - std::log1p(q);
        }
        if (!(x > 0.0)) continue;
        xs.push_back(x);
        log_xs.push_back(log_x);
        log_jac.push_back(std::log(a * kPi * std::cosh(t)) - 2.0 * std::fabs(u) - 2.0 * std::log1p(q));
        index.push_back(j);
    }
    std::vector<Sample> samples(xs.size());
    eval(xs, samples);

    DeResult out;
    Complex fine_sum = 0.0, coarse_sum = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const Complex w = scaled_weight(exponent, log_xs[i], log_jac[i]);
        const Complex term = samples[i].value * w;
        fine_sum += term;
        out.magnitude += h * std::abs(term);
        if (index[i] % 2 == 0) coarse_sum += term;
        out.truncation += h * std::abs(w) * samples[i].trunc_bound;
    }
    out.fine = h * fine_sum;
    out.coarse = 2.0 * h * coarse_sum;
    return out;
}

double tail_integral_bound(TailModel model, double C, double p, double sigma, double X) {
    if (C == 0.0) return 0.0;
    if (model == TailModel::power) {
        if (p - sigma <= 1.0) return kInf;
        return C * std::pow(X, sigma - p + 1.0) / (p - sigma - 1.0);
    }
    const double base = C * std::pow(X, sigma) * std::exp(-p * X);
    if (sigma <= 0.0) return base / p;
    if (p * X <= sigma) return kInf;
    return base / (p - sigma / X);
}

}  // namespace

void QuadratureSpec::validate() const {
    if (!(split_point > 0.0) || !std::isfinite(split_point)) throw InvalidArgument("split_point must be positive");
    if (de_levels < 1 || de_levels > 12) throw InvalidArgument("de_levels must lie in 1..12");
    if (!(panel_growth > 1.0)) throw InvalidArgument("panel_growth must exceed 1");
    if (panel_nodes < 2 || panel_nodes > 256) throw InvalidArgument("panel_nodes must lie in 2..256");
    if (!(tail_stop_rel > 0.0)) throw InvalidArgument("tail_stop_rel must be positive");
    if (max_panels < 1) throw InvalidArgument("max_panels must be positive");
}

IntegralResult integrate_power_weighted(const MellinIntegrand& f, Complex exponent,
                                        const QuadratureSpec& spec, const BatchEvaluator* head) {
    spec.validate();
    if (!f.eval) throw InvalidArgument("integrand has no evaluator");
    const double a = spec.split_point;

    IntegralResult result;
    const DeResult de = tanh_sinh(head ? *head : f.eval, exponent, a, spec.de_levels);
    result.value = de.fine;
    result.est_error = std::abs(de.fine - de.coarse);
    double magnitude = de.magnitude;
    result.truncation_bound = de.truncation;

    double ratio = spec.panel_growth;
    if (exponent.imag() != 0.0) ratio = std::min(ratio, std::exp(kPi / (4.0 * std::fabs(exponent.imag()))));
    const double log_ratio = std::log(ratio);
    const GaussRule& full = gauss_rule(spec.panel_nodes);
    const GaussRule& half = gauss_rule(spec.panel_nodes / 2 > 0 ? spec.panel_nodes / 2 : 1);
    const std::size_t n_full = full.nodes.size();
    const std::size_t n_half = half.nodes.size();

    std::vector<double> xs(n_full + n_half);
    std::vector<double> ys(n_full + n_half);
    std::vector<Sample> samples(n_full + n_half);
    double left = a;
    int quiet = 0;
    double last_decay_constant = 0.0;
    for (int panel = 0; panel < spec.max_panels; ++panel) {
        for (std::size_t i = 0; i < n_full; ++i) ys[i] = 0.5 * log_ratio * (full.nodes[i] + 1.0);
        for (std::size_t i = 0; i < n_half; ++i) ys[n_full + i] = 0.5 * log_ratio * (half.nodes[i] + 1.0);
        for (std::size_t i = 0; i < ys.size(); ++i) xs[i] = left * std::exp(ys[i]);
        f.eval(xs, samples);

        // x = left e^y, dx = x dy
        Complex g_full = 0.0, g_half = 0.0;
        double trunc = 0.0;
        double decay = 0.0;
        for (std::size_t i = 0; i < n_full; ++i) {
            const Complex w = std::exp((exponent + 1.0) * std::log(xs[i])) * (0.5 * log_ratio * full.weights[i]);
            g_full += samples[i].value * w;
            magnitude += std::abs(samples[i].value * w);
            trunc += std::abs(w) * samples[i].trunc_bound;
            const double scale = f.tail == TailModel::power ? std::pow(xs[i], f.decay_power)
                                                            : std::exp(f.decay_power * xs[i]);
            decay = std::max(decay, std::abs(samples[i].value) * scale);
        }
        for (std::size_t i = 0; i < n_half; ++i) {
            const std::size_t k = n_full + i;
            const Complex w = std::exp((exponent + 1.0) * std::log(xs[k])) * (0.5 * log_ratio * half.weights[i]);
            g_half += samples[k].value * w;
        }
        result.value += g_full;
        result.est_error += std::abs(g_full - g_half);
        result.truncation_bound += trunc;
        result.panels_used = panel + 1;
        left *= ratio;
        result.upper_limit = left;
        last_decay_constant = decay;

        quiet = std::abs(g_full) <= spec.tail_stop_rel * std::abs(result.value) ? quiet + 1 : 0;
        if (quiet >= 2) {
            result.est_error += kRoundingFloor * magnitude;
            const double C = f.decay_constant.value_or(last_decay_constant);
            result.tail_bound_empirical = !f.decay_constant.has_value();
            result.tail_bound = tail_integral_bound(f.tail, C, f.decay_power, exponent.real(), left);
            return result;
        }
    }
    result.est_error += kRoundingFloor * magnitude;
    result.tail_bound = kInf;
    throw NonConvergence("quadrature panels exhausted before the tail became negligible", result);
}

IntegralResult integrate_mellin(const MellinIntegrand& f, Complex s, const QuadratureSpec& spec) {
    require_finite(s, "integrate_mellin s");
    if (!(s.real() > -1.5 && s.real() < 0.5)) {
        throw DomainError("integrate_mellin requires -3/2 < Re s < 1/2, got s = " + format_complex(s));
    }
    return integrate_power_weighted(f, s - 0.5, spec);
}

IntegralResult integrate_gamma_zeta_a(Complex s, const QuadratureSpec& spec) {
    require_finite(s, "integrate_gamma_zeta_a s");
    MellinIntegrand fermi_kernel;
    fermi_kernel.eval = [](std::span<const double> xs, std::span<Sample> out) {
        for (std::size_t i = 0; i < xs.size(); ++i) {
            const double e = std::exp(-xs[i]);
            out[i] = Sample{e / (1.0 + e), 0.0};
        }
    };
    fermi_kernel.tail = TailModel::exponential;
    fermi_kernel.decay_power = 1.0;
    fermi_kernel.decay_constant = 1.0;

    if (s.real() > 0.0) return integrate_power_weighted(fermi_kernel, s - 1.0, spec);
    if (!(s.real() > -1.0 && s.real() < 0.0)) {
        throw DomainError("integrate_gamma_zeta_a requires Re s > 0 or -1 < Re s < 0, got s = " +
                          format_complex(s));
    }
    const BatchEvaluator subtracted = [](std::span<const double> xs, std::span<Sample> out) {
        for (std::size_t i = 0; i < xs.size(); ++i) out[i] = Sample{-0.5 * std::tanh(0.5 * xs[i]), 0.0};
    };
    IntegralResult r = integrate_power_weighted(fermi_kernel, s - 1.0, spec, &subtracted);
    // the -1/2 removed on (0, a] integrates in closed form over [a, inf)
    const double a = spec.split_point;
    r.value += std::exp(s * std::log(a)) / (2.0 * s);
    return r;
}

MellinIntegrand make_kernel_integrand(IntegrandKind kind, const ArithTable& table,
                                      const KernelConfig& config, double splice_point) {
    config.validate();
    struct Memo {
        std::mutex mutex;
        std::unordered_map<double, Sample> values;
    };
    auto memo = std::make_shared<Memo>();
    const ArithTable* tab = &table;
    MellinIntegrand f;
    f.tail = TailModel::power;
    f.decay_power = 1.0;
    f.eval = [memo, tab, config, kind, splice_point](std::span<const double> xs, std::span<Sample> out) {
        for (std::size_t i = 0; i < xs.size(); ++i) {
            const double x = xs[i];
            {
                std::lock_guard<std::mutex> lock(memo->mutex);
                auto it = memo->values.find(x);
                if (it != memo->values.end()) {
                    out[i] = it->second;
                    continue;
                }
            }
            KernelValue k;
            const bool use_n = kind == IntegrandKind::N || (kind == IntegrandKind::spliced && x <= splice_point);
            if (use_n) {
                k = kernel_N_budgeted(x, *tab, config.n_terms_N);
            } else {
                const MForm form = kind == IntegrandKind::M_half_shifted ? MForm::half_shifted : MForm::plain;
                k = kernel_M_budgeted(x, *tab, config.n_terms_M, form);
            }
            out[i] = Sample{k.value, k.tail_bound};
            std::lock_guard<std::mutex> lock(memo->mutex);
            memo->values.emplace(x, out[i]);
        }
    };
    return f;
}

}  // namespace liouville
