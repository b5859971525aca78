#include "liouville/kernels.hpp"

#include "liouville/errors.hpp"
#include "liouville/zeta_family.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <mutex>
#include <string>
#include <type_traits>
#include <vector>

namespace liouville {

namespace {

constexpr int kMaxSeriesOrder = 60;
constexpr std::int64_t kStopCheckStride = 4096;
const double kInf = std::numeric_limits<double>::infinity();

void check_pole(Complex z, const char* what) {
    const double k = std::round((z.imag() / kPi - 1.0) / 2.0);
    const Complex pole(0.0, kPi * (2.0 * k + 1.0));
    if (std::abs(z - pole) < kPoleProximity) {
        throw PoleError(std::string(what) + ": argument within 1e-12 of pole " + format_complex(pole),
                        pole);
    }
}

void check_table(const ArithTable& table, std::int64_t n_terms, const char* what) {
    if (n_terms < 1) throw InvalidArgument(std::string(what) + ": term count must be positive");
    if (table.limit() < 2 * n_terms + 1) {
        throw InvalidArgument(std::string(what) + ": table limit " + std::to_string(table.limit()) +
                              " < 2 * " + std::to_string(n_terms) + " + 1");
    }
}

// 1 / cosh^2(u) without overflow.
double sech2(double u) {
    const double e = std::exp(-2.0 * std::fabs(u));
    return 4.0 * e / ((1.0 + e) * (1.0 + e));
}

// Observed sup |S(m)| from the middle of the summed range to the end of the table.
double envelope_after(const ArithTable& table, std::int64_t last) {
    return table.nu_sum_envelope(std::max<std::int64_t>(1, (last + 1) / 2));
}

// Upper bound on sum_{n > L} |g(n) - g(n+1)| for g(n) = tanh(z / 2n) / 2, complex z.
double tanh_variation_bound(Complex z, std::int64_t last) {
    const double r = std::abs(z);
    const double L = static_cast<double>(last);
    if (r / (2.0 * L) > 0.5) return kInf;
    // |sech^2 w| <= 1 / cos^2(1/2) < 1.3 for |w| <= 1/2.
    return 1.3 * r / (4.0 * L);
}

template <typename T>
KernelValue n_sum(T z, const ArithTable& table, std::int64_t n_terms) {
    const auto beta = table.beta_column();
    const std::int64_t n_max = 2 * n_terms + 1;
    T sum{};
    for (std::int64_t n = n_max; n >= 1; n -= 2) {
        const double a = kPi * static_cast<double>(n);
        const double b = beta[static_cast<std::size_t>(n)] / std::sqrt(static_cast<double>(n));
        if constexpr (std::is_same_v<T, double>) {
            sum += b / (z * z + a * a);
        } else {
            // (z - i a)(z + i a) keeps precision near the poles.
            const Complex below(z.real(), z.imag() - a);
            const Complex above(z.real(), z.imag() + a);
            sum += b / (below * above);
        }
    }
    KernelValue out;
    out.value = Complex(2.0 * z * sum);
    out.last_index = n_max;
    const double r = std::abs(z);
    const double a0 = kPi * static_cast<double>(n_max);
    if (r == 0.0) {
        out.tail_bound = 0.0;
    } else if (a0 > r) {
        // 2r sum_{odd n > n_max} 1/(pi^2 n^2 - r^2) <= (1/2pi) log((a0 + r)/(a0 - r))
        out.tail_bound = std::log1p(2.0 * r / (a0 - r)) / (2.0 * kPi);
    } else {
        out.tail_bound = kInf;
    }
    return out;
}

template <typename T>
KernelValue m_half_shifted(T z, const ArithTable& table, std::int64_t n_terms, double stop_tol) {
    const auto nu = table.nu_column();
    const auto S = table.nu_cumsum();
    const std::int64_t n_max = 2 * n_terms + 1;
    const bool monotone = std::is_same_v<T, double>;
    T sum{};
    std::int64_t last = n_max;
    for (std::int64_t n = 1; n <= n_max; n += 2) {
        sum += nu[static_cast<std::size_t>(n)] * std::tanh(z / (2.0 * static_cast<double>(n)));
        if (stop_tol > 0.0 && monotone && (n + 1) % kStopCheckStride == 0 && n < n_max) {
            const double g = std::fabs(std::tanh(z / (2.0 * static_cast<double>(n + 1)))) / 2.0;
            if (envelope_after(table, n) * g < stop_tol) {
                last = n;
                break;
            }
        }
    }
    const T g_next = std::tanh(z / (2.0 * static_cast<double>(last + 1))) / 2.0;
    KernelValue out;
    out.value = Complex(sum / 2.0 - S[static_cast<std::size_t>(last)] * g_next);
    out.last_index = last;
    out.empirical_bound = true;
    const double variation = monotone ? std::abs(g_next) : tanh_variation_bound(Complex(z), last);
    out.tail_bound = envelope_after(table, last) * variation;
    return out;
}

template <typename T>
KernelValue m_plain(T z, const ArithTable& table, std::int64_t n_terms, double stop_tol) {
    const auto S = table.nu_cumsum();
    const std::int64_t n_max = 2 * n_terms + 1;
    const bool monotone = std::is_same_v<T, double>;
    // fermi(z/n) = (1 - tanh(z/2n)) / 2, so fermi(z/(n+2)) - fermi(z/n) = (t_n - t_{n+2}) / 2;
    // S is constant on (n, n+2) for odd n since nu vanishes on even integers.
    T sum{};
    T t_n = std::tanh(z / 2.0);
    std::int64_t last = n_max;
    T t_last = t_n;
    for (std::int64_t n = 1; n + 2 <= n_max; n += 2) {
        const T t_next = std::tanh(z / (2.0 * static_cast<double>(n + 2)));
        sum += S[static_cast<std::size_t>(n)] * (t_n - t_next);
        t_n = t_next;
        t_last = t_next;
        const std::int64_t upto = n + 2;
        if (stop_tol > 0.0 && monotone && (upto + 1) % kStopCheckStride == 0 && upto < n_max) {
            if (envelope_after(table, upto) * std::abs(t_next) / 2.0 < stop_tol) {
                last = upto;
                break;
            }
        }
    }
    KernelValue out;
    out.value = Complex(sum / 2.0);
    out.last_index = last;
    out.empirical_bound = true;
    const double variation = monotone ? std::abs(t_last) / 2.0 : tanh_variation_bound(Complex(z), last);
    out.tail_bound = envelope_after(table, last) * variation;
    return out;
}

KernelValue m_dispatch(Complex z, const ArithTable& table, std::int64_t n_terms, MForm form,
                       double stop_tol) {
    const bool real_nonneg = z.imag() == 0.0 && z.real() >= 0.0;
    if (real_nonneg) {
        return form == MForm::half_shifted ? m_half_shifted(z.real(), table, n_terms, stop_tol)
                                           : m_plain(z.real(), table, n_terms, stop_tol);
    }
    return form == MForm::half_shifted ? m_half_shifted(z, table, n_terms, 0.0)
                                       : m_plain(z, table, n_terms, 0.0);
}

struct SeriesCoefficients {
    std::array<double, kMaxSeriesOrder + 1> n_form{};
    std::array<double, kMaxSeriesOrder + 1> fermi_form{};
};

const SeriesCoefficients& series_coefficients() {
    static const SeriesCoefficients coefficients = [] {
        SeriesCoefficients c;
        for (int k = 0; k <= kMaxSeriesOrder; ++k) {
            const double sign = (k % 2 == 0) ? 1.0 : -1.0;
            const double scale = 2.0 * sign * std::pow(kPi, -(2.0 * k + 2.0));
            c.n_form[k] = scale * zeta_beta(2.0 * k + 2.5).real();
            c.fermi_form[k] = scale * zeta_imp(2.0 * k + 2.0).real();
        }
        return c;
    }();
    return coefficients;
}

Complex odd_series(Complex z, const std::array<double, kMaxSeriesOrder + 1>& coef, int order) {
    const Complex z2 = z * z;
    Complex acc = 0.0;
    for (int k = order; k >= 0; --k) acc = acc * z2 + coef[k];
    return z * acc;
}

}  // namespace

void KernelConfig::validate() const {
    if (n_terms_N < 1 || n_terms_M < 1) throw InvalidArgument("kernel term counts must be positive");
    if (series_order_K < 1 || series_order_K > kMaxSeriesOrder) {
        throw InvalidArgument("series_order_K must lie in 1..60");
    }
    if (!(abel_tail_tol > 0.0)) throw InvalidArgument("abel_tail_tol must be positive");
}

Complex fermi(Complex z) {
    require_finite(z, "fermi argument");
    check_pole(z, "fermi");
    if (z.real() > 30.0) {
        const Complex e = std::exp(-z);
        return e / (1.0 + e);
    }
    if (z.real() < -30.0) {
        const Complex e = std::exp(z);
        return 1.0 - e / (1.0 + e);
    }
    return 1.0 / (std::exp(z) + 1.0);
}

Complex fermi_series(Complex z, int order) {
    if (std::abs(z) >= kPi) throw DomainError("fermi power series requires |z| < pi");
    if (order < 0 || order > kMaxSeriesOrder) throw InvalidArgument("series order must lie in 0..60");
    return 0.5 - odd_series(z, series_coefficients().fermi_form, order);
}

KernelValue kernel_N_budgeted(Complex z, const ArithTable& table, std::int64_t n_terms) {
    check_table(table, n_terms, "kernel_N");
    check_pole(z, "kernel_N");
    if (z.imag() == 0.0) return n_sum(z.real(), table, n_terms);
    return n_sum(z, table, n_terms);
}

KernelValue kernel_N(Complex z, const ArithTable& table, const KernelConfig& config) {
    config.validate();
    require_finite(z, "kernel_N argument");
    return kernel_N_budgeted(z, table, config.n_terms_N);
}

Complex kernel_N_series(Complex z, const KernelConfig& config) {
    config.validate();
    if (std::abs(z) >= kPi) throw DomainError("kernel_N_series requires |z| < pi");
    return odd_series(z, series_coefficients().n_form, config.series_order_K);
}

double kernel_N_series_coefficient(int k) {
    if (k < 0 || k > kMaxSeriesOrder) throw InvalidArgument("coefficient index must lie in 0..60");
    return series_coefficients().n_form[k];
}

double kernel_M_series_coefficient(int k) {
    if (k < 0 || k > kMaxSeriesOrder) throw InvalidArgument("coefficient index must lie in 0..60");
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    const double product = (zeta_imp(2.0 * k + 2.0) * zeta_nu(2.0 * k + 1.0)).real();
    return 2.0 * sign * std::pow(kPi, -(2.0 * k + 2.0)) * product;
}

KernelValue kernel_M_budgeted(Complex z, const ArithTable& table, std::int64_t n_terms, MForm form) {
    check_table(table, n_terms, "kernel_M");
    check_pole(z, "kernel_M");
    return m_dispatch(z, table, n_terms, form, 0.0);
}

KernelValue kernel_M(Complex z, const ArithTable& table, const KernelConfig& config, MForm form) {
    config.validate();
    require_finite(z, "kernel_M argument");
    check_table(table, config.n_terms_M, "kernel_M");
    check_pole(z, "kernel_M");
    KernelValue out = m_dispatch(z, table, config.n_terms_M, form, config.abel_tail_tol);
    if (!(out.tail_bound < config.abel_tail_tol)) {
        throw TruncationBudgetError("kernel_M at z = " + format_complex(z) +
                                        ": table exhausted with remainder bound " +
                                        std::to_string(out.tail_bound),
                                    out.tail_bound);
    }
    return out;
}

KernelValue kernel_M_prime(double x, const ArithTable& table, const KernelConfig& config) {
    config.validate();
    if (!(x >= 0.0) || !std::isfinite(x)) throw DomainError("kernel_M_prime requires finite x >= 0");
    check_table(table, config.n_terms_M, "kernel_M_prime");
    const auto nu = table.nu_column();
    const auto S = table.nu_cumsum();
    const std::int64_t n_max = 2 * config.n_terms_M + 1;

    // weight(n) = sech^2(x / 2n) / (4n); decreasing in n once n >= x.
    auto weight = [x](std::int64_t n) {
        const double dn = static_cast<double>(n);
        return sech2(x / (2.0 * dn)) / (4.0 * dn);
    };
    auto remainder = [&](std::int64_t last) {
        if (static_cast<double>(last + 1) < x) return kInf;
        return envelope_after(table, last) * weight(last + 1);
    };

    double sum = 0.0;
    std::int64_t last = n_max;
    for (std::int64_t n = 1; n <= n_max; n += 2) {
        sum += nu[static_cast<std::size_t>(n)] * weight(n);
        if ((n + 1) % kStopCheckStride == 0 && n < n_max && remainder(n) < config.abel_tail_tol) {
            last = n;
            break;
        }
    }
    KernelValue out;
    out.value = sum - S[static_cast<std::size_t>(last)] * weight(last + 1);
    out.last_index = last;
    out.empirical_bound = true;
    out.tail_bound = remainder(last);
    if (!(out.tail_bound < config.abel_tail_tol)) {
        throw TruncationBudgetError("kernel_M_prime at x = " + std::to_string(x) +
                                        ": table exhausted with remainder bound " +
                                        std::to_string(out.tail_bound),
                                    out.tail_bound);
    }
    return out;
}

ResidueEstimate residue_estimate(KernelKind kernel, int l, const ArithTable& table,
                                 const KernelConfig& config) {
    config.validate();
    if (l < 0) throw InvalidArgument("residue index must be nonnegative");
    const std::int64_t n_terms = kernel == KernelKind::N ? config.n_terms_N : config.n_terms_M;
    if (2 * static_cast<std::int64_t>(l) + 1 > 2 * n_terms + 1) {
        throw InvalidArgument("pole index beyond the truncated sum");
    }
    const Complex pole(0.0, kPi * (2.0 * l + 1.0));
    const Complex direction = std::polar(1.0, kPi / 4.0);

    ResidueEstimate est;
    for (int j = 4; j <= 20; ++j) {
        const double r = std::ldexp(1.0, -j);
        const Complex z = pole + r * direction;
        const KernelValue k = kernel == KernelKind::N
                                  ? kernel_N_budgeted(z, table, n_terms)
                                  : kernel_M_budgeted(z, table, n_terms, MForm::half_shifted);
        est.sequence.push_back(r * direction * k.value);
    }
    // Step ratio 2: remove the O(r) term, then the O(r^2) term.
    const auto& seq = est.sequence;
    std::vector<Complex> first;
    for (std::size_t j = 0; j + 1 < seq.size(); ++j) first.push_back(2.0 * seq[j + 1] - seq[j]);
    std::vector<Complex> second;
    for (std::size_t j = 0; j + 1 < first.size(); ++j) {
        second.push_back((4.0 * first[j + 1] - first[j]) / 3.0);
    }
    double best = kInf;
    for (std::size_t j = 0; j + 1 < second.size(); ++j) {
        const double diff = std::abs(second[j + 1] - second[j]);
        if (diff < best) {
            best = diff;
            est.value = second[j + 1];
        }
    }
    est.spread = best;
    if (!(best < 1e-6)) {
        throw EstimationFailure("residue extrapolation did not settle (spread " + std::to_string(best) + ")",
                                est.sequence);
    }
    return est;
}

}  // namespace liouville
