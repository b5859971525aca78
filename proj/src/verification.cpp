#include "liouville/verification.hpp"

#include "liouville/dirichlet_oracles.hpp"
#include "liouville/errors.hpp"
#include "liouville/special.hpp"
#include "liouville/zeta_family.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <random>

namespace liouville {

namespace {

const double kInf = std::numeric_limits<double>::infinity();

Json complex_json(Complex z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

double number_or_inf(const Json& j) { return j.is_null() ? kInf : j.get<double>(); }

Complex complex_from(const Json& j) { return {number_or_inf(j.at("re")), number_or_inf(j.at("im"))}; }

VerificationReport make(std::string id, Json inputs, Complex lhs, Complex rhs) {
    VerificationReport r;
    r.check_id = std::move(id);
    r.inputs = std::move(inputs);
    r.lhs = lhs;
    r.rhs = rhs;
    score(r);
    return r;
}

Json integral_json(const IntegralResult& r) {
    return Json{{"value", complex_json(r.value)},
                {"est_error", r.est_error},
                {"tail_bound", r.tail_bound},
                {"tail_bound_empirical", r.tail_bound_empirical},
                {"truncation_bound", r.truncation_bound},
                {"panels_used", r.panels_used},
                {"upper_limit", r.upper_limit}};
}

Json spec_json(const QuadratureSpec& q) {
    return Json{{"split_point", q.split_point}, {"de_levels", q.de_levels},
                {"panel_growth", q.panel_growth}, {"panel_nodes", q.panel_nodes},
                {"tail_stop_rel", q.tail_stop_rel}, {"max_panels", q.max_panels}};
}

const char* const kGroups[] = {"theorem1", "identity", "theorem2", "functional",
                               "decay",    "bounds",   "residues", "calibration"};

}  // namespace

void score(VerificationReport& report) {
    report.abs_err = std::abs(report.lhs - report.rhs);
    const double scale = std::max({std::abs(report.lhs), std::abs(report.rhs), 1e-300});
    report.rel_err = report.abs_err == 0.0 ? 0.0 : report.abs_err / scale;
}

Json to_json(const VerificationReport& r) {
    return Json{{"check_id", r.check_id}, {"inputs", r.inputs},   {"lhs", complex_json(r.lhs)},
                {"rhs", complex_json(r.rhs)}, {"abs_err", r.abs_err}, {"rel_err", r.rel_err},
                {"budget", r.budget},       {"pass", r.pass},       {"notes", r.notes}};
}

VerificationReport report_from_json(const Json& j) {
    VerificationReport r;
    r.check_id = j.at("check_id").get<std::string>();
    r.inputs = j.value("inputs", Json::object());
    r.lhs = complex_from(j.at("lhs"));
    r.rhs = complex_from(j.at("rhs"));
    r.abs_err = number_or_inf(j.at("abs_err"));
    r.rel_err = number_or_inf(j.at("rel_err"));
    r.budget = j.value("budget", Json::object());
    r.pass = j.at("pass").get<bool>();
    r.notes = j.value("notes", std::string());
    return r;
}

// ---- theorem 1 ---------------------------------------------------------------

std::vector<std::int64_t> default_theorem1_checkpoints(std::int64_t limit) {
    std::vector<std::int64_t> out;
    for (std::int64_t n = 1; n <= std::min<std::int64_t>(limit, 1 << 19); n *= 2) out.push_back(n);
    if (limit >= frozen::kTheorem1Checkpoint) out.push_back(frozen::kTheorem1Checkpoint);
    return out;
}

std::vector<VerificationReport> verify_theorem1(const ArithTable& table,
                                                const std::vector<std::int64_t>& checkpoints) {
    std::vector<VerificationReport> out;
    if (checkpoints.empty()) return out;
    const std::int64_t n_max = *std::max_element(checkpoints.begin(), checkpoints.end());
    for (std::int64_t n : checkpoints) {
        auto r = make("theorem1.partial_sum", Json{{"N", n}}, table.nu_partial_sum(n), 0.0);
        if (n == n_max) {
            r.budget = Json{{"threshold", frozen::kTheorem1Threshold}};
            r.pass = r.abs_err <= frozen::kTheorem1Threshold;
            r.notes = "largest checkpoint, scored against the frozen threshold";
        } else {
            r.pass = true;
            r.notes = "informational";
        }
        out.push_back(std::move(r));
    }

    // max |S| over each dyadic block [2^k, 2^(k+1)), the last block cut at n_max
    const auto S = table.nu_cumsum();
    Json blocks = Json::array();
    bool monotone = true;
    double previous = kInf;
    double last = 0.0;
    for (std::int64_t lo = frozen::kEnvelopeStart; lo <= n_max; lo *= 2) {
        const std::int64_t hi = std::min(2 * lo - 1, n_max);
        double m = 0.0;
        for (std::int64_t n = lo; n <= hi; ++n) m = std::max(m, std::fabs(S[static_cast<std::size_t>(n)]));
        blocks.push_back(Json{{"from", lo}, {"to", hi}, {"max_abs_S", m}});
        if (m > previous) monotone = false;
        previous = m;
        last = m;
    }
    auto env = make("theorem1.envelope", Json{{"N0", frozen::kEnvelopeStart}, {"N_max", n_max}}, last, 0.0);
    env.budget = Json{{"blocks", blocks}};
    env.pass = monotone && !blocks.empty();
    env.notes = blocks.empty() ? "no dyadic block below N_max" : "dyadic block maxima of |S| must not increase";
    out.push_back(std::move(env));
    return out;
}

// ---- identity ------------------------------------------------------------------

std::vector<Complex> default_identity_points() {
    return {{0.0, 0.0},  {0.25, 0.0},  {0.5, 0.0},   {1.0, 0.0},   {1.5, 0.0},
            {2.0, 0.0},  {2.5, 0.0},   {3.0, 0.0},   {-1.0, 0.0},  {-2.2, 0.0},
            {0.5, 0.5},  {1.0, 1.0},   {-0.7, 0.3},  {2.0, 1.5},   {0.3, 2.5},
            {1.2, -2.0}, {-1.5, -1.5}, {0.0, 2.7},   {2.5, 1.0},   {-0.2, -1.2}};
}

std::vector<VerificationReport> verify_identity_MN(const ArithTable& table, const KernelConfig& config,
                                                   const std::vector<Complex>& points,
                                                   const Tolerances& tol) {
    std::vector<VerificationReport> out;
    for (Complex z : points) {
        const Json inputs{{"z", complex_json(z)},
                          {"n_terms_N", config.n_terms_N},
                          {"n_terms_M", config.n_terms_M}};
        try {
            const KernelValue n = kernel_N(z, table, config);
            const KernelValue m = kernel_M(z, table, config, MForm::plain);
            auto r = make("identity.MN", inputs, m.value, n.value);
            const double budget = n.tail_bound + m.tail_bound;
            r.budget = Json{{"N_tail_bound", n.tail_bound},
                            {"M_tail_bound", m.tail_bound},
                            {"M_last_index", m.last_index},
                            {"combined", budget}};
            r.pass = r.abs_err <= budget && r.abs_err <= tol.identity_abs;
            r.notes = "lhs M (plain form), rhs N";
            out.push_back(std::move(r));
        } catch (const PoleError& e) {
            auto r = make("identity.MN", inputs, 0.0, 0.0);
            r.pass = true;
            r.notes = std::string("skipped: ") + e.what();
            out.push_back(std::move(r));
        } catch (const TruncationBudgetError& e) {
            auto r = make("identity.MN", inputs, kInf, 0.0);
            r.pass = false;
            r.budget = Json{{"achieved_bound", e.achieved_bound()}};
            r.notes = e.what();
            out.push_back(std::move(r));
        }
    }
    return out;
}

std::vector<VerificationReport> verify_series_coefficients(int k_max, const Tolerances& tol) {
    std::vector<VerificationReport> out;
    for (int k = 0; k <= k_max; ++k) {
        auto r = make("identity.series_coefficients", Json{{"k", k}}, kernel_M_series_coefficient(k),
                      kernel_N_series_coefficient(k));
        r.pass = r.rel_err <= tol.coefficient_rel;
        r.notes = "lhs from zeta_imp(2k+2) zeta_nu(2k+1), rhs from zeta_beta(2k+5/2)";
        out.push_back(std::move(r));
    }
    return out;
}

// ---- residues ------------------------------------------------------------------

std::vector<VerificationReport> verify_residues(const ArithTable& table, const KernelConfig& config,
                                                const std::vector<int>& indices, const Tolerances& tol) {
    std::vector<VerificationReport> out;
    for (KernelKind kind : {KernelKind::M, KernelKind::N}) {
        const std::string id = kind == KernelKind::N ? "residues.N" : "residues.M";
        for (int l : indices) {
            const std::int64_t n = 2 * static_cast<std::int64_t>(l) + 1;
            const double expected = table.beta(n) / std::sqrt(static_cast<double>(n));
            const Json inputs{{"l", l}, {"pole", complex_json({0.0, kPi * static_cast<double>(n)})}};
            try {
                const ResidueEstimate est = residue_estimate(kind, l, table, config);
                auto r = make(id, inputs, est.value, expected);
                r.budget = Json{{"spread", est.spread}};
                r.pass = r.abs_err <= tol.residue_abs;
                out.push_back(std::move(r));
            } catch (const EstimationFailure& e) {
                auto r = make(id, inputs, kInf, expected);
                r.pass = false;
                r.notes = e.what();
                out.push_back(std::move(r));
            }
        }
    }
    return out;
}

// ---- theorem 2 -----------------------------------------------------------------

std::vector<Complex> default_theorem2_grid() {
    std::vector<Complex> grid;
    for (double re : {-1.25, -1.0, -0.75}) {
        for (double im : {0.0, 0.5, 1.0}) grid.emplace_back(re, im);
    }
    return grid;
}

QuadratureSpec default_theorem2_spec() {
    QuadratureSpec spec;
    spec.tail_stop_rel = 1e-7;
    return spec;
}

std::vector<VerificationReport> verify_theorem2(const ArithTable& table, const KernelConfig& config,
                                                const QuadratureSpec& spec,
                                                const std::vector<Complex>& s_grid,
                                                const Tolerances& tol) {
    const MellinIntegrand f_n = make_kernel_integrand(IntegrandKind::N, table, config);
    const MellinIntegrand f_m = make_kernel_integrand(IntegrandKind::M_plain, table, config);
    std::vector<VerificationReport> out;
    for (Complex s : s_grid) {
        const Json inputs{{"s", complex_json(s)},
                          {"n_terms_N", config.n_terms_N},
                          {"n_terms_M", config.n_terms_M}};
        VerificationReport r;
        r.check_id = "theorem2";
        r.inputs = inputs;
        try {
            r.lhs = zeta_lambda(s);
            const Complex phi = mellin_prefactor(s);
            const Complex ratio = (1.0 - std::pow(2.0, 1.0 - s)) / (1.0 - std::pow(2.0, 1.0 - 2.0 * s));
            const IntegralResult in = integrate_mellin(f_n, s, spec);
            const IntegralResult im = integrate_mellin(f_m, s, spec);
            r.rhs = ratio * phi * in.value;
            const Complex rhs_m = ratio * phi * im.value;
            score(r);
            VerificationReport m_form = r;
            m_form.rhs = rhs_m;
            score(m_form);
            r.budget = Json{{"rhs_M", complex_json(rhs_m)},
                            {"abs_err_M", m_form.abs_err},
                            {"rel_err_M", m_form.rel_err},
                            {"prefactor", complex_json(ratio * phi)},
                            {"integral_N", integral_json(in)},
                            {"integral_M", integral_json(im)},
                            {"quadrature", spec_json(spec)}};
            if (phi == 0.0) {
                r.pass = r.abs_err <= tol.theorem2_abs_at_zero && m_form.abs_err <= tol.theorem2_abs_at_zero;
                r.notes = "cosine zero of the prefactor, scored absolutely; ";
            } else {
                r.pass = r.rel_err <= tol.theorem2_rel && m_form.rel_err <= tol.theorem2_rel;
            }
            r.notes += "rhs is the N-form, the M-form is in the budget; tail bounds use the empirical C/x envelope";
        } catch (const NonConvergence& e) {
            r.rhs = e.partial().value;
            score(r);
            r.pass = false;
            r.budget = Json{{"partial", integral_json(e.partial())}};
            r.notes = e.what();
        } catch (const std::exception& e) {
            r.lhs = r.rhs = kInf;
            r.abs_err = r.rel_err = kInf;
            r.pass = false;
            r.notes = e.what();
        }
        out.push_back(std::move(r));
    }
    return out;
}

// ---- functional equations ------------------------------------------------------

std::vector<Complex> random_strip_points(int count, std::uint32_t seed, double re_lo, double re_hi,
                                         double im_abs) {
    // raw mt19937 output is identical on every platform, unlike the distributions
    std::mt19937 gen(seed);
    auto unit = [&gen] { return static_cast<double>(gen()) / 4294967296.0; };
    std::vector<Complex> out;
    for (int i = 0; i < count; ++i) {
        const double re = re_lo + (re_hi - re_lo) * unit();
        const double im = -im_abs + 2.0 * im_abs * unit();
        out.emplace_back(re, im);
    }
    return out;
}

std::vector<VerificationReport> verify_functional_equations(const std::vector<Complex>& s_grid,
                                                            const Tolerances& tol) {
    std::vector<VerificationReport> out;
    const std::vector<Complex> strip = s_grid.empty() ? random_strip_points(20, 20240601u, -1.4, -0.6, 2.0) : s_grid;

    auto riemann_rhs = [](Complex s) {
        return std::pow(2.0, s) * std::pow(kPi, s - 1.0) * sin_pi(0.5 * s) * complex_gamma(1.0 - s) *
               zeta(1.0 - s);
    };
    auto guarded = [&](const std::string& id, Complex s, auto lhs_fn, auto rhs_fn, bool exact_abs) {
        const Json inputs{{"s", complex_json(s)}};
        try {
            auto r = make(id, inputs, lhs_fn(s), rhs_fn(s));
            r.pass = exact_abs ? r.abs_err <= tol.functional_exact_abs : r.rel_err <= tol.functional_rel;
            if (exact_abs) r.notes = "scored absolutely";
            out.push_back(std::move(r));
        } catch (const PoleError& e) {
            auto r = make(id, inputs, 0.0, 0.0);
            r.pass = true;
            r.notes = std::string("skipped: ") + e.what();
            out.push_back(std::move(r));
        }
    };

    // reflection evaluated explicitly at points where both sides go through the alternating series
    guarded("functional.riemann", -1.0, riemann_rhs, [](Complex) { return Complex(-1.0 / 12.0); }, true);
    guarded("functional.riemann", -2.0, riemann_rhs, [](Complex) { return Complex(0.0); }, true);
    for (Complex s : random_strip_points(10, 7u, 0.05, 0.95, 10.0)) {
        guarded("functional.riemann", s, [](Complex z) { return zeta(z); }, riemann_rhs, false);
    }

    auto za = [](Complex s) { return zeta_a(s); };
    auto za_rhs = [](Complex s) { return functional_eq_rhs_zeta_a(s); };
    guarded("functional.zeta_a", -2.0, za, za_rhs, true);
    for (Complex s : strip) guarded("functional.zeta_a", s, za, za_rhs, false);

    auto zal = [](Complex s) { return zeta_alpha(s, AlphaMode::definition); };
    auto zal_rhs = [](Complex s) { return functional_eq_rhs_zeta_alpha(s); };
    guarded("functional.zeta_alpha", -0.75, zal, zal_rhs, false);
    for (Complex s : strip) guarded("functional.zeta_alpha", s, zal, zal_rhs, false);

    auto zal_lambda = [](Complex s) { return zeta_alpha(s, AlphaMode::lambda_relation); };
    for (Complex s : strip) guarded("functional.alpha_lambda_relation", s, zal, zal_lambda, false);
    return out;
}

// ---- decay ---------------------------------------------------------------------

std::vector<double> default_decay_grid() { return {1.0, 2.0, 5.0, 10.0, 20.0, 50.0, 100.0}; }

std::vector<VerificationReport> probe_decay(const ArithTable& table, const KernelConfig& config,
                                            const std::vector<double>& x_grid) {
    std::vector<VerificationReport> out;
    std::vector<double> abs_m;
    bool all_ok = true;
    for (double x : x_grid) {
        const Json inputs{{"x", x}};
        try {
            const KernelValue m = kernel_M(x, table, config, MForm::plain);
            auto r = make("decay.x_M", inputs, x * std::abs(m.value), frozen::kXMBound);
            r.budget = Json{{"M", complex_json(m.value)}, {"M_tail_bound", m.tail_bound},
                            {"M_last_index", m.last_index},
                            {"below_frozen_constant", r.lhs.real() <= frozen::kXMBound}};
            r.pass = true;
            r.notes = "exploratory: whether x |M(x)| stays bounded is an open question";
            abs_m.push_back(std::abs(m.value));
            out.push_back(std::move(r));
        } catch (const TruncationBudgetError& e) {
            auto r = make("decay.x_M", inputs, kInf, frozen::kXMBound);
            r.pass = true;
            r.budget = Json{{"achieved_bound", e.achieved_bound()}};
            r.notes = std::string("exploratory; ") + e.what();
            abs_m.push_back(kInf);
            all_ok = false;
            out.push_back(std::move(r));
        }
    }

    if (!abs_m.empty()) {
        const auto peak = static_cast<std::size_t>(std::max_element(abs_m.begin(), abs_m.end()) - abs_m.begin());
        bool decreasing = all_ok;
        for (std::size_t i = peak + 1; i < abs_m.size(); ++i) decreasing = decreasing && abs_m[i] < abs_m[i - 1];
        Json series = Json::array();
        for (std::size_t i = 0; i < abs_m.size(); ++i) series.push_back(Json{{"x", x_grid[i]}, {"abs_M", abs_m[i]}});
        auto r = make("decay.M_trend", Json{{"x_grid", x_grid}}, abs_m.back(), abs_m[peak]);
        r.budget = Json{{"series", series}, {"peak_x", x_grid[peak]}};
        r.pass = decreasing && peak + 1 < abs_m.size();
        r.notes = "|M| must decrease strictly after its peak on the grid";
        out.push_back(std::move(r));
    }

    const double x_hi = x_grid.empty() ? 100.0 : std::max(100.0, *std::max_element(x_grid.begin(), x_grid.end()));
    double max_abs = 0.0, arg = 0.0;
    bool scan_ok = true;
    std::string scan_note;
    for (int i = 0; 0.25 * i <= x_hi; ++i) {
        const double x = 0.25 * i;
        try {
            const double v = std::fabs(kernel_M_prime(x, table, config).value.real());
            if (v > max_abs) {
                max_abs = v;
                arg = x;
            }
        } catch (const TruncationBudgetError& e) {
            scan_ok = false;
            scan_note = e.what();
            break;
        }
    }
    auto r = make("decay.M_prime_bound", Json{{"x_from", 0.0}, {"x_to", x_hi}, {"step", 0.25}}, max_abs,
                  frozen::kMPrimeBound);
    r.budget = Json{{"argmax", arg}};
    r.pass = scan_ok && max_abs <= frozen::kMPrimeBound;
    r.notes = scan_ok ? "lhs max |M'| on the scan, rhs the frozen constant" : scan_note;
    out.push_back(std::move(r));
    return out;
}

// ---- bounds --------------------------------------------------------------------

std::vector<VerificationReport> verify_bounds(const ArithTable& table, const Tolerances& tol) {
    std::vector<VerificationReport> out;
    const std::int64_t scan = std::min<std::int64_t>(table.limit(), 1'000'000);
    const auto beta = table.beta_column();
    const auto nu = table.nu_column();
    const auto dcount = table.dcount();
    const auto mu = table.mu();

    {
        std::int64_t strict = 0, equality = 0;
        for (std::int64_t n = 1; n <= scan; n += 2) {
            const std::int64_t b = beta[static_cast<std::size_t>(n)];
            if (b * b > n || (b * b == n && b < 0)) ++strict;
            auto root = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(n))));
            const bool square = root * root == n;
            if ((b * b == n && b > 0) != square) ++equality;
        }
        auto r = make("bounds.beta_ratio", Json{{"N", scan}}, static_cast<double>(strict + equality), 0.0);
        r.budget = Json{{"range_violations", strict}, {"equality_mismatches", equality}};
        r.pass = strict + equality == 0;
        r.notes = "-1 < beta(n)/sqrt(n) <= 1 on odd n, equality exactly at squares";
        out.push_back(std::move(r));
    }
    {
        std::int64_t violations = 0;
        for (std::int64_t n = 1; n <= scan; ++n) {
            const auto i = static_cast<std::size_t>(n);
            if (std::fabs(nu[i]) * static_cast<double>(n) > dcount[i] * (1.0 + 1e-12)) ++violations;
        }
        auto r = make("bounds.nu_divisor", Json{{"N", scan}}, static_cast<double>(violations), 0.0);
        r.pass = violations == 0;
        r.notes = "|nu(n)| <= d(n)/n";
        out.push_back(std::move(r));
    }
    {
        const std::int64_t top = std::min<std::int64_t>(table.limit(), 10'000);
        double worst = 0.0;
        std::int64_t worst_n = 1;
        for (std::int64_t n = 1; n <= top; n += 2) {
            double acc = 0.0;
            for (std::int64_t l = 1; l <= n; l += 2) {
                if (n % l == 0) acc += static_cast<double>(l) * nu[static_cast<std::size_t>(l)];
            }
            const double err = std::fabs(acc - beta[static_cast<std::size_t>(n)] / std::sqrt(static_cast<double>(n)));
            if (err > worst) {
                worst = err;
                worst_n = n;
            }
        }
        auto r = make("bounds.convolution", Json{{"N", top}}, worst, 0.0);
        r.budget = Json{{"worst_n", worst_n}};
        r.pass = worst <= tol.convolution_abs;
        r.notes = "max over odd n of |sum_{l | n} l nu(l) - beta(n)/sqrt(n)|";
        out.push_back(std::move(r));
    }

    const std::int64_t n_oracle = std::min<std::int64_t>(table.limit(), 100'000);
    auto oracle_row = [&](const char* id, const OracleSum& o, double s) {
        auto r = make(id, Json{{"s", s}, {"N", o.terms}}, o.partial, o.closed_form);
        const double slack = 8.0 * std::numeric_limits<double>::epsilon() * std::fabs(o.closed_form);
        r.budget = Json{{"tail_bound", o.tail_bound}};
        r.pass = r.abs_err <= o.tail_bound + slack;
        out.push_back(std::move(r));
    };
    oracle_row("bounds.dirichlet_beta", dirichlet_beta(table, 3.0, n_oracle), 3.0);
    oracle_row("bounds.dirichlet_lambda", dirichlet_lambda(table, 3.0, n_oracle), 3.0);
    oracle_row("bounds.dirichlet_mu", dirichlet_mu(table, 3.0, n_oracle), 3.0);
    oracle_row("bounds.dirichlet_nu", dirichlet_nu(table, 3.0, n_oracle), 3.0);

    {
        const double cap = (zeta(1.5) * zeta(2.0)).real();
        double acc = 0.0, peak = 0.0;
        for (std::int64_t n = 1; n <= scan; n += 2) {
            acc += std::abs(beta[static_cast<std::size_t>(n)]) * std::pow(static_cast<double>(n), -1.5);
            peak = std::max(peak, acc);
        }
        auto r = make("bounds.beta_abs_series", Json{{"N", scan}}, peak, cap);
        r.pass = peak <= cap;
        r.notes = "partial sums of |beta(n)| n^-3/2 against zeta(3/2) zeta(2)";
        out.push_back(std::move(r));
    }
    {
        // dyadic block maxima of |sum_{odd n <= x} mu(n)/n| from 2^10, scored by the sign of the
        // least-squares slope of log(block max) against the block index
        const std::int64_t top = table.limit();
        Json blocks = Json::array();
        std::vector<double> logs;
        double acc = 0.0, block_max = 0.0;
        std::int64_t lo = 1024;
        for (std::int64_t n = 1; n <= top; n += 2) {
            acc += mu[static_cast<std::size_t>(n)] / static_cast<double>(n);
            if (n >= lo) block_max = std::max(block_max, std::fabs(acc));
            if (n + 2 >= 2 * lo || n + 2 > top) {
                if (n >= lo) {
                    blocks.push_back(Json{{"from", lo}, {"to", std::min(2 * lo - 1, top)}, {"max_abs", block_max}});
                    logs.push_back(std::log(block_max));
                }
                block_max = 0.0;
                lo *= 2;
            }
        }
        double slope = std::numeric_limits<double>::quiet_NaN();
        if (logs.size() >= 2) {
            const double k = static_cast<double>(logs.size());
            const double mean_x = (k - 1.0) / 2.0;
            double mean_y = 0.0;
            for (double y : logs) mean_y += y / k;
            double sxy = 0.0, sxx = 0.0;
            for (std::size_t i = 0; i < logs.size(); ++i) {
                sxy += (static_cast<double>(i) - mean_x) * (logs[i] - mean_y);
                sxx += (static_cast<double>(i) - mean_x) * (static_cast<double>(i) - mean_x);
            }
            slope = sxy / sxx;
        }
        auto r = make("bounds.newman", Json{{"N", top}}, acc, 0.0);
        r.budget = Json{{"blocks", blocks}, {"log_slope_per_octave", slope}};
        r.pass = logs.size() >= 2 && slope < 0.0;
        r.notes = "trend only: dyadic block maxima of |sum mu(n)/n| over odd n must decrease on a log-linear fit";
        out.push_back(std::move(r));
    }
    {
        // sigma = -1: each term integrates to |beta(n)|/sqrt(n) pi (pi n)^(sigma-1/2) / sin(mu pi/2), mu = sigma + 3/2
        const double sigma = -1.0;
        const double m = sigma + 1.5;
        const IntegralResult dominant = integrate_gamma_zeta_a(sigma + 0.5, QuadratureSpec{});
        const double rhs = -dominant.value.real();
        for (std::int64_t N : {std::int64_t{1000}, std::int64_t{10000}}) {
            if (N > table.limit()) continue;
            double acc = 0.0;
            for (std::int64_t n = N - (N % 2 == 0 ? 1 : 0); n >= 1; n -= 2) {
                const double b = std::abs(beta[static_cast<std::size_t>(n)]) / std::sqrt(static_cast<double>(n));
                acc += b * kPi * std::pow(kPi * static_cast<double>(n), sigma - 0.5);
            }
            acc /= sin_pi(0.5 * m);
            auto r = make("bounds.swap_dominance", Json{{"sigma", sigma}, {"N", N}}, acc, rhs);
            r.budget = Json{{"rhs_est_error", dominant.est_error}};
            r.pass = acc < rhs;
            r.notes = "integrated absolute series must stay below the integral of 1/2 - 1/(e^x+1)";
            out.push_back(std::move(r));
        }
    }
    return out;
}

// ---- calibration ---------------------------------------------------------------

std::vector<VerificationReport> verify_calibration(const QuadratureSpec& spec, const Tolerances& tol) {
    std::vector<VerificationReport> out;
    struct Case {
        Complex s;
        Complex expected;
        double tol;
    };
    const Case cases[] = {
        {2.0, kPi * kPi / 12.0, tol.calibration_abs},
        {1.0, std::log(2.0), tol.calibration_abs},
        {-0.5, complex_gamma(-0.5) * zeta_a(-0.5), tol.calibration_subtracted_abs},
    };
    for (const Case& c : cases) {
        VerificationReport r;
        r.check_id = "calibration.gamma_zeta_a";
        r.inputs = Json{{"s", complex_json(c.s)}};
        r.rhs = c.expected;
        try {
            const IntegralResult integral = integrate_gamma_zeta_a(c.s, spec);
            r.lhs = integral.value;
            score(r);
            r.budget = integral_json(integral);
            r.pass = r.abs_err <= c.tol;
            if (c.s.real() < 0.0) r.notes = "subtracted kernel 1/(e^t+1) - 1/2";
        } catch (const NonConvergence& e) {
            r.lhs = e.partial().value;
            score(r);
            r.pass = false;
            r.notes = e.what();
        }
        out.push_back(std::move(r));
    }
    return out;
}

// ---- suite ---------------------------------------------------------------------

const std::vector<std::string>& verification_groups() {
    static const std::vector<std::string> groups(std::begin(kGroups), std::end(kGroups));
    return groups;
}

std::vector<std::string> check_ids(const std::string& group) {
    static const std::map<std::string, std::vector<std::string>> ids = {
        {"theorem1", {"theorem1.envelope", "theorem1.partial_sum"}},
        {"identity", {"identity.MN", "identity.series_coefficients"}},
        {"theorem2", {"theorem2"}},
        {"functional",
         {"functional.alpha_lambda_relation", "functional.riemann", "functional.zeta_a", "functional.zeta_alpha"}},
        {"decay", {"decay.M_prime_bound", "decay.M_trend", "decay.x_M"}},
        {"bounds",
         {"bounds.beta_abs_series", "bounds.beta_ratio", "bounds.convolution", "bounds.dirichlet_beta",
          "bounds.dirichlet_lambda", "bounds.dirichlet_mu", "bounds.dirichlet_nu", "bounds.newman",
          "bounds.nu_divisor", "bounds.swap_dominance"}},
        {"residues", {"residues.M", "residues.N"}},
        {"calibration", {"calibration.gamma_zeta_a"}},
    };
    if (group == "all") {
        std::vector<std::string> all;
        for (const auto& [name, list] : ids) all.insert(all.end(), list.begin(), list.end());
        std::sort(all.begin(), all.end());
        return all;
    }
    auto it = ids.find(group);
    if (it == ids.end()) throw InvalidArgument("unknown verification group '" + group + "'");
    return it->second;
}

std::vector<VerificationReport> run_suite(const std::string& group, const ArithTable& table,
                                          const SuiteOptions& options) {
    check_ids(group);
    const bool all = group == "all";
    std::vector<VerificationReport> out;
    auto append = [&out](std::vector<VerificationReport> more) {
        for (auto& r : more) out.push_back(std::move(r));
    };
    const Tolerances& tol = options.tolerances;
    if (all || group == "theorem1") append(verify_theorem1(table, default_theorem1_checkpoints(table.limit())));
    if (all || group == "identity") {
        append(verify_identity_MN(table, options.kernel, options.grid.value_or(default_identity_points()), tol));
        append(verify_series_coefficients(10, tol));
    }
    if (all || group == "theorem2") {
        append(verify_theorem2(table, options.kernel, options.quadrature,
                               options.grid.value_or(default_theorem2_grid()), tol));
    }
    if (all || group == "functional") append(verify_functional_equations(options.grid.value_or(std::vector<Complex>{}), tol));
    if (all || group == "decay") append(probe_decay(table, options.kernel, default_decay_grid()));
    if (all || group == "bounds") append(verify_bounds(table, tol));
    if (all || group == "residues") append(verify_residues(table, options.kernel, {0, 1, 2}, tol));
    if (all || group == "calibration") append(verify_calibration(QuadratureSpec{}, tol));
    std::stable_sort(out.begin(), out.end(),
                     [](const VerificationReport& a, const VerificationReport& b) { return a.check_id < b.check_id; });
    return out;
}

}  // namespace liouville
