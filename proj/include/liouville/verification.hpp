#pragma once

#include "liouville/arith_table.hpp"
#include "liouville/complex.hpp"
#include "liouville/eval_config.hpp"
#include "liouville/kernels.hpp"
#include "liouville/quadrature.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace liouville {

using Json = nlohmann::ordered_json;

struct VerificationReport {
    std::string check_id;
    Json inputs = Json::object();
    Complex lhs;
    Complex rhs;
    double abs_err = 0.0;
    double rel_err = 0.0;
    Json budget = Json::object();
    bool pass = false;
    std::string notes;
};

/// Fills abs_err and rel_err from lhs and rhs (relative to max(|lhs|, |rhs|, 1e-300)).
void score(VerificationReport& report);

Json to_json(const VerificationReport& report);
VerificationReport report_from_json(const Json& j);

// Regression constants frozen from the reference run on a 2000001-entry table.
namespace frozen {
/// |S(10^6)| must not exceed this.
inline constexpr double kTheorem1Threshold = 6.8e-4;
inline constexpr std::int64_t kTheorem1Checkpoint = 1'000'000;
/// First dyadic block of the envelope check, 2^14.
inline constexpr std::int64_t kEnvelopeStart = 1 << 14;
/// max |M'(x)| over x in [0, 100] in steps of 1/4; attained at x = 0.
inline constexpr double kMPrimeBound = 0.1862;
/// max x |M(x)| over the decay grid; exploratory only.
inline constexpr double kXMBound = 1.11;
}  // namespace frozen

struct Tolerances {
    double theorem2_rel = 1e-4;
    double theorem2_abs_at_zero = 1e-8;
    double identity_abs = 1e-6;
    double functional_rel = 1e-9;
    double functional_exact_abs = 1e-12;
    double residue_abs = 1e-4;
    double coefficient_rel = 1e-10;
    double calibration_abs = 1e-10;
    double calibration_subtracted_abs = 1e-8;
    double convolution_abs = 1e-12;
};

std::vector<VerificationReport> verify_theorem1(const ArithTable& table,
                                                const std::vector<std::int64_t>& checkpoints);
/// 1, 2, 4, ..., 2^19 and 10^6, capped at the table limit.
std::vector<std::int64_t> default_theorem1_checkpoints(std::int64_t limit);

std::vector<VerificationReport> verify_identity_MN(const ArithTable& table, const KernelConfig& config,
                                                   const std::vector<Complex>& points,
                                                   const Tolerances& tol = {});
/// 20 points with |z| <= 3, at least 0.3 from every pole.
std::vector<Complex> default_identity_points();

/// zeta_imp(2k+2) zeta_nu(2k+1) against zeta_beta(2k + 5/2) for k = 0..k_max.
std::vector<VerificationReport> verify_series_coefficients(int k_max = 10, const Tolerances& tol = {});

std::vector<VerificationReport> verify_residues(const ArithTable& table, const KernelConfig& config,
                                                const std::vector<int>& indices = {0, 1, 2},
                                                const Tolerances& tol = {});

/// zeta_lambda(s) against the N-form and M-form integrals. One report per s; rhs is the
/// N-form value and the M-form value sits in the budget. Both must pass.
std::vector<VerificationReport> verify_theorem2(const ArithTable& table, const KernelConfig& config,
                                                const QuadratureSpec& spec,
                                                const std::vector<Complex>& s_grid,
                                                const Tolerances& tol = {});
/// Re s in {-1.25, -1, -0.75} x Im s in {0, 0.5, 1}.
std::vector<Complex> default_theorem2_grid();
/// Quadrature settings used for the kernel integrals.
QuadratureSpec default_theorem2_spec();

/// Riemann, alternating and alpha/beta functional equations. When s_grid is empty,
/// 20 points drawn from -1.4 < Re s < -0.6, |Im s| <= 2 with a fixed seed are used.
std::vector<VerificationReport> verify_functional_equations(const std::vector<Complex>& s_grid = {},
                                                            const Tolerances& tol = {});
std::vector<Complex> random_strip_points(int count, std::uint32_t seed, double re_lo, double re_hi,
                                         double im_abs);

/// M(x) trend, the bound on M', and x |M(x)| (exploratory).
std::vector<VerificationReport> probe_decay(const ArithTable& table, const KernelConfig& config,
                                            const std::vector<double>& x_grid);
std::vector<double> default_decay_grid();

/// Table scans, Dirichlet oracles, convolution identity, Newman trend, dominance bound.
std::vector<VerificationReport> verify_bounds(const ArithTable& table, const Tolerances& tol = {});

/// Gamma(s) zeta_a(s) integrals at s = 2, 1 and -1/2.
std::vector<VerificationReport> verify_calibration(const QuadratureSpec& spec = {},
                                                   const Tolerances& tol = {});

struct SuiteOptions {
    KernelConfig kernel;
    QuadratureSpec quadrature = default_theorem2_spec();
    Tolerances tolerances;
    /// Overrides the default s or z grid of theorem2, identity and functional.
    std::optional<std::vector<Complex>> grid;
};

/// theorem1 identity theorem2 functional decay bounds residues calibration
const std::vector<std::string>& verification_groups();
/// Every check_id a group can emit.
std::vector<std::string> check_ids(const std::string& group);

/// Runs one group or "all"; reports sorted by check_id, stable within a check_id.
std::vector<VerificationReport> run_suite(const std::string& group, const ArithTable& table,
                                          const SuiteOptions& options);

}  // namespace liouville
