#ifndef ORLICZ_LIMITS_HPP
#define ORLICZ_LIMITS_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "orlicz/measure.hpp"
#include "orlicz/norm.hpp"
#include "orlicz/young.hpp"

namespace orlicz {

/// One verified inequality lhs (op) rhs. `vacuous` marks checks whose
/// hypothesis did not apply, which pass trivially.
struct BoundRecord {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    bool pass = false;
    bool vacuous = false;
};

// Bound names used in sweep reports.
inline constexpr const char* kCharLower = "char_lower";
inline constexpr const char* kExplicitLower = "explicit_lower";
inline constexpr const char* kTopLower = "top_lower";
inline constexpr const char* kMassUpper = "mass_upper";

struct ConvergenceReport {
    std::string exponent;  // "q" or "p"
    std::vector<double> schedule;
    std::vector<double> norms;
    double reference = 0.0;  // ||f||_inf
    std::vector<double> gaps;
    std::vector<std::vector<BoundRecord>> bound_checks;
    bool passed = false;
};

struct SweepOptions {
    double tol = kDefaultNormTol;
    // Entries are independent; any thread count yields bit-identical reports.
    unsigned threads = 1;
};

/// ||f||_{B_pq} (shift e - 1) along an increasing q schedule, with gaps to
/// ||f||_inf and two lower bounds per entry:
///
///   char_lower:      ||f|| >= ||f||_inf * ||chi_M||,  M = {|f| = ||f||_inf}
///   explicit_lower:  ||f|| >= ||f||_inf * min(1, 1 / (exp(1 + 1/(mu(M) q)) - e0))
///                    (vacuous for q < 1)
///
/// `passed` needs every check to hold, the last gap to be no larger than the
/// first, and gaps to weakly decrease over the final half of the schedule
/// (up to tol * ||f||_inf).
ConvergenceReport limit_sweep(const SampledFunction& f, const DiscreteMeasure& mu, double p,
                              std::span<const double> q_schedule, const SweepOptions& options = {});

/// ||f||_p along an increasing p schedule. Per entry:
///   top_lower:   ||f||_p >= ||f||_inf * mu(M)^{1/p}
///   mass_upper:  ||f||_p <= ||f||_inf * mu(X)^{1/p}
ConvergenceReport classical_p_sweep(const SampledFunction& f, const DiscreteMeasure& mu,
                                    std::span<const double> p_schedule);

/// Lower bound for the norm of a characteristic function of a set of measure m:
/// lambda = ||chi_M||_{B_pq} versus b = 1 / (exp(1 + 1/(m q)) - e0). When
/// lambda < 1 the check is lambda > b; when lambda >= 1 it is vacuous.
/// Requires q >= 1, where (1 + delta)^q >= 1 + q delta holds.
BoundRecord liminf_bound_check(double m, double p, double q);

struct DeltaRecord {
    double lambda = 0.0;
    double delta = 0.0;           // ln(e0 + 1/lambda) - 1
    double identity_lhs = 0.0;    // lambda^-p ln(e0 + 1/lambda)^q
    double identity_rhs = 0.0;    // (e^{1+delta} - e0)^p (1 + delta)^q
    double identity_rel_err = 0.0;
    double bernoulli = 0.0;       // 1 + q delta
    bool delta_positive = false;
    bool identity_holds = false;  // relative error <= 1e-9
    bool bernoulli_holds = false; // identity_rhs >= 1 + q delta
    bool strict_tail = false;     // 1 + q delta > q delta
    bool pass = false;
};

/// The substitution ln(e0 + 1/lambda) = 1 + delta for 0 < lambda < 1, and the
/// chain lambda^-p ln(e0 + 1/lambda)^q = (e^{1+delta} - e0)^p (1+delta)^q
/// >= 1 + q delta > q delta. The inequalities are compared in the log domain
/// so large q does not overflow.
DeltaRecord delta_relation_check(double lambda, double p, double q);

struct ThresholdRecord {
    double lambda = 0.0;  // (1 + eps) ||f||_inf
    double eps = 0.0;
    double slack = 0.0;   // absolute allowance on the norm bound
    std::vector<double> schedule;
    std::vector<double> modulars;  // modular(B_pq, f, lambda)
    std::vector<double> norms;     // ||f||_{B_pq}
    std::optional<double> q_star;  // first q with modular <= 1
    bool norm_bound_holds = false;  // ||f|| <= lambda + slack for all q >= q*
    bool domination_holds = false;  // B_pq(|f|/lambda) <= B_pq0(|f|/lambda), q0 = schedule[0]
    bool envelope_holds = false;    // B_pq(|f|/lambda) <= (1+eps)^-p ln(e0 + 1/(1+eps))^q

    bool reached() const { return q_star.has_value(); }
    bool passed() const { return reached() && norm_bound_holds && domination_holds && envelope_holds; }
};

/// Upper-bound half: with lambda = (1 + eps) ||f||_inf every atom satisfies
/// |f|/lambda < 1, so each term of the modular decays in q. Finds the first
/// schedule q where the modular at lambda is at most 1 and checks the norm
/// bound from there on. A schedule that never reaches the threshold is
/// reported via reached() == false, not thrown.
ThresholdRecord upper_bound_threshold(const SampledFunction& f, const DiscreteMeasure& mu, double p, double eps,
                                      std::span<const double> q_schedule, double tol = kDefaultNormTol,
                                      double slack = 1e-9);

struct TruncationEntry {
    double level = 0.0;   // N
    double target = 0.0;  // min(||f||_inf, N)
    ConvergenceReport sweep;
    double terminal_gap = 0.0;
    bool converged = false;  // terminal_gap <= rel_tol * target
    bool dominated = false;  // ||f|| >= ||f_N|| - tol at the largest q
};

struct TruncationReport {
    ConvergenceReport full;
    std::vector<TruncationEntry> entries;
    bool passed = false;
};

/// Runs limit_sweep on f_N = min(|f|, N) for every N and on f itself.
TruncationReport truncation_sweep(const SampledFunction& f, const DiscreteMeasure& mu, double p,
                                  std::span<const double> n_schedule, std::span<const double> q_schedule,
                                  const SweepOptions& options = {}, double rel_tol = 1e-3);

struct LogRatioRecord {
    double c = 0.0;
    double inf = 0.0;
    double sup = 0.0;
    bool pass = false;
};

/// Grid inf and sup of log(e0 + t) / log(e0 + c t).
LogRatioRecord log_ratio_bound_check(double c, std::span<const double> grid);

struct EquivalenceRecord {
    double norm_e0 = 0.0;  // shift e - 1
    double norm_e = 0.0;   // shift e
    double ratio = 0.0;    // norm_e0 / norm_e
    double c_forward = 0.0;   // B_pq(t) <= Bbar_pq(c t) on the grid
    double c_backward = 0.0;  // Bbar_pq(t) <= B_pq(c t) on the grid
    double constant = 0.0;    // max(c_forward, c_backward)
    bool within_constant = false;
    bool domination = false;  // norm_e0 <= norm_e, since B_pq <= Bbar_pq pointwise
    bool pass = false;
};

EquivalenceRecord equivalence_norm_check(const SampledFunction& f, const DiscreteMeasure& mu, double p, double q,
                                         std::span<const double> grid, double tol = kDefaultNormTol);

}  // namespace orlicz

#endif  // ORLICZ_LIMITS_HPP
