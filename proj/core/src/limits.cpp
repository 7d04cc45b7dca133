#include "orlicz/limits.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <sstream>
#include <thread>

#include "orlicz/errors.hpp"

namespace orlicz {

namespace {

// Runs fn(0..n-1) on up to `threads` workers. Each index writes only its own
// slot, so results do not depend on scheduling. The lowest-index exception
// is rethrown.
template <class Fn>
void for_each_index(std::size_t n, unsigned threads, Fn&& fn) {
    const std::size_t workers = std::min<std::size_t>(std::max(threads, 1u), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::exception_ptr> errors(n);
    std::atomic<std::size_t> next{0};
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < n; i = next++) {
                    try {
                        fn(i);
                    } catch (...) {
                        errors[i] = std::current_exception();
                    }
                }
            });
        }
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

void require_schedule(std::span<const double> schedule, std::size_t min_len, const char* what) {
    if (schedule.size() < min_len)
        throw InputError(std::string(what) + " schedule needs at least " + std::to_string(min_len) + " entries");
    for (std::size_t i = 0; i < schedule.size(); ++i) {
        if (!(schedule[i] > 0.0) || !std::isfinite(schedule[i]))
            throw InputError(std::string(what) + " schedule entries must be finite and positive");
        if (i > 0 && !(schedule[i - 1] < schedule[i]))
            throw InputError(std::string(what) + " schedule must be strictly increasing");
    }
}

void require_nonzero(const SampledFunction& f, const char* op) {
    if (f.is_zero()) throw DomainError(std::string(op) + " requires f not identically zero");
}

// Final gap no larger than the first, and weak decrease from the middle on.
bool gaps_settle(const std::vector<double>& gaps, double slack) {
    if (gaps.empty()) return false;
    if (gaps.back() > gaps.front() + slack) return false;
    for (std::size_t i = (gaps.size() - 1) / 2; i + 1 < gaps.size(); ++i)
        if (gaps[i + 1] > gaps[i] + slack) return false;
    return true;
}

bool all_bounds_pass(const std::vector<std::vector<BoundRecord>>& checks) {
    for (const auto& row : checks)
        for (const auto& b : row)
            if (!b.pass) return false;
    return true;
}

double explicit_char_bound(double m, double q) { return 1.0 / (std::exp(1.0 + 1.0 / (m * q)) - kE0); }

}  // namespace

ConvergenceReport limit_sweep(const SampledFunction& f, const DiscreteMeasure& mu, double p,
                              std::span<const double> q_schedule, const SweepOptions& options) {
    require_aligned(f, mu);
    require_nonzero(f, "limit_sweep");
    require_schedule(q_schedule, 3, "q");

    ConvergenceReport report;
    report.exponent = "q";
    report.schedule.assign(q_schedule.begin(), q_schedule.end());
    report.reference = ess_sup(f, mu);
    const std::size_t n = q_schedule.size();
    report.norms.resize(n);
    report.gaps.resize(n);
    report.bound_checks.resize(n);

    const double top_mass = top_level_mass(f, mu);
    const double keep = 1.0 - 2.0 * options.tol;

    for_each_index(n, options.threads, [&](std::size_t i) {
        const double q = q_schedule[i];
        const auto b = YoungFunction::log_bump(p, q);
        double norm = 0.0;
        try {
            norm = luxemburg_norm(b, f, mu, options.tol).value;
        } catch (const NumericError& e) {
            std::ostringstream msg;
            msg.precision(17);
            msg << "limit_sweep at q=" << q << ": " << e.what();
            throw NumericError(msg.str(), e.residual());
        }
        report.norms[i] = norm;
        report.gaps[i] = std::abs(norm - report.reference);

        auto& checks = report.bound_checks[i];
        const double char_rhs = report.reference * char_norm_closed_form(b, top_mass);
        checks.push_back({kCharLower, norm, char_rhs, norm >= char_rhs * keep});
        if (q >= 1.0) {
            const double rhs = report.reference * std::min(1.0, explicit_char_bound(top_mass, q));
            checks.push_back({kExplicitLower, norm, rhs, norm >= rhs * keep});
        } else {
            checks.push_back({kExplicitLower, norm, 0.0, true, true});
        }
    });

    report.passed = all_bounds_pass(report.bound_checks) && gaps_settle(report.gaps, options.tol * report.reference);
    return report;
}

ConvergenceReport classical_p_sweep(const SampledFunction& f, const DiscreteMeasure& mu,
                                    std::span<const double> p_schedule) {
    require_aligned(f, mu);
    require_nonzero(f, "classical_p_sweep");
    require_schedule(p_schedule, 1, "p");
    if (p_schedule.front() < 1.0) throw DomainError("classical_p_sweep requires p >= 1");

    constexpr double kRel = 1e-12;
    ConvergenceReport report;
    report.exponent = "p";
    report.schedule.assign(p_schedule.begin(), p_schedule.end());
    report.reference = ess_sup(f, mu);
    const double top_mass = top_level_mass(f, mu);
    const double mass = total_mass(mu);

    for (double p : p_schedule) {
        const double norm = p_norm(f, mu, p);
        report.norms.push_back(norm);
        report.gaps.push_back(std::abs(norm - report.reference));
        const double lower = report.reference * std::pow(top_mass, 1.0 / p);
        const double upper = report.reference * std::pow(mass, 1.0 / p);
        report.bound_checks.push_back({
            {kTopLower, norm, lower, norm >= lower * (1.0 - kRel)},
            {kMassUpper, norm, upper, norm <= upper * (1.0 + kRel)},
        });
    }
    report.passed = all_bounds_pass(report.bound_checks) && gaps_settle(report.gaps, kRel * report.reference);
    return report;
}

BoundRecord liminf_bound_check(double m, double p, double q) {
    if (!(m > 0.0)) throw DomainError("liminf_bound_check requires m > 0");
    if (!(q >= 1.0)) throw DomainError("liminf_bound_check requires q >= 1");
    const double lambda = char_norm_closed_form(YoungFunction::log_bump(p, q), m);
    const double bound = explicit_char_bound(m, q);
    if (lambda >= 1.0) return {"liminf_char", lambda, bound, true, true};
    return {"liminf_char", lambda, bound, lambda > bound, false};
}

DeltaRecord delta_relation_check(double lambda, double p, double q) {
    if (!(lambda > 0.0 && lambda < 1.0)) throw DomainError("delta_relation_check requires 0 < lambda < 1");
    if (!(q >= 1.0)) throw DomainError("delta_relation_check requires q >= 1");
    if (!(p >= 1.0)) throw DomainError("delta_relation_check requires p >= 1");

    DeltaRecord r;
    r.lambda = lambda;
    const double log_base = std::log(kE0 + 1.0 / lambda);
    r.delta = log_base - 1.0;
    r.delta_positive = r.delta > 0.0;

    const double log_lhs = -p * std::log(lambda) + q * std::log(log_base);
    const double log_rhs = p * std::log(std::exp(1.0 + r.delta) - kE0) + q * std::log1p(r.delta);
    r.identity_lhs = std::exp(log_lhs);
    r.identity_rhs = std::exp(log_rhs);
    r.identity_rel_err = std::abs(std::expm1(log_rhs - log_lhs));
    r.identity_holds = r.identity_rel_err <= 1e-9;

    const double q_delta = q * r.delta;
    r.bernoulli = 1.0 + q_delta;
    r.bernoulli_holds = log_rhs >= std::log1p(q_delta);
    r.strict_tail = r.bernoulli > q_delta;

    r.pass = r.delta_positive && r.identity_holds && r.bernoulli_holds && r.strict_tail;
    return r;
}

ThresholdRecord upper_bound_threshold(const SampledFunction& f, const DiscreteMeasure& mu, double p, double eps,
                                      std::span<const double> q_schedule, double tol, double slack) {
    require_aligned(f, mu);
    require_nonzero(f, "upper_bound_threshold");
    require_schedule(q_schedule, 1, "q");
    if (!(eps > 0.0)) throw DomainError("upper_bound_threshold requires eps > 0");

    ThresholdRecord r;
    r.eps = eps;
    r.slack = slack;
    r.lambda = (1.0 + eps) * ess_sup(f, mu);
    r.schedule.assign(q_schedule.begin(), q_schedule.end());

    std::vector<double> ratios;
    for (double v : f.values())
        if (v != 0.0) ratios.push_back(std::abs(v) / r.lambda);

    const auto base = YoungFunction::log_bump(p, q_schedule.front());
    const double log_shrink = std::log(std::log(kE0 + 1.0 / (1.0 + eps)));
    r.domination_holds = true;
    r.envelope_holds = true;

    for (double q : q_schedule) {
        const auto b = YoungFunction::log_bump(p, q);
        const double mod = modular(b, f, mu, r.lambda);
        r.modulars.push_back(mod);
        r.norms.push_back(luxemburg_norm(b, f, mu, tol).value);
        if (!r.q_star && mod <= 1.0) r.q_star = q;

        const double envelope = -p * std::log1p(eps) + q * log_shrink;
        const double rounding = 1e-12 * (1.0 + q);
        for (double t : ratios) {
            const double log_value = b.log_eval(t);
            if (!(log_value <= base.log_eval(t))) r.domination_holds = false;
            if (!(log_value <= envelope + rounding)) r.envelope_holds = false;
        }
    }

    if (r.q_star) {
        r.norm_bound_holds = true;
        for (std::size_t i = 0; i < r.schedule.size(); ++i)
            if (r.schedule[i] >= *r.q_star && !(r.norms[i] <= r.lambda + slack)) r.norm_bound_holds = false;
    }
    return r;
}

TruncationReport truncation_sweep(const SampledFunction& f, const DiscreteMeasure& mu, double p,
                                  std::span<const double> n_schedule, std::span<const double> q_schedule,
                                  const SweepOptions& options, double rel_tol) {
    require_schedule(n_schedule, 1, "N");

    TruncationReport report;
    report.full = limit_sweep(f, mu, p, q_schedule, options);
    const double sup = report.full.reference;
    const double full_terminal = report.full.norms.back();

    report.passed = report.full.passed;
    for (double level : n_schedule) {
        TruncationEntry entry;
        entry.level = level;
        entry.target = std::min(sup, level);
        entry.sweep = limit_sweep(truncate(f, level), mu, p, q_schedule, options);
        const double terminal = entry.sweep.norms.back();
        entry.terminal_gap = std::abs(terminal - entry.target);
        entry.converged = entry.terminal_gap <= rel_tol * entry.target;
        entry.dominated = full_terminal >= terminal * (1.0 - options.tol);
        report.passed = report.passed && entry.converged && entry.dominated && entry.sweep.passed;
        report.entries.push_back(std::move(entry));
    }
    return report;
}

LogRatioRecord log_ratio_bound_check(double c, std::span<const double> grid) {
    if (!(c > 0.0)) throw DomainError("log_ratio_bound_check requires c > 0");
    if (grid.empty()) throw InputError("grid must not be empty");

    LogRatioRecord r;
    r.c = c;
    r.inf = std::numeric_limits<double>::infinity();
    r.sup = -std::numeric_limits<double>::infinity();
    for (double t : grid) {
        if (!(t > 0.0)) throw InputError("grid points must be positive");
        const double ratio = std::log(kE0 + t) / std::log(kE0 + c * t);
        r.inf = std::min(r.inf, ratio);
        r.sup = std::max(r.sup, ratio);
    }
    r.pass = r.inf > 0.0 && std::isfinite(r.sup);
    return r;
}

EquivalenceRecord equivalence_norm_check(const SampledFunction& f, const DiscreteMeasure& mu, double p, double q,
                                         std::span<const double> grid, double tol) {
    require_aligned(f, mu);
    require_nonzero(f, "equivalence_norm_check");

    const auto b = YoungFunction::log_bump(p, q, kE0);
    const auto b_bar = YoungFunction::log_bump(p, q, kE);

    EquivalenceRecord r;
    r.norm_e0 = luxemburg_norm(b, f, mu, tol).value;
    r.norm_e = luxemburg_norm(b_bar, f, mu, tol).value;
    r.ratio = r.norm_e0 / r.norm_e;
    r.c_forward = compare(b, b_bar, grid).c_estimate;
    r.c_backward = compare(b_bar, b, grid).c_estimate;
    r.constant = std::max(r.c_forward, r.c_backward);
    r.within_constant = r.ratio >= (1.0 - tol) / r.constant && r.ratio <= r.constant * (1.0 + tol);
    r.domination = r.norm_e0 <= r.norm_e * (1.0 + tol);
    r.pass = r.within_constant && r.domination;
    return r;
}

}  // namespace orlicz
