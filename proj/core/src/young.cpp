#include "orlicz/young.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <sstream>

#include "orlicz/errors.hpp"

namespace orlicz {

namespace {

constexpr int kInverseIterations = 200;
constexpr double kOverflowLog = 700.0;
constexpr double kDirectMaxQ = 50.0;

// ln(exp(a) + exp(b)) without overflow.
double log_add_exp(double a, double b) {
    if (a < b) std::swap(a, b);
    if (b == -std::numeric_limits<double>::infinity()) return a;
    return a + std::log1p(std::exp(b - a));
}

void require_grid(std::span<const double> grid, bool sorted) {
    if (grid.empty()) throw InputError("grid must not be empty");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!(grid[i] > 0.0) || !std::isfinite(grid[i]))
            throw InputError("grid points must be finite and strictly positive");
        if (sorted && i > 0 && !(grid[i - 1] < grid[i]))
            throw InputError("grid must be strictly increasing");
    }
}

}  // namespace

YoungFunction YoungFunction::power(double p) {
    if (!(p >= 1.0) || !std::isfinite(p)) throw DomainError("Young power requires finite p >= 1");
    return YoungFunction(YoungKind::Power, p, 0.0, kE0);
}

YoungFunction YoungFunction::log_bump(double p, double q, double shift) {
    if (!(p >= 1.0) || !std::isfinite(p)) throw DomainError("Young log-bump requires finite p >= 1");
    if (!(q >= 0.0) || !std::isfinite(q)) throw DomainError("Young log-bump requires finite q >= 0");
    if (!(shift > 0.0) || !std::isfinite(shift)) throw DomainError("Young log-bump requires shift > 0");
    return YoungFunction(YoungKind::LogBump, p, q, shift);
}

double YoungFunction::log_eval(double t) const {
    if (!(t > 0.0)) throw DomainError("log_eval requires t > 0");
    double value = p_ * std::log(t);
    if (kind_ == YoungKind::LogBump && q_ != 0.0) {
        const double inner = std::log(shift_ + t);
        if (!(inner > 0.0)) throw DomainError("log_eval requires log(shift + t) > 0");
        value += q_ * std::log(inner);
    }
    return value;
}

double YoungFunction::eval(double t) const {
    if (!(t >= 0.0)) throw DomainError("eval requires t >= 0");
    if (t == 0.0) return 0.0;
    if (std::isinf(t)) return t;

    const bool has_log = kind_ == YoungKind::LogBump && q_ != 0.0;
    if (!has_log) {
        const double direct = std::pow(t, p_);
        if (std::isfinite(direct) && direct > 0.0) return direct;
        return std::exp(log_eval(t));
    }
    const double log_value = log_eval(t);
    if (q_ > kDirectMaxQ || log_value > kOverflowLog || log_value < -kOverflowLog)
        return std::exp(log_value);
    return std::pow(t, p_) * std::pow(std::log(shift_ + t), q_);
}

double YoungFunction::inverse(double y, double tol) const {
    if (!(y >= 0.0)) throw DomainError("inverse requires y >= 0");
    if (y == 0.0) return 0.0;
    if (std::isinf(y)) throw DomainError("inverse requires finite y");
    return inverse_log(std::log(y), tol);
}

double YoungFunction::inverse_log(double log_y, double tol) const {
    if (!(tol > 0.0)) throw DomainError("inverse requires tol > 0");
    if (std::isnan(log_y)) throw DomainError("inverse target is NaN");
    if (log_y == -std::numeric_limits<double>::infinity()) return 0.0;

    const auto gap = [&](double t) { return log_eval(t) - log_y; };

    double lo = 1.0;
    double hi = 1.0;
    const double at_one = gap(1.0);
    if (at_one == 0.0) return 1.0;
    if (at_one < 0.0) {
        hi = 2.0;
        while (gap(hi) < 0.0) {
            lo = hi;
            hi *= 2.0;
            if (std::isinf(hi))
                throw NumericError("inverse: bracket expansion overflowed", std::abs(gap(lo)));
        }
    } else {
        lo = 0.5;
        while (gap(lo) > 0.0) {
            hi = lo;
            lo *= 0.5;
            if (lo == 0.0)
                throw NumericError("inverse: bracket expansion underflowed", std::abs(gap(hi)));
        }
    }

    for (int it = 0; it < kInverseIterations; ++it) {
        const double mid = lo + 0.5 * (hi - lo);
        if (mid <= lo || mid >= hi) break;
        const double g = gap(mid);
        if (g == 0.0) {
            lo = hi = mid;
            break;
        }
        (g < 0.0 ? lo : hi) = mid;
    }

    const double g_lo = gap(lo);
    const double g_hi = gap(hi);
    const double t = std::abs(g_lo) <= std::abs(g_hi) ? lo : hi;
    const double g = std::min(std::abs(g_lo), std::abs(g_hi));

    // |A(t) - y| / max(1, y) = |expm1(g)| * min(1, y)
    const double residual = std::abs(std::expm1(g)) * std::exp(std::min(log_y, 0.0));
    // A bracket of adjacent doubles is as converged as bisection can get; for
    // q around 1e6 one ulp in t already moves A(t) by about 1e-10 relative.
    const bool resolved = std::nextafter(lo, hi) >= hi;
    if (!(residual <= tol) && !resolved) {
        std::ostringstream msg;
        msg << "inverse of " << describe() << " did not converge: residual " << residual;
        throw NumericError(msg.str(), residual);
    }
    return t;
}

std::string YoungFunction::describe() const {
    std::ostringstream out;
    out.precision(17);
    if (kind_ == YoungKind::Power) {
        out << "Power(p=" << p_ << ")";
    } else {
        out << "LogBump(p=" << p_ << ", q=" << q_ << ", shift=";
        if (shift_ == kE0)
            out << "e-1";
        else if (shift_ == kE)
            out << "e";
        else
            out << shift_;
        out << ")";
    }
    return out.str();
}

std::vector<double> log_grid(double lo, double hi, std::size_t n) {
    if (!(lo > 0.0) || !(hi >= lo) || n == 0) throw InputError("log_grid requires 0 < lo <= hi and n >= 1");
    std::vector<double> grid(n);
    if (n == 1) {
        grid[0] = lo;
        return grid;
    }
    const double a = std::log10(lo);
    const double b = std::log10(hi);
    for (std::size_t i = 0; i < n; ++i) {
        const double s = static_cast<double>(i) / static_cast<double>(n - 1);
        grid[i] = std::pow(10.0, a + (b - a) * s);
    }
    // Snap points that land within a few ulps of a short decimal, so that
    // 1:1024:11 gives 2, 4, 8, ... rather than 2.0000000000000004.
    for (double& x : grid) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.12g", x);
        const double snapped = std::strtod(buf, nullptr);
        if (std::abs(snapped - x) <= 8.0 * std::numeric_limits<double>::epsilon() * x) x = snapped;
    }
    grid.front() = lo;
    grid.back() = hi;
    return grid;
}

std::vector<double> default_grid() { return log_grid(1e-6, 1e6, 64); }

bool YoungReport::all_pass() const {
    return std::all_of(axioms.begin(), axioms.end(), [](const AxiomCheck& a) { return a.pass; });
}

const AxiomCheck& YoungReport::axiom(const std::string& name) const {
    for (const auto& a : axioms)
        if (a.name == name) return a;
    throw InputError("no axiom named " + name);
}

YoungReport check_young(const YoungFunction& a, std::span<const double> grid) {
    require_grid(grid, true);
    constexpr double kConvexSlack = 1e-12;

    std::vector<double> logs(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) logs[i] = a.log_eval(grid[i]);

    const auto fail_at = [](AxiomCheck& check, double t) {
        if (check.pass) {
            check.pass = false;
            check.first_violation = t;
        }
    };

    AxiomCheck zero{kAxiomZero, true, std::nullopt};
    if (a.eval(0.0) != 0.0) fail_at(zero, 0.0);

    AxiomCheck monotone{kAxiomMonotone, true, std::nullopt};
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (!(logs[i - 1] < logs[i])) fail_at(monotone, grid[i]);

    // A(t1) <= alpha A(t0) + beta A(t2) with t1 = alpha t0 + beta t2.
    AxiomCheck convex{kAxiomConvex, true, std::nullopt};
    for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
        const double span = grid[i + 1] - grid[i - 1];
        const double alpha = (grid[i + 1] - grid[i]) / span;
        const double beta = (grid[i] - grid[i - 1]) / span;
        const double chord = log_add_exp(std::log(alpha) + logs[i - 1], std::log(beta) + logs[i + 1]);
        if (!(logs[i] <= chord + kConvexSlack)) fail_at(convex, grid[i]);
    }

    AxiomCheck superlinear{kAxiomSuperlinear, true, std::nullopt};
    std::optional<double> prev;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (grid[i] < 1.0) continue;
        const double ratio = logs[i] - std::log(grid[i]);
        if (prev && !(*prev < ratio)) fail_at(superlinear, grid[i]);
        prev = ratio;
    }

    return YoungReport{{zero, monotone, convex, superlinear}};
}

ComparisonResult compare(const YoungFunction& a, const YoungFunction& b,
                         std::span<const double> grid, double tol) {
    require_grid(grid, false);

    ComparisonResult result;
    result.grid.assign(grid.begin(), grid.end());
    for (double t : grid) {
        const double s = b.inverse_log(a.log_eval(t));
        result.c_estimate = std::max(result.c_estimate, s / t);
    }

    result.certified = true;
    const double slack = std::log1p(tol);
    for (double t : grid) {
        if (!(a.log_eval(t) <= b.log_eval(result.c_estimate * t) + slack)) {
            result.certified = false;
            break;
        }
    }
    return result;
}

}  // namespace orlicz
