#include "orlicz/norm.hpp"

#include <cmath>
#include <sstream>

#include "orlicz/errors.hpp"

namespace orlicz {

namespace {

constexpr std::size_t kMaxIterations = 400;
// Bracket endpoints come from numeric inverses; nudge them outward if rounding
// left them on the wrong side of the root.
constexpr double kBracketNudge = 1e-12;
constexpr int kMaxNudges = 64;

}  // namespace

double modular(const YoungFunction& a, const SampledFunction& f, const DiscreteMeasure& mu, double lambda) {
    if (!(lambda > 0.0)) throw DomainError("modular requires lambda > 0");
    require_aligned(f, mu);
    double sum = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const double v = std::abs(f[i]);
        if (v == 0.0) continue;
        sum += mu.weight(i) * a.eval(v / lambda);
    }
    return sum;
}

NormResult luxemburg_norm(const YoungFunction& a, const SampledFunction& f, const DiscreteMeasure& mu,
                          double tol) {
    if (!(tol > 0.0)) throw DomainError("luxemburg_norm requires tol > 0");
    require_aligned(f, mu);

    NormResult result;
    if (f.is_zero()) return result;
    result.status = NormStatus::Finite;

    double sup = 0.0;
    double support_mass = 0.0;
    double top_weight = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const double v = std::abs(f[i]);
        if (v == 0.0) continue;
        support_mass += mu.weight(i);
        if (v > sup) {
            sup = v;
            top_weight = mu.weight(i);
        } else if (v == sup) {
            top_weight = std::max(top_weight, mu.weight(i));
        }
    }

    const auto g = [&](double lambda) { return modular(a, f, mu, lambda) - 1.0; };

    double hi = sup / a.inverse(1.0 / support_mass);
    double lo = sup / a.inverse(1.0 / top_weight);
    double g_hi = g(hi);
    double g_lo = g(lo);
    for (int k = 0; g_hi > tol && k < kMaxNudges; ++k) g_hi = g(hi *= 1.0 + kBracketNudge);
    for (int k = 0; g_lo < -tol && k < kMaxNudges; ++k) g_lo = g(lo *= 1.0 - kBracketNudge);
    if (g_hi > tol || g_lo < -tol) {
        std::ostringstream msg;
        msg << "luxemburg_norm: could not certify bracket [" << lo << ", " << hi << "] for " << a.describe();
        throw NumericError(msg.str(), std::max(g_hi, -g_lo));
    }

    const auto finish = [&](double value, double residual) {
        result.value = value;
        result.bracket_lo = std::min(lo, value);
        result.bracket_hi = std::max(hi, value);
        result.residual = residual;
        return result;
    };

    if (std::abs(g_hi) <= tol) return finish(hi, std::abs(g_hi));
    if (std::abs(g_lo) <= tol) return finish(lo, std::abs(g_lo));

    while (result.iterations < kMaxIterations) {
        ++result.iterations;
        const double mid = lo + 0.5 * (hi - lo);
        if (mid <= lo || mid >= hi) return finish(mid, std::abs(g(mid)));
        const double g_mid = g(mid);
        if (std::abs(g_mid) <= tol) return finish(mid, std::abs(g_mid));
        (g_mid > 0.0 ? lo : hi) = mid;
        if (hi - lo <= tol * mid) {
            const double value = lo + 0.5 * (hi - lo);
            return finish(value, std::abs(g(value)));
        }
    }

    std::ostringstream msg;
    msg << "luxemburg_norm: no convergence after " << kMaxIterations << " iterations for " << a.describe()
        << ", bracket [" << lo << ", " << hi << "]";
    throw NumericError(msg.str(), std::abs(g(lo + 0.5 * (hi - lo))));
}

double char_norm_closed_form(const YoungFunction& a, double m) {
    if (!(m > 0.0)) throw DomainError("char_norm_closed_form requires m > 0");
    return 1.0 / a.inverse(1.0 / m);
}

double p_norm(const SampledFunction& f, const DiscreteMeasure& mu, double p) {
    if (!(p >= 1.0)) throw DomainError("p_norm requires p >= 1");
    const double sup = ess_sup(f, mu);
    if (sup == 0.0) return 0.0;
    double sum = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const double v = std::abs(f[i]);
        if (v == 0.0) continue;
        sum += mu.weight(i) * std::pow(v / sup, p);
    }
    return sup * std::pow(sum, 1.0 / p);
}

}  // namespace orlicz
