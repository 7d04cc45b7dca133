#ifndef ORLICZ_NORM_HPP
#define ORLICZ_NORM_HPP

#include <cstddef>

#include "orlicz/measure.hpp"
#include "orlicz/young.hpp"

namespace orlicz {

inline constexpr double kDefaultNormTol = 1e-10;

enum class NormStatus { Zero, Finite };

struct NormResult {
    double value = 0.0;
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
    double residual = 0.0;  // |modular(value) - 1|
    std::size_t iterations = 0;
    NormStatus status = NormStatus::Zero;
};

/// sum_i w_i A(|f_i| / lambda).
double modular(const YoungFunction& a, const SampledFunction& f, const DiscreteMeasure& mu, double lambda);

/// Luxemburg norm inf{lambda > 0 : modular(lambda) <= 1}.
///
/// On the atom model the modular is continuous and strictly decreasing in
/// lambda wherever it is positive, so the infimum is the root of
/// modular(lambda) = 1. Bisection starts from two closed-form bounds:
///
///     hi = ess_sup(f) / A^{-1}(1 / mu(supp f))   => modular(hi) <= 1
///     lo = |f_k| / A^{-1}(1 / w_k), k = argmax|f| => modular(lo) >= 1
///
/// and stops once |modular - 1| <= tol or the bracket is narrower than
/// tol * lambda. Since A(t)/t^p is nondecreasing, a residual of tol bounds
/// the relative error in the value by tol / p.
///
/// Throws NumericError after 400 iterations without convergence.
NormResult luxemburg_norm(const YoungFunction& a, const SampledFunction& f, const DiscreteMeasure& mu,
                          double tol = kDefaultNormTol);

/// ||chi_M||_A = 1 / A^{-1}(1 / m) for a set of measure m.
double char_norm_closed_form(const YoungFunction& a, double m);

/// (sum_i w_i |f_i|^p)^{1/p}, with max|f| factored out so large p does not
/// overflow.
double p_norm(const SampledFunction& f, const DiscreteMeasure& mu, double p);

}  // namespace orlicz

#endif  // ORLICZ_NORM_HPP
