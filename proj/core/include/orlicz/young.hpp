#ifndef ORLICZ_YOUNG_HPP
#define ORLICZ_YOUNG_HPP

#include <cstddef>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace orlicz {

/// e - 1. With this shift log(e0 + 1) = 1, so B_pq(1) = 1 for every p, q.
inline constexpr double kE0 = std::numbers::e - 1.0;
inline constexpr double kE = std::numbers::e;

enum class YoungKind { Power, LogBump };

/// A member of the Young family
///
///     Power:    A(t) = t^p
///     LogBump:  A(t) = t^p * log(shift + t)^q
///
/// Instances are immutable. LogBump with q = 0 evaluates identically to Power.
class YoungFunction {
public:
    static YoungFunction power(double p);
    static YoungFunction log_bump(double p, double q, double shift = kE0);

    YoungKind kind() const noexcept { return kind_; }
    double p() const noexcept { return p_; }
    double q() const noexcept { return q_; }
    double shift() const noexcept { return shift_; }

    /// A(t) for t >= 0. Switches to exp(log_eval(t)) when q > 50 or when the
    /// log-value exceeds 700, so the result saturates to +inf / 0 instead of
    /// producing inf * 0 or NaN.
    double eval(double t) const;

    /// ln A(t) for t > 0.
    double log_eval(double t) const;

    /// Smallest t >= 0 with A(t) = y, located by bracket doubling from t = 1
    /// and bisection on the increasing log_eval. inverse(0) == 0 exactly.
    /// Throws NumericError unless |A(t) - y| <= tol * max(1, y) or the
    /// bracket has shrunk to adjacent doubles.
    double inverse(double y, double tol = 1e-10) const;

    /// As inverse(), with the target given as ln y. Lets callers invert
    /// values that do not fit in a double.
    double inverse_log(double log_y, double tol = 1e-10) const;

    std::string describe() const;

    friend bool operator==(const YoungFunction&, const YoungFunction&) = default;

private:
    YoungFunction(YoungKind kind, double p, double q, double shift)
        : kind_(kind), p_(p), q_(q), shift_(shift) {}

    YoungKind kind_;
    double p_;
    double q_;
    double shift_;
};

/// Logarithmically spaced points from lo to hi inclusive.
std::vector<double> log_grid(double lo, double hi, std::size_t n);

/// 64 log-spaced points on [1e-6, 1e6]; straddles the t = 1 knee.
std::vector<double> default_grid();

struct AxiomCheck {
    std::string name;
    bool pass = true;
    std::optional<double> first_violation;  // grid t where the check first failed
};

struct YoungReport {
    std::vector<AxiomCheck> axioms;

    bool all_pass() const;
    const AxiomCheck& axiom(const std::string& name) const;
};

// Axiom names reported by check_young.
inline constexpr const char* kAxiomZero = "zero_at_zero";
inline constexpr const char* kAxiomMonotone = "strictly_increasing";
inline constexpr const char* kAxiomConvex = "convex";
inline constexpr const char* kAxiomSuperlinear = "superlinear";

/// Grid check of the Young axioms. Convexity is tested with the chord
/// inequality on each consecutive triple; superlinearity requires A(t)/t to
/// strictly increase across the grid points with t >= 1. All comparisons run
/// in the log domain, so q in the thousands is fine.
YoungReport check_young(const YoungFunction& a, std::span<const double> grid);

struct ComparisonResult {
    double c_estimate = 0.0;
    std::vector<double> grid;
    bool certified = false;
};

/// Grid certificate for A <~ B: the smallest c with A(t) <= B(c t) at every
/// grid point. This spot-checks the relation; it does not prove it for all t.
ComparisonResult compare(const YoungFunction& a, const YoungFunction& b,
                         std::span<const double> grid, double tol = 1e-9);

}  // namespace orlicz

#endif  // ORLICZ_YOUNG_HPP
