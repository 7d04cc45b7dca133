#ifndef ORLICZ_MEASURE_HPP
#define ORLICZ_MEASURE_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace orlicz {

struct Atom {
    double x = 0.0;       // coordinate label; carries no mass
    double weight = 0.0;  // mu({x}) > 0
};

/// A measure space made of finitely many weighted atoms. Every subset of atoms
/// is measurable.
class DiscreteMeasure {
public:
    explicit DiscreteMeasure(std::vector<Atom> atoms);

    /// Atoms labelled 0, 1, 2, ... with the given weights.
    static DiscreteMeasure from_weights(std::span<const double> weights);
    /// n atoms of unit mass.
    static DiscreteMeasure counting(std::size_t n);

    std::size_t size() const noexcept { return atoms_.size(); }
    const std::vector<Atom>& atoms() const noexcept { return atoms_; }
    double weight(std::size_t i) const { return atoms_.at(i).weight; }

private:
    std::vector<Atom> atoms_;
};

/// One finite real value per atom of an associated DiscreteMeasure.
class SampledFunction {
public:
    explicit SampledFunction(std::vector<double> values);

    std::size_t size() const noexcept { return values_.size(); }
    std::span<const double> values() const noexcept { return values_; }
    double operator[](std::size_t i) const { return values_[i]; }

    bool is_zero() const noexcept;

private:
    std::vector<double> values_;
};

/// Throws InputError unless f has one value per atom of mu.
void require_aligned(const SampledFunction& f, const DiscreteMeasure& mu);

double total_mass(const DiscreteMeasure& mu);

/// max |f| over the atoms. Exact on the atom model; when the atoms come from
/// quadrature_from_samples this approximates the continuous ess-sup from below.
double ess_sup(const SampledFunction& f, const DiscreteMeasure& mu);

/// mu({x : |f(x)| > lambda}), strict inequality.
double level_set_measure(const SampledFunction& f, const DiscreteMeasure& mu, double lambda);

/// Pointwise min(|f|, n).
SampledFunction truncate(const SampledFunction& f, double n);

/// Characteristic function of the listed atoms.
SampledFunction indicator(const DiscreteMeasure& mu, std::span<const std::size_t> subset);

/// Pointwise c * f.
SampledFunction scaled(const SampledFunction& f, double c);

/// Mass of the atoms where |f| attains ess_sup(f).
double top_level_mass(const SampledFunction& f, const DiscreteMeasure& mu);

struct Discretized {
    DiscreteMeasure measure;
    SampledFunction function;
};

/// Trapezoid weights w_i = (x_{i+1} - x_{i-1}) / 2 with half intervals at the
/// ends, so the total mass is x_last - x_first.
Discretized quadrature_from_samples(std::span<const double> xs, std::span<const double> ys);

}  // namespace orlicz

#endif  // ORLICZ_MEASURE_HPP
