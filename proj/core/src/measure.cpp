#include "orlicz/measure.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "orlicz/errors.hpp"

namespace orlicz {

DiscreteMeasure::DiscreteMeasure(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
    if (atoms_.empty()) throw InputError("a discrete measure needs at least one atom");
    double mass = 0.0;
    for (const auto& atom : atoms_) {
        if (!(atom.weight > 0.0) || !std::isfinite(atom.weight))
            throw InputError("atom weights must be finite and positive");
        if (!std::isfinite(atom.x)) throw InputError("atom coordinates must be finite");
        mass += atom.weight;
    }
    if (!std::isfinite(mass)) throw InputError("total mass overflows");
}

DiscreteMeasure DiscreteMeasure::from_weights(std::span<const double> weights) {
    std::vector<Atom> atoms;
    atoms.reserve(weights.size());
    for (std::size_t i = 0; i < weights.size(); ++i) atoms.push_back({static_cast<double>(i), weights[i]});
    return DiscreteMeasure(std::move(atoms));
}

DiscreteMeasure DiscreteMeasure::counting(std::size_t n) {
    std::vector<double> weights(n, 1.0);
    return from_weights(weights);
}

SampledFunction::SampledFunction(std::vector<double> values) : values_(std::move(values)) {
    for (double v : values_)
        if (!std::isfinite(v)) throw InputError("function values must be finite");
}

bool SampledFunction::is_zero() const noexcept {
    return std::all_of(values_.begin(), values_.end(), [](double v) { return v == 0.0; });
}

void require_aligned(const SampledFunction& f, const DiscreteMeasure& mu) {
    if (f.size() != mu.size())
        throw InputError("function has " + std::to_string(f.size()) + " values but the measure has " +
                         std::to_string(mu.size()) + " atoms");
}

double total_mass(const DiscreteMeasure& mu) {
    double mass = 0.0;
    for (const auto& atom : mu.atoms()) mass += atom.weight;
    return mass;
}

double ess_sup(const SampledFunction& f, const DiscreteMeasure& mu) {
    require_aligned(f, mu);
    double sup = 0.0;
    for (double v : f.values()) sup = std::max(sup, std::abs(v));
    return sup;
}

double level_set_measure(const SampledFunction& f, const DiscreteMeasure& mu, double lambda) {
    require_aligned(f, mu);
    double mass = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i)
        if (std::abs(f[i]) > lambda) mass += mu.weight(i);
    return mass;
}

SampledFunction truncate(const SampledFunction& f, double n) {
    if (!(n > 0.0)) throw DomainError("truncation level must be positive");
    std::vector<double> out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) out[i] = std::min(std::abs(f[i]), n);
    return SampledFunction(std::move(out));
}

SampledFunction indicator(const DiscreteMeasure& mu, std::span<const std::size_t> subset) {
    std::vector<double> out(mu.size(), 0.0);
    for (std::size_t i : subset) {
        if (i >= mu.size())
            throw InputError("indicator index " + std::to_string(i) + " out of range");
        out[i] = 1.0;
    }
    return SampledFunction(std::move(out));
}

SampledFunction scaled(const SampledFunction& f, double c) {
    std::vector<double> out(f.values().begin(), f.values().end());
    for (double& v : out) v *= c;
    return SampledFunction(std::move(out));
}

double top_level_mass(const SampledFunction& f, const DiscreteMeasure& mu) {
    const double sup = ess_sup(f, mu);
    double mass = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i)
        if (std::abs(f[i]) == sup) mass += mu.weight(i);
    return mass;
}

Discretized quadrature_from_samples(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size()) throw InputError("xs and ys differ in length");
    if (xs.size() < 2) throw InputError("quadrature needs at least two samples");
    for (std::size_t i = 1; i < xs.size(); ++i)
        if (!(xs[i - 1] < xs[i])) throw InputError("sample abscissae must be strictly increasing");

    const std::size_t n = xs.size();
    std::vector<Atom> atoms(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double left = i == 0 ? xs[0] : xs[i - 1];
        const double right = i + 1 == n ? xs[n - 1] : xs[i + 1];
        atoms[i] = {xs[i], 0.5 * (right - left)};
    }
    return {DiscreteMeasure(std::move(atoms)), SampledFunction({ys.begin(), ys.end()})};
}

}  // namespace orlicz
