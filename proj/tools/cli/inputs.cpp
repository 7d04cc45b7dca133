#include "cli/inputs.hpp"

#include <charconv>
#include <cmath>
#include <string>

#include "orlicz/errors.hpp"
#include "orlicz/young.hpp"

namespace orlicz::cli {

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        parts.push_back(s.substr(start, pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

double to_double(std::string_view s, std::string_view context) {
    double value = 0.0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc() || end != s.data() + s.size() || !std::isfinite(value))
        throw InputError(std::string(context) + ": not a number: '" + std::string(s) + "'");
    return value;
}

std::size_t to_count(std::string_view s, std::string_view context) {
    std::size_t value = 0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc() || end != s.data() + s.size())
        throw InputError(std::string(context) + ": not a count: '" + std::string(s) + "'");
    return value;
}

}  // namespace

std::vector<double> parse_schedule(std::string_view spec) {
    std::vector<double> schedule;
    const auto parts = split(spec, ':');
    if (parts.size() == 4) {
        const double start = to_double(parts[0], "schedule start");
        const double stop = to_double(parts[1], "schedule stop");
        const std::size_t points = to_count(parts[2], "schedule points");
        if (points < 1) throw InputError("schedule needs at least one point");
        if (!(start < stop) && points > 1) throw InputError("schedule start must be below stop");
        if (parts[3] == "log") {
            if (!(start > 0.0)) throw InputError("log schedule needs a positive start");
            schedule = log_grid(start, stop, points);
        } else if (parts[3] == "lin") {
            schedule.resize(points);
            for (std::size_t i = 0; i < points; ++i) {
                const double s = points == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(points - 1);
                schedule[i] = start + (stop - start) * s;
            }
            schedule.back() = points == 1 ? start : stop;
        } else {
            throw InputError("schedule spacing must be 'log' or 'lin'");
        }
    } else if (parts.size() == 1) {
        for (auto item : split(spec, ',')) schedule.push_back(to_double(item, "schedule entry"));
    } else {
        throw InputError("schedule must be start:stop:points:log|lin or a comma list");
    }
    for (std::size_t i = 1; i < schedule.size(); ++i)
        if (!(schedule[i - 1] < schedule[i])) throw InputError("schedule must be strictly increasing");
    return schedule;
}

Discretized parse_preset(std::string_view spec) {
    const auto colon = spec.find(':');
    if (colon == std::string_view::npos) throw InputError("preset must look like name:args");
    const auto name = spec.substr(0, colon);
    const auto args = spec.substr(colon + 1);

    if (name == "indicator") {
        const double m = to_double(args, "indicator mass");
        return {DiscreteMeasure({{0.0, m}}), SampledFunction({1.0})};
    }
    if (name == "geometric") {
        const auto parts = split(args, ':');
        if (parts.size() != 2) throw InputError("geometric preset is geometric:ratio:n");
        const double ratio = to_double(parts[0], "geometric ratio");
        const std::size_t n = to_count(parts[1], "geometric length");
        if (n == 0) throw InputError("geometric preset needs n >= 1");
        std::vector<double> values(n);
        for (std::size_t i = 0; i < n; ++i) values[i] = std::pow(ratio, static_cast<double>(i));
        return {DiscreteMeasure::counting(n), SampledFunction(std::move(values))};
    }
    if (name == "step") {
        std::vector<double> values;
        for (auto item : split(args, ',')) values.push_back(to_double(item, "step level"));
        return {DiscreteMeasure::counting(values.size()), SampledFunction(std::move(values))};
    }
    if (name == "ramp") {
        const std::size_t n = to_count(args, "ramp samples");
        if (n < 2) throw InputError("ramp preset needs n >= 2");
        std::vector<double> xs(n);
        for (std::size_t i = 0; i < n; ++i) xs[i] = static_cast<double>(i) / static_cast<double>(n - 1);
        return quadrature_from_samples(xs, xs);
    }
    throw InputError("unknown preset '" + std::string(name) + "'");
}

}  // namespace orlicz::cli
