#ifndef ORLICZ_CLI_INPUTS_HPP
#define ORLICZ_CLI_INPUTS_HPP

#include <string_view>
#include <vector>

#include "orlicz/measure.hpp"

namespace orlicz::cli {

/// Expands "start:stop:points:log" or "start:stop:points:lin", or a comma
/// separated list. The result must be strictly increasing.
std::vector<double> parse_schedule(std::string_view spec);

/// Builds a function and measure from a preset name:
///
///   indicator:m        one atom of mass m, value 1
///   geometric:r:n      values r^i for i < n, unit weights
///   step:v1,v2,...     one unit-mass plateau per level
///   ramp:n             f(x) = x sampled at n points on [0, 1], trapezoid weights
Discretized parse_preset(std::string_view spec);

}  // namespace orlicz::cli

#endif  // ORLICZ_CLI_INPUTS_HPP
