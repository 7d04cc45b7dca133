#ifndef ORLICZ_CSV_INPUT_HPP
#define ORLICZ_CSV_INPUT_HPP

#include <filesystem>
#include <istream>

#include "orlicz/measure.hpp"

namespace orlicz {

/// Reads a sampled function from CSV. Two layouts are accepted, selected by
/// the header line:
///
///     x,weight,value   explicit atoms
///     x,value          samples; weights synthesized by quadrature_from_samples
///
/// Blank lines are skipped. Throws InputError on anything else.
Discretized read_csv(std::istream& in);
Discretized read_csv_file(const std::filesystem::path& path);

}  // namespace orlicz

#endif  // ORLICZ_CSV_INPUT_HPP
