#include "orlicz/csv_input.hpp"

#include <charconv>
#include <fstream>
#include <string>
#include <string_view>
#include <vector>

#include "orlicz/errors.hpp"

namespace orlicz {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        fields.push_back(trim(line.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return fields;
}

double parse_number(std::string_view field, std::size_t line_no) {
    // from_chars rejects a leading '+', strtod-style inputs are otherwise fine
    if (!field.empty() && field.front() == '+') field.remove_prefix(1);
    double value = 0.0;
    const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || end != field.data() + field.size())
        throw InputError("line " + std::to_string(line_no) + ": not a number: '" + std::string(field) + "'");
    return value;
}

}  // namespace

Discretized read_csv(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    std::vector<std::string_view> header;
    std::string header_line;
    while (std::getline(in, line)) {
        ++line_no;
        if (!trim(line).empty()) {
            header_line = line;
            header = split(header_line);
            break;
        }
    }
    if (header.empty()) throw InputError("CSV input is empty");

    const bool explicit_weights = header == std::vector<std::string_view>{"x", "weight", "value"};
    const bool samples = header == std::vector<std::string_view>{"x", "value"};
    if (!explicit_weights && !samples)
        throw InputError("CSV header must be 'x,weight,value' or 'x,value'");

    std::vector<double> xs, weights, values;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        const auto fields = split(line);
        if (fields.size() != header.size())
            throw InputError("line " + std::to_string(line_no) + ": expected " + std::to_string(header.size()) +
                             " fields");
        xs.push_back(parse_number(fields[0], line_no));
        if (explicit_weights) {
            weights.push_back(parse_number(fields[1], line_no));
            values.push_back(parse_number(fields[2], line_no));
        } else {
            values.push_back(parse_number(fields[1], line_no));
        }
    }
    if (xs.empty()) throw InputError("CSV input has no data rows");

    if (samples) return quadrature_from_samples(xs, values);

    std::vector<Atom> atoms(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) atoms[i] = {xs[i], weights[i]};
    return {DiscreteMeasure(std::move(atoms)), SampledFunction(std::move(values))};
}

Discretized read_csv_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path.string());
    return read_csv(in);
}

}  // namespace orlicz
