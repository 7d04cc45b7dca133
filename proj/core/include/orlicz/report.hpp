#ifndef ORLICZ_REPORT_HPP
#define ORLICZ_REPORT_HPP

#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "orlicz/limits.hpp"
#include "orlicz/norm.hpp"
#include "orlicz/young.hpp"

namespace orlicz {

using Cell = std::variant<double, bool, std::string>;

/// A flat, ordered record set. `summary` carries report-level scalars; it is
/// emitted in JSON only, so the CSV stays one header plus one line per row.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    std::vector<std::pair<std::string, Cell>> summary;
};

/// 17 significant digits; inf/-inf/nan spelled out.
std::string format_number(double x);

void write_csv(std::ostream& out, const Table& table);
/// {"summary": {...}, "rows": [{column: value, ...}, ...]}. Non-finite
/// numbers become null.
void write_json(std::ostream& out, const Table& table);

/// Columns: <exponent>, norm, gap, one column per bound (its rhs), pass.
Table to_table(const ConvergenceReport& report);
Table to_table(const NormResult& result, const YoungFunction& a);
Table to_table(const YoungReport& report, const YoungFunction& a);
Table to_table(const ComparisonResult& result, const YoungFunction& a, const YoungFunction& b);
/// The convergence rows of `sweep` joined with the threshold record; both
/// must share one q schedule.
Table to_table(const ConvergenceReport& sweep, const ThresholdRecord& threshold);

}  // namespace orlicz

#endif  // ORLICZ_REPORT_HPP
