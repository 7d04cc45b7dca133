#include "orlicz/report.hpp"

#include <cmath>
#include <cstdio>

#include "orlicz/errors.hpp"

namespace orlicz {

namespace {

std::string csv_quote(const std::string& text) {
    if (text.find_first_of(",\"\r\n") == std::string::npos) return text;
    std::string quoted = "\"";
    for (char c : text) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + '"';
}

std::string csv_cell(const Cell& cell) {
    if (const auto* d = std::get_if<double>(&cell)) return format_number(*d);
    if (const auto* b = std::get_if<bool>(&cell)) return *b ? "true" : "false";
    return csv_quote(std::get<std::string>(cell));
}

std::string json_string(const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", ch);
                    out += buf;
                } else {
                    out += ch;
                }
        }
    }
    return out + "\"";
}

std::string json_cell(const Cell& cell) {
    if (const auto* d = std::get_if<double>(&cell)) return std::isfinite(*d) ? format_number(*d) : "null";
    if (const auto* b = std::get_if<bool>(&cell)) return *b ? "true" : "false";
    return json_string(std::get<std::string>(cell));
}

bool row_passes(const std::vector<BoundRecord>& checks) {
    for (const auto& b : checks)
        if (!b.pass) return false;
    return true;
}

}  // namespace

std::string format_number(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void write_csv(std::ostream& out, const Table& table) {
    for (std::size_t i = 0; i < table.columns.size(); ++i) out << (i ? "," : "") << csv_quote(table.columns[i]);
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_cell(row[i]);
        out << '\n';
    }
}

void write_json(std::ostream& out, const Table& table) {
    out << "{\n  \"summary\": {";
    for (std::size_t i = 0; i < table.summary.size(); ++i) {
        out << (i ? ", " : "") << json_string(table.summary[i].first) << ": " << json_cell(table.summary[i].second);
    }
    out << "},\n  \"rows\": [";
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        out << (r ? ",\n" : "\n") << "    {";
        for (std::size_t i = 0; i < table.columns.size(); ++i)
            out << (i ? ", " : "") << json_string(table.columns[i]) << ": " << json_cell(table.rows[r][i]);
        out << "}";
    }
    out << (table.rows.empty() ? "]\n}\n" : "\n  ]\n}\n");
}

Table to_table(const ConvergenceReport& report) {
    Table table;
    table.columns = {report.exponent, "norm", "gap"};
    if (!report.bound_checks.empty())
        for (const auto& b : report.bound_checks.front()) table.columns.push_back(b.name);
    table.columns.push_back("pass");

    for (std::size_t i = 0; i < report.schedule.size(); ++i) {
        std::vector<Cell> row{report.schedule[i], report.norms[i], report.gaps[i]};
        for (const auto& b : report.bound_checks[i]) row.emplace_back(b.rhs);
        row.emplace_back(row_passes(report.bound_checks[i]));
        table.rows.push_back(std::move(row));
    }
    table.summary = {{"reference", report.reference}, {"passed", report.passed}};
    return table;
}

Table to_table(const NormResult& result, const YoungFunction& a) {
    Table table;
    table.columns = {"young", "norm", "bracket_lo", "bracket_hi", "residual", "iterations", "status"};
    table.rows.push_back({a.describe(), result.value, result.bracket_lo, result.bracket_hi, result.residual,
                          static_cast<double>(result.iterations),
                          std::string(result.status == NormStatus::Zero ? "zero" : "finite")});
    return table;
}

Table to_table(const YoungReport& report, const YoungFunction& a) {
    Table table;
    table.columns = {"axiom", "pass", "first_violation"};
    for (const auto& axiom : report.axioms) {
        table.rows.push_back({axiom.name, axiom.pass,
                              axiom.first_violation ? Cell(*axiom.first_violation) : Cell(std::string())});
    }
    table.summary = {{"young", a.describe()}, {"passed", report.all_pass()}};
    return table;
}

Table to_table(const ComparisonResult& result, const YoungFunction& a, const YoungFunction& b) {
    Table table;
    table.columns = {"a", "b", "c_estimate", "certified", "grid_points"};
    table.rows.push_back(
        {a.describe(), b.describe(), result.c_estimate, result.certified, static_cast<double>(result.grid.size())});
    return table;
}

Table to_table(const ConvergenceReport& sweep, const ThresholdRecord& threshold) {
    if (sweep.schedule != threshold.schedule) throw InputError("sweep and threshold schedules differ");
    Table table;
    table.columns = {"q", "norm", "gap"};
    if (!sweep.bound_checks.empty())
        for (const auto& b : sweep.bound_checks.front()) table.columns.push_back(b.name);
    table.columns.insert(table.columns.end(), {"modular_at_lambda", "upper_bound", "pass"});

    for (std::size_t i = 0; i < sweep.schedule.size(); ++i) {
        std::vector<Cell> row{sweep.schedule[i], sweep.norms[i], sweep.gaps[i]};
        for (const auto& b : sweep.bound_checks[i]) row.emplace_back(b.rhs);
        const bool past_threshold = threshold.q_star && sweep.schedule[i] >= *threshold.q_star;
        const bool upper_ok = !past_threshold || threshold.norms[i] <= threshold.lambda + threshold.slack;
        row.emplace_back(threshold.modulars[i]);
        row.emplace_back(past_threshold ? Cell(threshold.lambda) : Cell(std::string()));
        row.emplace_back(row_passes(sweep.bound_checks[i]) && upper_ok);
        table.rows.push_back(std::move(row));
    }
    table.summary = {
        {"reference", sweep.reference},
        {"lambda", threshold.lambda},
        {"eps", threshold.eps},
        {"q_star", threshold.q_star ? Cell(*threshold.q_star) : Cell(std::string("not reached"))},
        {"domination", threshold.domination_holds},
        {"envelope", threshold.envelope_holds},
        {"passed", sweep.passed && threshold.passed()},
    };
    return table;
}

}  // namespace orlicz
