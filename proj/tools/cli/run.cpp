#include "cli/run.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <map>

#include "cli/inputs.hpp"
#include "orlicz/csv_input.hpp"
#include "orlicz/errors.hpp"
#include "orlicz/limits.hpp"
#include "orlicz/norm.hpp"
#include "orlicz/report.hpp"

namespace orlicz::cli {

namespace {

Discretized load_function(const RunConfig& config) {
    if (config.preset.has_value() == config.input.has_value())
        throw InputError("exactly one of --preset or --input is required");
    if (config.preset) return parse_preset(*config.preset);
    return read_csv_file(*config.input);
}

std::vector<double> load_grid(const RunConfig& config) {
    return config.grid ? parse_schedule(*config.grid) : default_grid();
}

Table build_table(const RunConfig& config) {
    const auto young = YoungFunction::log_bump(config.p, config.q, config.shift);
    const SweepOptions options{config.tol, config.threads};

    switch (config.command) {
        case Command::Norm: {
            const auto data = load_function(config);
            return to_table(luxemburg_norm(young, data.function, data.measure, config.tol), young);
        }
        case Command::Sweep: {
            const auto data = load_function(config);
            const auto schedule = parse_schedule(config.q_grid);
            return to_table(limit_sweep(data.function, data.measure, config.p, schedule, options));
        }
        case Command::Classical: {
            const auto data = load_function(config);
            const auto schedule = parse_schedule(config.p_grid);
            return to_table(classical_p_sweep(data.function, data.measure, schedule));
        }
        case Command::Bounds: {
            const auto data = load_function(config);
            const auto schedule = parse_schedule(config.q_grid);
            const auto sweep = limit_sweep(data.function, data.measure, config.p, schedule, options);
            const auto threshold =
                upper_bound_threshold(data.function, data.measure, config.p, config.eps, schedule, config.tol);
            return to_table(sweep, threshold);
        }
        case Command::CheckYoung: {
            const auto grid = load_grid(config);
            return to_table(check_young(young, grid), young);
        }
        case Command::Compare: {
            const auto grid = load_grid(config);
            const double other_shift = config.shift == kE0 ? kE : kE0;
            const auto against = YoungFunction::log_bump(config.against_p.value_or(config.p),
                                                         config.against_q.value_or(config.q),
                                                         config.against_shift.value_or(other_shift));
            return to_table(compare(young, against, grid), young, against);
        }
    }
    throw InputError("unknown command");
}

void emit(const Table& table, Format format, std::ostream& out) {
    if (format == Format::Json)
        write_json(out, table);
    else
        write_csv(out, table);
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        const Table table = build_table(config);
        if (config.output) {
            std::ofstream file(*config.output, std::ios::binary | std::ios::trunc);
            if (!file) throw InputError("cannot write " + config.output->string());
            emit(table, config.format, file);
            if (!file) throw InputError("write failed: " + config.output->string());
        } else {
            emit(table, config.format, out);
        }
        return kExitOk;
    } catch (const NumericError& e) {
        err << "orlicz: numeric failure: " << e.what() << '\n';
        return kExitNumeric;
    } catch (const std::invalid_argument& e) {
        err << "orlicz: invalid input: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::domain_error& e) {
        err << "orlicz: invalid input: " << e.what() << '\n';
        return kExitValidation;
    }
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Luxemburg norms for log-bump Young functions and q -> infinity limit experiments"};
    app.require_subcommand(1);

    RunConfig config;
    std::string shift = "e0";
    std::string against_shift;
    std::string format = "csv";
    std::string preset;
    std::string input;
    std::string output;
    std::string grid;

    const std::map<std::string, Command> commands{
        {"norm", Command::Norm},       {"sweep", Command::Sweep},
        {"classical", Command::Classical}, {"bounds", Command::Bounds},
        {"check-young", Command::CheckYoung}, {"compare", Command::Compare},
    };
    const std::map<std::string, const char*> help{
        {"norm", "Luxemburg norm of a function"},
        {"sweep", "norms along a q schedule with gaps to the sup norm"},
        {"classical", "L^p norms along a p schedule"},
        {"bounds", "q sweep plus the (1+eps) sup-norm threshold"},
        {"check-young", "grid check of the Young-function axioms"},
        {"compare", "grid certificate for A(t) <= B(c t)"},
    };

    for (const auto& [name, command] : commands) {
        auto* sub = app.add_subcommand(name, help.at(name));
        sub->add_option("--p", config.p, "power exponent (>= 1)");
        sub->add_option("--q", config.q, "log exponent (>= 0)");
        sub->add_option("--shift", shift, "log shift")->check(CLI::IsMember({"e0", "e"}));
        sub->add_option("--tol", config.tol, "solver tolerance");
        sub->add_option("--format", format, "report format")->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("-o,--output", output, "report path (stdout if omitted)");
        if (command == Command::CheckYoung || command == Command::Compare) {
            sub->add_option("--grid", grid, "t grid, start:stop:points:log");
        } else {
            auto* preset_opt = sub->add_option("--preset", preset, "indicator:m | geometric:r:n | step:v,... | ramp:n");
            auto* input_opt = sub->add_option("--input", input, "CSV with x,weight,value or x,value");
            preset_opt->excludes(input_opt);
        }
        if (command == Command::Sweep || command == Command::Bounds) {
            sub->add_option("--q-grid", config.q_grid, "q schedule");
            sub->add_option("--threads", config.threads, "worker threads for the sweep");
        }
        if (command == Command::Bounds) sub->add_option("--eps", config.eps, "lambda = (1 + eps) ||f||_inf");
        if (command == Command::Classical) sub->add_option("--p-grid", config.p_grid, "p schedule");
        if (command == Command::Compare) {
            sub->add_option("--against-p", config.against_p, "p of the right-hand function");
            sub->add_option("--against-q", config.against_q, "q of the right-hand function");
            sub->add_option("--against-shift", against_shift, "shift of the right-hand function")
                ->check(CLI::IsMember({"e0", "e"}));
        }
        sub->callback([&config, command = command] { config.command = command; });
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();  // program name
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitValidation;
    }

    config.shift = shift == "e" ? kE : kE0;
    if (!against_shift.empty()) config.against_shift = against_shift == "e" ? kE : kE0;
    config.format = format == "json" ? Format::Json : Format::Csv;
    if (!preset.empty()) config.preset = preset;
    if (!input.empty()) config.input = input;
    if (!output.empty()) config.output = output;
    if (!grid.empty()) config.grid = grid;
    return run(config, out, err);
}

}  // namespace orlicz::cli
