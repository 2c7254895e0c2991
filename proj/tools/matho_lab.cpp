// matho-lab <command> --scenario FILE [--tol X] [--trunc-order M] [--seed N] [--format json|text]

#include <iostream>

#include <CLI11.hpp>

#include "matho/runner.hpp"

namespace {

struct Options {
    std::string scenario;
    std::optional<double> tol;
    std::optional<int> trunc_order;
    std::optional<std::uint64_t> seed;
    std::string format = "json";
    bool no_wall_time = false;
};

int report_error(int code, const std::string& format, const std::string& message, const std::string& field) {
    if (format == "json") {
        std::cout << matho::error_json(code, message, field).dump(2) << "\n";
    }
    std::cerr << "matho-lab: " << (code == matho::kExitInvalid ? "invalid input" : "internal error") << ": "
              << (field.empty() ? message : field + ": " + message) << "\n";
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Model spaces and truncated Toeplitz/Hankel operators"};
    app.require_subcommand(1, 1);
    Options opt;
    const std::vector<std::pair<std::string, std::string>> commands = {
        {"space", "describe K_theta: basis, compressed shift, defects"},
        {"build", "matrix of a MATTO or MATHO from a symbol"},
        {"check", "displacement and shift-invariance membership tests"},
        {"recover", "recover a symbol and report the rebuild residual"},
        {"kernel", "decide whether a symbol yields the zero operator"},
        {"verify", "transform identities (a named entry or all)"},
    };
    for (const auto& [name, help] : commands) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("--scenario", opt.scenario, "scenario JSON file")->required();
        sub->add_option("--tol", opt.tol, "acceptance tolerance, overrides the scenario");
        sub->add_option("--trunc-order", opt.trunc_order, "truncation order M, overrides the scenario");
        sub->add_option("--seed", opt.seed, "random seed, overrides the scenario");
        sub->add_option("--format", opt.format, "output format")->check(CLI::IsMember({"json", "text"}));
        sub->add_flag("--no-wall-time", opt.no_wall_time, "omit wall_time_s from JSON output");
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : matho::kExitInvalid;
    }
    const std::string command = app.get_subcommands().front()->get_name();

    try {
        matho::Overrides ov;
        ov.command = matho::parse_command(command);
        ov.tolerance = opt.tol;
        ov.trunc_order = opt.trunc_order;
        ov.seed = opt.seed;
        const matho::Scenario s = matho::load_scenario(opt.scenario, ov);
        matho::Report r = matho::run_command(s);
        r.scenario = opt.scenario;
        if (opt.format == "json") {
            std::cout << matho::to_json(r, !opt.no_wall_time).dump(2) << "\n";
        } else {
            std::cout << matho::to_text(r);
        }
        return matho::exit_code(r);
    } catch (const matho::ValidationError& e) {
        return report_error(matho::kExitInvalid, opt.format, e.message(), e.field());
    } catch (const std::exception& e) {
        return report_error(matho::kExitInternal, opt.format, e.what(), {});
    }
}
