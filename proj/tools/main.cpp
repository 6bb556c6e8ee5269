#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "guposc/cli.hpp"

namespace {

using guposc::cli::Command;
using guposc::cli::Format;
using guposc::cli::RunConfig;

struct RawArgs {
    std::string beta;
    std::string n;
    std::string grid;
    std::string format = "csv";
};

void add_common(CLI::App* sub, RunConfig& config, RawArgs& raw, bool require_sweep) {
    sub->add_option("--beta", raw.beta, "deformation parameter(s), comma-separated; 0 = ordinary QM")
        ->required(require_sweep);
    sub->add_option("--n", raw.n, "quantum number(s): comma list or a..b range")
        ->required(require_sweep);
    sub->add_option("--m", config.m, "mass")->capture_default_str();
    sub->add_option("--omega", config.omega, "angular frequency")->capture_default_str();
    sub->add_option("--hbar", config.hbar, "reduced Planck constant")->capture_default_str();
    sub->add_option("--tol", config.tol, "target tolerance")->capture_default_str();
    sub->add_option("--format", raw.format, "csv or json")->capture_default_str();
    sub->add_option("--output", config.output, "output path (default stdout)");
    sub->add_option("--digits", config.digits, "significant digits in output")
        ->capture_default_str();
}

void add_grid(CLI::App* sub, RawArgs& raw) {
    sub->add_option("--grid", raw.grid, "x grid as min,max,count (default -8,8,257)");
}

int finish_config(RunConfig& config, const RawArgs& raw, std::ostream& diag) {
    try {
        if (!raw.beta.empty()) config.betas = guposc::cli::parse_real_list(raw.beta);
        if (!raw.n.empty()) config.ns = guposc::cli::parse_int_list(raw.n);
        if (raw.format == "csv") {
            config.format = Format::csv;
        } else if (raw.format == "json") {
            config.format = Format::json;
        } else {
            throw std::invalid_argument("unknown format '" + raw.format + "'");
        }
        if (!raw.grid.empty()) {
            const auto parts = guposc::cli::parse_real_list(raw.grid);
            if (parts.size() != 3) throw std::invalid_argument("grid needs min,max,count");
            config.grid = guposc::GridSpec(parts[0], parts[1], static_cast<int>(parts[2]));
        }
    } catch (const std::exception& e) {
        diag << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Minimal-length (GUP) harmonic oscillator: spectra, wave functions, "
                 "Shannon entropies, and the BBM entropic uncertainty check"};
    app.require_subcommand(1);

    struct Sub {
        Command command;
        CLI::App* app;
        RunConfig config;
        RawArgs raw;
    };
    std::vector<Sub> subs;
    subs.push_back({Command::energies,
                    app.add_subcommand("energies", "energy spectrum E_n"), {}, {}});
    subs.push_back({Command::wavefunction,
                    app.add_subcommand("wavefunction", "position-space wave function samples"),
                    {},
                    {}});
    subs.push_back({Command::densities,
                    app.add_subcommand("densities", "entropy densities in x and p"), {}, {}});
    subs.push_back({Command::entropy,
                    app.add_subcommand("entropy", "entropy report with BBM and GUP verdicts"),
                    {},
                    {}});
    subs.push_back({Command::table1,
                    app.add_subcommand("table1", "reference entropy table (beta sweep, n = 0,1)"),
                    {},
                    {}});
    for (Sub& sub : subs) {
        sub.config.command = sub.command;
        const bool required = sub.command != Command::table1;
        add_common(sub.app, sub.config, sub.raw, required);
        if (sub.command == Command::wavefunction || sub.command == Command::densities)
            add_grid(sub.app, sub.raw);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ||
            e.get_name() == "CallForVersion")
            return app.exit(e);
        app.exit(e);
        return 2;
    }

    for (Sub& sub : subs) {
        if (!sub.app->parsed()) continue;
        if (int rc = finish_config(sub.config, sub.raw, std::cerr); rc != 0) return rc;
        return guposc::cli::run(sub.config, std::cerr);
    }
    return 2;
}
