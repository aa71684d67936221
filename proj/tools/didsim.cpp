// didsim: PBFT consensus latency/throughput bounds and Monte-Carlo simulation
// for hybrid satellite-ground chain deployments.
//
// Verbs: bounds, simulate, sweep, figures. Data goes to files, logs to stderr.
// Exit codes: 0 success, 2 configuration error, 3 numeric error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "didsim/commands.hpp"
#include "didsim/errors.hpp"

namespace {

struct CommonOpts {
    std::string scenario_path;
    int mode = 0;
    std::optional<std::uint64_t> seed;
    std::optional<int> trials;
    std::optional<int> workers;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_mode) {
    cmd->add_option("--scenario", opts.scenario_path, "scenario JSON file (defaults built in)");
    if (with_mode)
        cmd->add_option("--mode", opts.mode, "deployment mode (1|2|3)")->required();
    cmd->add_option("--seed", opts.seed, "master seed override");
    cmd->add_option("--trials", opts.trials, "Monte-Carlo trials override");
    cmd->add_option("--workers", opts.workers, "worker threads (0 = hardware)");
}

didsim::Scenario load_scenario(const CommonOpts& opts) {
    didsim::Scenario s = opts.scenario_path.empty() ? didsim::Scenario::defaults()
                                                    : didsim::Scenario::load(opts.scenario_path);
    // Seed precedence: --seed flag, then DIDSIM_SEED, then the scenario file.
    if (const char* env = std::getenv("DIDSIM_SEED"); env && !opts.seed) {
        try {
            s.master_seed = std::stoull(env);
        } catch (const std::exception&) {
            throw didsim::config_error("DIDSIM_SEED is not a valid unsigned integer");
        }
    }
    if (opts.seed) s.master_seed = *opts.seed;
    if (opts.trials) s.trials = *opts.trials;
    if (opts.workers) s.workers = *opts.workers;
    return s;
}

std::vector<double> parse_values(const std::string& csv) {
    std::vector<double> values;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            double v = std::stod(item, &pos);
            if (pos != item.size()) throw std::invalid_argument(item);
            values.push_back(v);
        } catch (const std::exception&) {
            throw didsim::config_error("--values: \"" + item + "\" is not a number");
        }
    }
    if (values.empty()) throw didsim::config_error("--values: empty list");
    return values;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hybrid satellite-ground PBFT latency simulator"};
    app.require_subcommand(1);

    CommonOpts bounds_opts, sim_opts, sweep_opts, fig_opts;
    std::string out_path, svg_path, axis, values_csv, out_dir;

    CLI::App* bounds = app.add_subcommand("bounds", "analytic latency/throughput bounds");
    add_common(bounds, bounds_opts, true);
    bounds->add_option("--out", out_path, "output CSV")->required();

    CLI::App* simulate = app.add_subcommand("simulate", "Monte-Carlo experiment, one row");
    add_common(simulate, sim_opts, true);
    simulate->add_option("--out", out_path, "output CSV")->required();

    CLI::App* sweep = app.add_subcommand("sweep", "sweep power or node count");
    add_common(sweep, sweep_opts, true);
    sweep->add_option("--axis", axis, "tx_power_dbm | n_nodes")->required();
    sweep->add_option("--values", values_csv, "comma-separated, strictly increasing")->required();
    sweep->add_option("--out", out_path, "output CSV")->required();
    sweep->add_option("--svg", svg_path, "optional SVG plot");

    CLI::App* figures = app.add_subcommand("figures", "emit the standard figure data set");
    add_common(figures, fig_opts, false);
    figures->add_option("--out", out_dir, "output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (bounds->parsed()) {
            cmd_bounds(load_scenario(bounds_opts), bounds_opts.mode, out_path);
        } else if (simulate->parsed()) {
            cmd_simulate(load_scenario(sim_opts), sim_opts.mode, out_path);
        } else if (sweep->parsed()) {
            std::optional<std::string> svg;
            if (!svg_path.empty()) svg = svg_path;
            cmd_sweep(load_scenario(sweep_opts), sweep_opts.mode, axis, parse_values(values_csv),
                      out_path, svg);
        } else if (figures->parsed()) {
            cmd_figures(load_scenario(fig_opts), out_dir);
        }
    } catch (const didsim::config_error& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const didsim::numeric_error& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return 3;
    } catch (const std::domain_error& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
