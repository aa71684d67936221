#include "didsim/commands.hpp"

#include <filesystem>

#include "didsim/csv.hpp"
#include "didsim/errors.hpp"
#include "didsim/svg.hpp"

namespace didsim {

namespace {

const std::vector<std::string> kSweepHeader = {
    "mode",          "n",      "trials",   "seed",           "axis",          "value",
    "mean_latency_s", "ci95_s", "mean_tps", "bound_lower_s", "bound_upper_s"};

SweepAxis parse_axis(const std::string& axis) {
    if (axis == "tx_power_dbm") return SweepAxis::TxPowerDbm;
    if (axis == "n_nodes") return SweepAxis::NNodes;
    throw config_error("axis must be tx_power_dbm or n_nodes");
}

PsBounds mode_ps_bounds(const ExperimentConfig& config) {
    switch (config.mode) {
        case 1:
        case 2: {
            if (!config.ground) throw config_error("missing ground link parameters");
            return ps_ground_bounds(*config.ground);
        }
        case 3: {
            if (!config.intersat) throw config_error("missing inter-satellite link parameters");
            return ps_intersat_bounds(*config.intersat);
        }
        default:
            throw config_error("mode must be 1, 2 or 3");
    }
}

void write_sweep_rows(CsvWriter& csv, const ExperimentConfig& config, const SweepResult& r) {
    for (std::size_t i = 0; i < r.axis_values.size(); ++i) {
        int n = config.n_nodes;
        if (r.axis_name == "n_nodes") n = static_cast<int>(r.axis_values[i]);
        csv.field(config.mode)
            .field(n)
            .field(config.trials)
            .field(config.master_seed)
            .field(r.axis_name)
            .field(r.axis_values[i])
            .field(r.mean_latency_s[i])
            .field(r.ci95_halfwidth_s[i])
            .field(r.mean_tps[i])
            .field(r.bound_lower_s[i])
            .field(r.bound_upper_s[i]);
        csv.end_row();
    }
}

SvgSeries sweep_series(const SweepResult& r, const std::string& label, bool with_ci) {
    SvgSeries s;
    s.label = label;
    s.x = r.axis_values;
    s.y = r.mean_latency_s;
    if (with_ci) s.yerr = r.ci95_halfwidth_s;
    return s;
}

SvgSeries bound_series(const SweepResult& r, bool upper, const std::string& label) {
    SvgSeries s;
    s.label = label;
    s.x = r.axis_values;
    s.y = upper ? r.bound_upper_s : r.bound_lower_s;
    s.dashed = true;
    return s;
}

}  // namespace

void cmd_bounds(const Scenario& scenario, int mode, const std::string& out_path) {
    ExperimentConfig config = scenario.to_config();
    config.mode = mode;
    // Bounds need valid link params but no trial budget; skip the trial checks.
    PsBounds ps = mode_ps_bounds(config);
    LatencyBounds lb = latency_bounds_mode(mode, config.ground, config.satground, config.intersat,
                                           config.profile_for_mode());

    CsvWriter csv(out_path);
    csv.write_header({"mode", "ps_lower", "ps_upper", "ps_raw_lower", "ps_raw_upper", "t_lower_s",
                      "t_upper_s", "tps_lower", "tps_upper"});
    csv.field(mode)
        .field(ps.lower.value)
        .field(ps.upper.value)
        .field(ps.raw_lower)
        .field(ps.raw_upper)
        .field(lb.t_lower_s)
        .field(lb.t_upper_s)
        .field(lb.tps_lower)
        .field(lb.tps_upper);
    csv.end_row();
}

void cmd_simulate(const Scenario& scenario, int mode, const std::string& out_path) {
    ExperimentConfig config = scenario.to_config();
    config.mode = mode;
    config.validate();

    ExperimentResult r = run_experiment(config);
    LatencyBounds lb = latency_bounds_mode(mode, config.ground, config.satground, config.intersat,
                                           config.profile_for_mode());

    CsvWriter csv(out_path);
    csv.write_header({"mode", "n", "trials", "mean_latency_s", "ci95_s", "mean_tps",
                      "bound_lower_s", "bound_upper_s", "seed"});
    csv.field(mode)
        .field(config.n_nodes)
        .field(config.trials)
        .field(r.mean_latency_s)
        .field(r.ci95_halfwidth_s)
        .field(r.mean_tps)
        .field(lb.t_lower_s)
        .field(lb.t_upper_s)
        .field(config.master_seed);
    csv.end_row();
}

void cmd_sweep(const Scenario& scenario, int mode, const std::string& axis,
               const std::vector<double>& values, const std::string& out_path,
               const std::optional<std::string>& svg_path) {
    if (values.empty()) throw config_error("sweep: values must be nonempty");
    for (std::size_t i = 1; i < values.size(); ++i)
        if (!(values[i] > values[i - 1]))
            throw config_error("sweep: values must be strictly increasing");

    ExperimentConfig config = scenario.to_config();
    config.mode = mode;
    config.validate();

    SweepResult r = sweep(config, parse_axis(axis), values);

    CsvWriter csv(out_path);
    csv.write_header(kSweepHeader);
    write_sweep_rows(csv, config, r);

    if (svg_path) {
        SvgPlotSpec plot;
        plot.title = "mode " + std::to_string(mode) + " latency vs " + axis;
        plot.x_label = axis;
        plot.y_label = "latency (s)";
        plot.series.push_back(sweep_series(r, "simulated mean", true));
        plot.series.push_back(bound_series(r, false, "bound lower"));
        plot.series.push_back(bound_series(r, true, "bound upper"));
        write_svg_plot(*svg_path, plot);
    }
}

void cmd_figures(const Scenario& scenario, const std::string& out_dir) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw config_error("cannot create output directory \"" + out_dir + "\"");
    auto path = [&](const std::string& name) {
        return (std::filesystem::path(out_dir) / name).string();
    };

    const std::vector<double> powers = {30, 35, 40, 45, 50};
    const std::vector<double> node_counts = {4, 6, 8, 10, 12};

    // fig3a: latency vs power, all modes, n = 5.
    {
        CsvWriter csv(path("fig3a.csv"));
        csv.write_header(kSweepHeader);
        SvgPlotSpec plot;
        plot.title = "latency vs transmission power (n = 5)";
        plot.x_label = "tx power (dBm)";
        plot.y_label = "latency (s)";
        for (int mode = 1; mode <= 3; ++mode) {
            ExperimentConfig config = scenario.to_config();
            config.mode = mode;
            config.n_nodes = 5;
            config.validate();
            SweepResult r = sweep(config, SweepAxis::TxPowerDbm, powers);
            write_sweep_rows(csv, config, r);
            plot.series.push_back(sweep_series(r, "mode " + std::to_string(mode), true));
        }
        write_svg_plot(path("fig3a.svg"), plot);
    }

    // fig3b: latency vs node count, all modes, 40 dBm.
    {
        CsvWriter csv(path("fig3b.csv"));
        csv.write_header(kSweepHeader);
        SvgPlotSpec plot;
        plot.title = "latency vs chain nodes (40 dBm)";
        plot.x_label = "chain nodes";
        plot.y_label = "latency (s)";
        for (int mode = 1; mode <= 3; ++mode) {
            ExperimentConfig config = scenario.to_config();
            config.mode = mode;
            // the node sweep is defined at the 40 dBm operating point
            double watt = dbm_to_watt(40.0);
            if (config.ground) config.ground->tx_power_w = watt;
            if (config.satground) config.satground->tx_power_w = watt;
            if (config.intersat) config.intersat->tx_power_w = watt;
            config.validate();
            SweepResult r = sweep(config, SweepAxis::NNodes, node_counts);
            write_sweep_rows(csv, config, r);
            plot.series.push_back(sweep_series(r, "mode " + std::to_string(mode), true));
        }
        write_svg_plot(path("fig3b.svg"), plot);
    }

    // fig4: per-mode power sweeps with bound curves, n in {6, 9}.
    for (int mode = 1; mode <= 3; ++mode) {
        std::string stem = "fig4_mode" + std::to_string(mode);
        CsvWriter csv(path(stem + ".csv"));
        csv.write_header(kSweepHeader);
        SvgPlotSpec plot;
        plot.title = "mode " + std::to_string(mode) + " latency vs power, bounds";
        plot.x_label = "tx power (dBm)";
        plot.y_label = "latency (s)";
        bool bounds_plotted = false;
        for (int n : {6, 9}) {
            ExperimentConfig config = scenario.to_config();
            config.mode = mode;
            config.n_nodes = n;
            config.validate();
            SweepResult r = sweep(config, SweepAxis::TxPowerDbm, powers);
            write_sweep_rows(csv, config, r);
            plot.series.push_back(sweep_series(r, "simulated n=" + std::to_string(n), true));
            if (!bounds_plotted) {
                // The analytic endpoints do not depend on n; one pair of curves.
                plot.series.push_back(bound_series(r, false, "bound lower"));
                plot.series.push_back(bound_series(r, true, "bound upper"));
                bounds_plotted = true;
            }
        }
        write_svg_plot(path(stem + ".svg"), plot);
    }
}

}  // namespace didsim
