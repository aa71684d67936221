#ifndef DIDSIM_COMMANDS_HPP
#define DIDSIM_COMMANDS_HPP

#include <optional>
#include <string>
#include <vector>

#include "didsim/scenario.hpp"

namespace didsim {

// Command cores shared by the CLI binary and the test suites. Each writes its
// CSV (and optional SVG) and throws config_error / numeric_error on failure;
// the binary maps those to exit codes 2 and 3.

// Columns: mode,ps_lower,ps_upper,ps_raw_lower,ps_raw_upper,
//          t_lower_s,t_upper_s,tps_lower,tps_upper
void cmd_bounds(const Scenario& scenario, int mode, const std::string& out_path);

// Columns: mode,n,trials,mean_latency_s,ci95_s,mean_tps,
//          bound_lower_s,bound_upper_s,seed
void cmd_simulate(const Scenario& scenario, int mode, const std::string& out_path);

// Columns: mode,n,trials,seed,axis,value,mean_latency_s,ci95_s,mean_tps,
//          bound_lower_s,bound_upper_s
void cmd_sweep(const Scenario& scenario, int mode, const std::string& axis,
               const std::vector<double>& values, const std::string& out_path,
               const std::optional<std::string>& svg_path);

// Emits fig3a.csv (power sweep, all modes, n=5), fig3b.csv (node sweep, all
// modes, 40 dBm), fig4_mode{1,2,3}.csv (power sweeps with bounds, n in {6,9})
// and matching SVGs into out_dir.
void cmd_figures(const Scenario& scenario, const std::string& out_dir);

}  // namespace didsim

#endif
