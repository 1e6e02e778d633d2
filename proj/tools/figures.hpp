#ifndef CAVROTOR_TOOLS_FIGURES_HPP
#define CAVROTOR_TOOLS_FIGURES_HPP

#include <string>
#include <vector>

#include "cavrotor/hilbert.hpp"
#include "cavrotor/model.hpp"

namespace cavrotor::cli {

struct CliContext {
    ModelParams params;
    TruncationSpec trunc;
    std::string out_dir = ".";
    int workers = 1;
    double tol = 1e-9;
};

struct GroundPoint {
    double E0 = 0.0;
    double L_opt = 0.0;
    double dL_opt = 0.0;
    double L_mech = 0.0;
    double n_r = 0.0;
    double n_l = 0.0;
    int sector = 0;
    bool converged = false;
};

/// Ground state at the requested sector (or the best sector from a scan),
/// with the standard observables attached.
GroundPoint solve_ground_point(const ModelParams& params, const TruncationSpec& trunc, double tol);

const std::vector<std::string>& figure_names();

/// Emit <name>.csv and <name>.json under ctx.out_dir. Throws on failure;
/// per-point solver failures are flagged in the CSV instead of aborting.
void run_figure(const std::string& name, const CliContext& ctx);

} // namespace cavrotor::cli

#endif
