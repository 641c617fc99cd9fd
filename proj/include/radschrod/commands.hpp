#pragma once

#include <iosfwd>
#include <vector>

#include "radschrod/run_config.hpp"
#include "radschrod/spectrum.hpp"

namespace radschrod {

struct PipelineResult {
    SpectrumResult spectrum;
    double xi_resolved = 0.0;  // 0 when the transform takes no scale
};

/// potential -> transform -> stencils -> assembly -> solve -> filter,
/// all from one config, at the given mesh size.
PipelineResult run_pipeline(const RunConfig& cfg, int npoints);

/// |computed - reference| / |reference|, floored at 1e-16 to keep log plots
/// finite when the two agree to rounding.
double floored_rel_error(double computed, double reference);

/// Least-squares slope of log(err) against log(h) over the last three
/// samples: the empirically observed convergence order.
double observed_order(const std::vector<double>& h, const std::vector<double>& err);

/// Eigenvalue report for a single mesh size (columns nu, n, lambda,
/// lambda/2, reference, relative error).  Returns a process exit code.
int cmd_solve(const RunConfig& cfg, std::ostream& out, std::ostream& log);

/// Error-vs-N sweep for one target eigenvalue, with the fitted order.
int cmd_converge(const RunConfig& cfg, std::ostream& out, std::ostream& log);

/// The 18-row screened-Coulomb benchmark grid (lambda/2 at two mesh sizes,
/// compression transform, order 8, heuristic xi).  Mesh sizes are
/// parameters so tests can run the grid cheaply.
int cmd_table1(const RunConfig& cfg, std::ostream& out, std::ostream& log, int n_small = 200,
               int n_large = 1500);

/// One stencil coefficient table as CSV.
int cmd_dump_stencil(int order, const std::string& table, std::ostream& out);

/// Assembled matrix (and pencil mass matrix) in the plain-text exchange
/// format, either to files <prefix>_A.txt / <prefix>_B.txt or to `out`.
int cmd_dump_matrix(const RunConfig& cfg, const std::string& out_prefix, std::ostream& out,
                    std::ostream& log);

}  // namespace radschrod
