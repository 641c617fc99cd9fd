#pragma once

#include <limits>
#include <string>
#include <vector>

namespace radschrod {

/// One fully specified run.  Every field round-trips through the flat
/// key=value config format unchanged.
struct RunConfig {
    std::string potential = "hydrogen";
    double alpha = 0.01;  // screening parameter; ignored for hydrogen
    int ell = 0;
    std::string transform = "tcii";
    int order = 8;  // scheme order p = 2k, even, in [2, 12]
    std::vector<int> npoints = {200};
    std::string xi = "auto";  // "auto" or a decimal literal
    double imag_tol = 1e-8;
    std::string reference = "exact";  // exact | highn | none
    int nref = 1500;
    int order_ref = 8;
    std::string format = "csv";  // csv | json | table
    std::string out;             // output path; empty = stdout
    int nq = 0;                  // target radial quantum number n; 0 = ell+1
    double min_lambda = -std::numeric_limits<double>::infinity();
};

std::string render_config(const RunConfig& cfg);
RunConfig parse_config_text(const std::string& text);
RunConfig load_config_file(const std::string& path);

/// Throws std::invalid_argument with a one-line diagnostic.
void validate_config(const RunConfig& cfg);

int stencil_half_width(const RunConfig& cfg);

/// The xi actually used: the heuristic for "auto", the literal otherwise.
double resolve_xi(const RunConfig& cfg);

}  // namespace radschrod
