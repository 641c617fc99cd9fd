#pragma once

#include <utility>
#include <vector>

namespace radschrod {

/// Highest supported stencil half-width (scheme order 2k = 12).
inline constexpr int kMaxHalfWidth = 6;

/// Coefficient tables of the symmetric (2k)-step finite-difference family,
/// stored at unit node spacing.  The 1/h and 1/h^2 scalings are applied at
/// assembly time, never stored, so one table serves every mesh.
///
/// Row layout (all node offsets are relative to the leftmost stencil point):
///   main_first / main_second : nodes -k..k, derivative at node 0
///   initial_first  row i-1   : nodes 0..2k,   first derivative at node i  (i = 1..k-1)
///   initial_second row i-1   : nodes 0..2k+1, second derivative at node i
///   final_first    row r     : nodes 0..2k,   first derivative at node k+1+r
///   final_second   row r     : nodes 0..2k+1, second derivative at node k+2+r
///   bdf                      : nodes 0..2k,   first derivative at node 2k
///
/// Final rows are the mirror images of the initial rows: reversed and
/// sign-flipped for first derivatives, reversed unchanged for second
/// derivatives.  Row r of a final table mirrors row k-2-r of the initial one.
struct StencilSet {
    int k = 0;
    std::vector<double> main_first;
    std::vector<double> main_second;
    std::vector<std::vector<double>> initial_first;
    std::vector<std::vector<double>> initial_second;
    std::vector<std::vector<double>> final_first;
    std::vector<std::vector<double>> final_second;
    std::vector<double> bdf;
};

/// Central (2k+1)-point formulas for the first and second derivative,
/// consistency order 2k.  The returned coefficients satisfy the order
/// conditions exactly (up to one rounding each); symmetry is asserted,
/// not imposed.  Throws std::invalid_argument for k outside [1, 6].
std::pair<std::vector<double>, std::vector<double>> derive_main(int k);

struct AdditionalTables {
    std::vector<std::vector<double>> initial_first;
    std::vector<std::vector<double>> initial_second;
    std::vector<std::vector<double>> final_first;
    std::vector<std::vector<double>> final_second;
};

/// One-sided formulas of order 2k for the k-1 nodes next to each interval
/// end.  Second-derivative rows use one extra point (2k+2 in total) to keep
/// the order.  For k = 1 all tables are empty.
AdditionalTables derive_additional(int k);

/// Coefficients of the (2k)-step backward differentiation formula: the
/// (2k+1)-point one-sided first derivative at the rightmost node.
std::vector<double> derive_bdf(int k);

/// All tables for one half-width, ready for assembly.
StencilSet make_stencil_set(int k);

}  // namespace radschrod
