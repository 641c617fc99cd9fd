#pragma once

#include <Eigen/Core>
#include <optional>
#include <utility>
#include <vector>

#include "radschrod/stencil.hpp"
#include "radschrod/transform.hpp"

namespace radschrod {

/// Dense algebraic eigenproblem produced from a transformed problem on the
/// uniform mesh t_i = i h, h = 1/(N+1).  Either the standard problem
/// a v = lambda v (b absent) or the pencil a v = lambda b v with the
/// singular b = diag(I, 0) coming from appended boundary rows.
struct DiscreteEvp {
    Eigen::MatrixXd a;
    std::optional<Eigen::MatrixXd> b;
    int n = 0;     // interior mesh point count
    double h = 0;  // mesh width 1/(N+1)
    int m = 1;     // system size per node
    int k = 1;     // stencil half-width
    std::vector<std::pair<int, int>> node_of_row;  // (mesh node, component)
    TransformMeta meta;
};

/// Second- and first-derivative matrices (Gamma, B) of shape N x (N+1):
/// row i approximates the derivative at t_i from the values v_1..v_{N+1}
/// (the column for v_0 is dropped since v(0) = 0).  Main formulas fill rows
/// k..N+1-k, the initial/final additional formulas the rest.  Requires
/// N >= 2k so that every stencil fits.
std::pair<Eigen::MatrixXd, Eigen::MatrixXd> build_diff_matrices(const StencilSet& s, int n_interior,
                                                                double h);

/// Full discretization: interior rows -D2 (Gamma x I_m) + D1 (B x I_m) + D0,
/// closed by the transform's right boundary treatment.  Dirichlet drops the
/// node-(N+1) column group; the coupled treatment appends the value-matching
/// and summed one-sided derivative rows, yielding the singular pencil.
DiscreteEvp assemble(const TransformedProblem& tp, int n_interior, const StencilSet& s);

}  // namespace radschrod
