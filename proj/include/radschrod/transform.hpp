#pragma once

#include <Eigen/Core>
#include <functional>
#include <string>

#include "radschrod/potential.hpp"

namespace radschrod {

enum class TransformKind { Tds, Tcii, Atcii };

/// Right-boundary treatment of the transformed problem: a plain Dirichlet
/// row removal, or the coupled pair of conditions the interval-splitting
/// transform needs (value matching plus a one-sided derivative constraint).
enum class RightBc { Dirichlet, CoupledTds };

using CoeffFn = std::function<Eigen::MatrixXd(double)>;
using MapFn = std::function<double(double)>;

struct TransformMeta {
    TransformKind kind = TransformKind::Tcii;
    double xi = 0.0;    // interval-compression scale (TCII)
    double beta = 0.0;  // compression exponent (ATCII, fixed 1/2)
    PotentialSpec potential;
    int ell = 0;
};

/// Eigenproblem -A2(t) v'' + A1(t) v' + A0(t) v = lambda W(t) v on (0,1)
/// with v(0) = 0.  W is the identity for every transform built here.  The
/// coefficient evaluators may blow up at the endpoints and are only ever
/// called at interior mesh points.
struct TransformedProblem {
    int m = 1;
    CoeffFn a2, a1, a0, w;
    RightBc right_bc = RightBc::Dirichlet;
    MapFn map_t_of_r, map_r_of_t;
    TransformMeta meta;
};

/// Interval splitting at r = 1 with t = 1/r on [1, inf): a 2x2 system whose
/// second row is premultiplied by t^4.  Couples the two pieces through the
/// right boundary.
TransformedProblem build_tds(const PotentialSpec& p, int ell);

/// Compression t = r/(r+xi).  Scalar problem, Dirichlet at both ends.
TransformedProblem build_tcii(const PotentialSpec& p, int ell, double xi);

/// Compression t = 1 - (1+r)^{-1/2}.  Scalar problem, Dirichlet at both ends.
TransformedProblem build_atcii(const PotentialSpec& p, int ell);

/// Heuristic compression scale (1.35)^p * (ell+1) for scheme order p.
double xi_heuristic(int ell, int order);

std::string to_string(TransformKind kind);
TransformKind transform_kind_from_string(const std::string& name);

}  // namespace radschrod
