#include "radschrod/transform.hpp"

#include <cmath>
#include <stdexcept>

namespace radschrod {

namespace {

Eigen::MatrixXd scalar(double v) {
    Eigen::MatrixXd m(1, 1);
    m(0, 0) = v;
    return m;
}

void check_potential(const PotentialSpec& p, const char* op) {
    if (p.kind == PotentialKind::Custom) {
        if (!p.custom_eval || !p.custom_origin_limit || !std::isfinite(*p.custom_origin_limit))
            throw std::invalid_argument(std::string(op) +
                                        ": custom potential needs an evaluator and a finite "
                                        "origin limit of r*V(r)");
    }
}

void check_ell(int ell, const char* op) {
    if (ell < 0) throw std::invalid_argument(std::string(op) + ": ell must be >= 0");
}

}  // namespace

TransformedProblem build_tds(const PotentialSpec& p, int ell) {
    check_potential(p, "build_tds");
    check_ell(ell, "build_tds");
    const double cent = static_cast<double>(ell) * (ell + 1);

    TransformedProblem tp;
    tp.m = 2;
    tp.a2 = [](double t) {
        Eigen::MatrixXd m = Eigen::MatrixXd::Zero(2, 2);
        m(0, 0) = 1.0;
        m(1, 1) = t * t * t * t;
        return m;
    };
    tp.a1 = [](double t) {
        Eigen::MatrixXd m = Eigen::MatrixXd::Zero(2, 2);
        m(1, 1) = -2.0 * t * t * t;
        return m;
    };
    tp.a0 = [p, cent](double t) {
        Eigen::MatrixXd m = Eigen::MatrixXd::Zero(2, 2);
        m(0, 0) = cent / (t * t) + evaluate(p, t);
        m(1, 1) = cent * t * t + evaluate(p, 1.0 / t);
        return m;
    };
    tp.w = [](double) { return Eigen::MatrixXd::Identity(2, 2); };
    tp.right_bc = RightBc::CoupledTds;
    tp.map_t_of_r = [](double r) { return 1.0 / r; };
    tp.map_r_of_t = [](double t) { return 1.0 / t; };
    tp.meta = {TransformKind::Tds, 0.0, 0.0, p, ell};
    return tp;
}

TransformedProblem build_tcii(const PotentialSpec& p, int ell, double xi) {
    check_potential(p, "build_tcii");
    check_ell(ell, "build_tcii");
    if (!(xi > 0.0)) throw std::invalid_argument("build_tcii: xi must be > 0");
    const double cent = static_cast<double>(ell) * (ell + 1);
    const double xi2 = xi * xi;

    TransformedProblem tp;
    tp.m = 1;
    tp.a2 = [xi2](double t) {
        const double u = 1.0 - t;
        return scalar(u * u * u * u / xi2);
    };
    tp.a1 = [xi2](double t) {
        const double u = 1.0 - t;
        return scalar(2.0 * u * u * u / xi2);
    };
    tp.a0 = [p, cent, xi, xi2](double t) {
        const double u = 1.0 - t;
        const double r = xi * t / u;
        double v = cent == 0.0 ? 0.0 : cent * u * u / (xi2 * t * t);
        return scalar(v + evaluate(p, r));
    };
    tp.w = [](double) { return Eigen::MatrixXd::Identity(1, 1); };
    tp.right_bc = RightBc::Dirichlet;
    tp.map_t_of_r = [xi](double r) { return r / (r + xi); };
    tp.map_r_of_t = [xi](double t) { return xi * t / (1.0 - t); };
    tp.meta = {TransformKind::Tcii, xi, 0.0, p, ell};
    return tp;
}

TransformedProblem build_atcii(const PotentialSpec& p, int ell) {
    check_potential(p, "build_atcii");
    check_ell(ell, "build_atcii");
    const double cent = static_cast<double>(ell) * (ell + 1);

    // t(r) = 1 - (1+r)^{-1/2}:  dt/dr = (1-t)^3/2,  d2t/dr2 = -3(1-t)^5/4
    TransformedProblem tp;
    tp.m = 1;
    tp.a2 = [](double t) {
        const double u = 1.0 - t;
        return scalar(u * u * u * u * u * u / 4.0);
    };
    tp.a1 = [](double t) {
        const double u = 1.0 - t;
        return scalar(0.75 * u * u * u * u * u);
    };
    tp.a0 = [p, cent](double t) {
        const double u = 1.0 - t;
        const double r = 1.0 / (u * u) - 1.0;
        double v = cent == 0.0 ? 0.0 : cent / (r * r);
        return scalar(v + evaluate(p, r));
    };
    tp.w = [](double) { return Eigen::MatrixXd::Identity(1, 1); };
    tp.right_bc = RightBc::Dirichlet;
    tp.map_t_of_r = [](double r) { return 1.0 - 1.0 / std::sqrt(1.0 + r); };
    tp.map_r_of_t = [](double t) {
        const double u = 1.0 - t;
        return 1.0 / (u * u) - 1.0;
    };
    tp.meta = {TransformKind::Atcii, 0.0, 0.5, p, ell};
    return tp;
}

double xi_heuristic(int ell, int order) {
    check_ell(ell, "xi_heuristic");
    if (order < 2 || order > 12 || order % 2 != 0)
        throw std::invalid_argument("xi_heuristic: scheme order must be even and in [2, 12]");
    return std::pow(1.35, order) * (ell + 1);
}

std::string to_string(TransformKind kind) {
    switch (kind) {
        case TransformKind::Tds: return "tds";
        case TransformKind::Tcii: return "tcii";
        case TransformKind::Atcii: return "atcii";
    }
    return "?";
}

TransformKind transform_kind_from_string(const std::string& name) {
    if (name == "tds") return TransformKind::Tds;
    if (name == "tcii") return TransformKind::Tcii;
    if (name == "atcii") return TransformKind::Atcii;
    throw std::invalid_argument("unknown transform \"" + name +
                                "\" (expected tds, tcii or atcii)");
}

}  // namespace radschrod
