#include "radschrod/assembly.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace radschrod {

namespace {

void place_row(Eigen::MatrixXd& mat, int row, int first_node, const std::vector<double>& w,
               double scale) {
    for (size_t j = 0; j < w.size(); ++j) {
        const int node = first_node + static_cast<int>(j);
        if (node == 0) continue;  // v(0) = 0: the t_0 column is dropped
        mat(row - 1, node - 1) = w[j] * scale;
    }
}

Eigen::MatrixXd eval_coeff(const CoeffFn& fn, double t, int node, int m, const char* name) {
    Eigen::MatrixXd c;
    try {
        c = fn(t);
    } catch (const std::exception& e) {
        throw std::runtime_error(std::string("coefficient ") + name + " failed at node i=" +
                                 std::to_string(node) + " (t=" + std::to_string(t) +
                                 "): " + e.what());
    }
    if (c.rows() != m || c.cols() != m)
        throw std::invalid_argument(std::string("coefficient ") + name + " returned a " +
                                    std::to_string(c.rows()) + "x" + std::to_string(c.cols()) +
                                    " matrix, expected " + std::to_string(m) + "x" +
                                    std::to_string(m));
    if (!c.allFinite())
        throw std::runtime_error(std::string("coefficient ") + name +
                                 " is not finite at node i=" + std::to_string(node) +
                                 " (t=" + std::to_string(t) + ")");
    return c;
}

}  // namespace

std::pair<Eigen::MatrixXd, Eigen::MatrixXd> build_diff_matrices(const StencilSet& s, int n_interior,
                                                                double h) {
    const int k = s.k;
    const int n = n_interior;
    // widest requirement: the one-sided second-derivative rows span nodes
    // 0..2k+1 (left) and N-2k..N+1 (right)
    if (n < 2 * k)
        throw std::invalid_argument("build_diff_matrices: need N >= 2k = " +
                                    std::to_string(2 * k) + ", got N = " + std::to_string(n));
    if (!(h > 0.0)) throw std::invalid_argument("build_diff_matrices: mesh width must be > 0");

    Eigen::MatrixXd gamma = Eigen::MatrixXd::Zero(n, n + 1);
    Eigen::MatrixXd b = Eigen::MatrixXd::Zero(n, n + 1);
    const double ih = 1.0 / h;
    const double ih2 = 1.0 / (h * h);

    for (int i = 1; i <= n; ++i) {
        if (i <= k - 1) {
            place_row(gamma, i, 0, s.initial_second[i - 1], ih2);
            place_row(b, i, 0, s.initial_first[i - 1], ih);
        } else if (i <= n + 1 - k) {
            place_row(gamma, i, i - k, s.main_second, ih2);
            place_row(b, i, i - k, s.main_first, ih);
        } else {
            const int r = i - (n + 2 - k);
            place_row(gamma, i, n - 2 * k, s.final_second[r], ih2);
            place_row(b, i, n + 1 - 2 * k, s.final_first[r], ih);
        }
    }
    return {std::move(gamma), std::move(b)};
}

DiscreteEvp assemble(const TransformedProblem& tp, int n_interior, const StencilSet& s) {
    const int k = s.k;
    const int m = tp.m;
    const int n = n_interior;
    if (m != (tp.right_bc == RightBc::CoupledTds ? 2 : 1))
        throw std::invalid_argument("assemble: system size does not match the boundary treatment");
    const double h = 1.0 / (n + 1);
    auto [gamma, bmat] = build_diff_matrices(s, n, h);

    std::vector<Eigen::MatrixXd> a2(n), a1(n), a0(n);
    for (int i = 1; i <= n; ++i) {
        const double t = i * h;
        a2[i - 1] = eval_coeff(tp.a2, t, i, m, "A2");
        a1[i - 1] = eval_coeff(tp.a1, t, i, m, "A1");
        a0[i - 1] = eval_coeff(tp.a0, t, i, m, "A0");
    }

    // interior block: -D2 (Gamma x I_m) + D1 (B x I_m) + [D0 | 0]
    Eigen::MatrixXd interior = Eigen::MatrixXd::Zero(m * n, m * (n + 1));
    for (int i = 1; i <= n; ++i) {
        for (int c = 1; c <= n + 1; ++c) {
            const double g = gamma(i - 1, c - 1);
            const double bb = bmat(i - 1, c - 1);
            if (g == 0.0 && bb == 0.0) continue;
            interior.block((i - 1) * m, (c - 1) * m, m, m) += -a2[i - 1] * g + a1[i - 1] * bb;
        }
        interior.block((i - 1) * m, (i - 1) * m, m, m) += a0[i - 1];
    }

    DiscreteEvp evp;
    evp.n = n;
    evp.h = h;
    evp.m = m;
    evp.k = k;
    evp.meta = tp.meta;
    for (int i = 1; i <= n; ++i)
        for (int c = 0; c < m; ++c) evp.node_of_row.emplace_back(i, c);

    if (tp.right_bc == RightBc::Dirichlet) {
        evp.a = interior.leftCols(m * n);
        return evp;
    }

    // coupled closure: value matching at t_{N+1} plus the summed one-sided
    // derivative row, both homogeneous and therefore left unscaled by 1/h
    const int size = m * (n + 1);
    evp.a = Eigen::MatrixXd::Zero(size, size);
    evp.a.topRows(m * n) = interior;
    evp.a(2 * n, 2 * n) = 1.0;
    evp.a(2 * n, 2 * n + 1) = -1.0;
    for (int j = 0; j <= 2 * k; ++j) {
        const int node = n + 1 - 2 * k + j;
        evp.a(2 * n + 1, (node - 1) * 2) += s.bdf[j];
        evp.a(2 * n + 1, (node - 1) * 2 + 1) += s.bdf[j];
    }
    evp.b = Eigen::MatrixXd::Zero(size, size);
    evp.b->topLeftCorner(m * n, m * n).setIdentity();
    evp.node_of_row.emplace_back(n + 1, 0);
    evp.node_of_row.emplace_back(n + 1, 1);
    return evp;
}

}  // namespace radschrod
