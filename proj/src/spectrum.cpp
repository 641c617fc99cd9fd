#include "radschrod/spectrum.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "radschrod/matrix_io.hpp"

namespace radschrod {

namespace {

[[noreturn]] void report_failure(const DiscreteEvp& evp, const char* routine, int info) {
    const std::string base = "radschrod_eig_failure";
    std::string files = base + "_A.txt";
    write_matrix_file(files, evp.a);
    if (evp.b) {
        write_matrix_file(base + "_B.txt", *evp.b);
        files += ", " + base + "_B.txt";
    }
    throw std::runtime_error(std::string(routine) + " did not converge (info=" +
                             std::to_string(info) + "); matrix dumped to " + files);
}

}  // namespace

std::vector<std::complex<double>> solve_spectrum(const DiscreteEvp& evp) {
    const auto size = evp.a.rows();
    if (size == 0 || evp.a.cols() != size)
        throw std::invalid_argument("solve_spectrum: matrix must be square and nonempty");
    const lapack_int n = static_cast<lapack_int>(size);
    std::vector<std::complex<double>> out;
    out.reserve(n);

    if (!evp.b) {
        Eigen::MatrixXd a = evp.a;  // dgeev overwrites its input
        std::vector<double> wr(n), wi(n);
        const lapack_int info = LAPACKE_dgeev(LAPACK_COL_MAJOR, 'N', 'N', n, a.data(), n,
                                              wr.data(), wi.data(), nullptr, 1, nullptr, 1);
        if (info < 0) throw std::invalid_argument("dgeev: illegal argument " + std::to_string(-info));
        if (info > 0) report_failure(evp, "dgeev", info);
        for (lapack_int j = 0; j < n; ++j) out.emplace_back(wr[j], wi[j]);
        return out;
    }

    if (evp.b->rows() != size || evp.b->cols() != size)
        throw std::invalid_argument("solve_spectrum: pencil matrices must agree in size");
    Eigen::MatrixXd a = evp.a;
    Eigen::MatrixXd b = *evp.b;
    std::vector<double> ar(n), ai(n), beta(n);
    const lapack_int info =
        LAPACKE_dggev(LAPACK_COL_MAJOR, 'N', 'N', n, a.data(), n, b.data(), n, ar.data(),
                      ai.data(), beta.data(), nullptr, 1, nullptr, 1);
    if (info < 0) throw std::invalid_argument("dggev: illegal argument " + std::to_string(-info));
    if (info > 0) report_failure(evp, "dggev", info);

    constexpr double inf = std::numeric_limits<double>::infinity();
    for (lapack_int j = 0; j < n; ++j) {
        if (beta[j] == 0.0) {
            out.emplace_back(inf, 0.0);
            continue;
        }
        const std::complex<double> lambda(ar[j] / beta[j], ai[j] / beta[j]);
        out.push_back(std::isfinite(lambda.real()) && std::isfinite(lambda.imag())
                          ? lambda
                          : std::complex<double>(inf, 0.0));
    }
    return out;
}

SpectrumResult filter_physical(const std::vector<std::complex<double>>& raw, double imag_tol,
                               double min_lambda) {
    if (raw.empty()) throw std::invalid_argument("filter_physical: raw spectrum is empty");
    SpectrumResult res;
    res.raw_count = static_cast<int>(raw.size());
    res.imag_tol_used = imag_tol;

    std::vector<double> kept;
    for (const auto& z : raw) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            ++res.discarded.infinite;
        } else if (std::abs(z.imag()) > imag_tol * std::max(1.0, std::abs(z.real()))) {
            ++res.discarded.nonreal;
        } else if (!(z.real() < 0.0)) {
            ++res.discarded.nonnegative;
        } else if (z.real() < min_lambda) {
            ++res.discarded.below_guard;
        } else {
            kept.push_back(z.real());
        }
    }
    std::sort(kept.begin(), kept.end());
    for (double v : kept) {
        if (!res.eigenvalues.empty() &&
            v - res.eigenvalues.back() <=
                1e-12 * std::max(std::abs(v), std::abs(res.eigenvalues.back()))) {
            ++res.merged_conjugates;  // conjugate-pair residue collapses to one entry
        } else {
            res.eigenvalues.push_back(v);
        }
    }
    return res;
}

SpectrumResult filter_physical(const DiscreteEvp& evp, const std::vector<std::complex<double>>& raw,
                               double imag_tol, double min_lambda) {
    SpectrumResult res = filter_physical(raw, imag_tol, min_lambda);
    res.n = evp.n;
    res.k = evp.k;
    res.meta = evp.meta;
    return res;
}

std::optional<double> eigenvalue_for(int n, int ell, const SpectrumResult& result) {
    if (n < ell + 1) throw std::invalid_argument("eigenvalue_for: requires n >= ell + 1");
    const size_t nu = static_cast<size_t>(n - ell - 1);
    if (nu >= result.eigenvalues.size()) return std::nullopt;
    return result.eigenvalues[nu];
}

}  // namespace radschrod
