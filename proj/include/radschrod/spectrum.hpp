#pragma once

#include <complex>
#include <limits>
#include <optional>
#include <vector>

#include "radschrod/assembly.hpp"

namespace radschrod {

struct DiscardCounts {
    int nonreal = 0;
    int nonnegative = 0;
    int infinite = 0;
    int below_guard = 0;
};

/// Bound-state approximations extracted from a raw dense spectrum:
/// strictly negative, strictly ascending, indexed by nu = n - ell - 1.
struct SpectrumResult {
    std::vector<double> eigenvalues;
    int raw_count = 0;
    DiscardCounts discarded;
    int merged_conjugates = 0;
    double imag_tol_used = 0.0;
    int n = 0;  // mesh size echo
    int k = 0;  // stencil half-width echo
    TransformMeta meta;
};

/// Full spectrum of the standard problem or of the pencil (a, b).  The two
/// structurally infinite eigenvalues of the singular coupled-boundary pencil
/// come back as complex(+inf, 0), never as an error.  Throws on solver
/// non-convergence after echoing the matrix to the exchange format.
std::vector<std::complex<double>> solve_spectrum(const DiscreteEvp& evp);

/// Keep eigenvalues with |Im| <= imag_tol * max(1, |Re|) and Re < 0, sort
/// ascending, and collapse conjugate residue closer than 1e-12 relative.
/// Everything else is counted by discard reason.  min_lambda guards against
/// discretization-polluted deep eigenvalues; the default keeps everything.
SpectrumResult filter_physical(const std::vector<std::complex<double>>& raw,
                               double imag_tol = 1e-8,
                               double min_lambda = -std::numeric_limits<double>::infinity());

/// filter_physical plus the problem metadata echo.
SpectrumResult filter_physical(const DiscreteEvp& evp, const std::vector<std::complex<double>>& raw,
                               double imag_tol = 1e-8,
                               double min_lambda = -std::numeric_limits<double>::infinity());

/// lambda with Sturm index nu = n - ell - 1, or absent when the spectrum is
/// too short.  Requires n >= ell + 1.
std::optional<double> eigenvalue_for(int n, int ell, const SpectrumResult& result);

}  // namespace radschrod
