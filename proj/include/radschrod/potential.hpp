#pragma once

#include <functional>
#include <optional>
#include <string>

namespace radschrod {

enum class PotentialKind { Hydrogen, Hulthen, Yukawa, Custom };

/// A radial potential V(r) on (0, inf).  All supported potentials vanish at
/// infinity and have a Coulomb-type origin, i.e. lim_{r->0+} r*V(r) finite.
/// Custom potentials must state that limit explicitly.
struct PotentialSpec {
    PotentialKind kind = PotentialKind::Hydrogen;
    double alpha = 0.0;  // screening parameter; ignored for Hydrogen
    std::function<double(double)> custom_eval;
    std::optional<double> custom_origin_limit;

    static PotentialSpec hydrogen();
    static PotentialSpec hulthen(double alpha);
    static PotentialSpec yukawa(double alpha);
    static PotentialSpec custom(std::function<double(double)> v, double origin_limit);
};

/// V(r).  Throws std::domain_error for r <= 0.  Screened tails underflow to
/// 0 for very large r instead of raising.
double evaluate(const PotentialSpec& p, double r);

/// Closed-form eigenvalue lambda_n when one is known: hydrogen for any ell,
/// Hulthen for ell = 0 (only while the state is bound).  Everything else is
/// absent.  Requires n >= ell + 1.
std::optional<double> exact_eigenvalue(const PotentialSpec& p, int n, int ell);

std::string to_string(PotentialKind kind);
PotentialKind potential_kind_from_string(const std::string& name);

}  // namespace radschrod
