#include "radschrod/potential.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace radschrod {

PotentialSpec PotentialSpec::hydrogen() { return {}; }

PotentialSpec PotentialSpec::hulthen(double alpha) {
    if (!(alpha > 0.0)) throw std::invalid_argument("hulthen: screening parameter must be > 0");
    PotentialSpec p;
    p.kind = PotentialKind::Hulthen;
    p.alpha = alpha;
    return p;
}

PotentialSpec PotentialSpec::yukawa(double alpha) {
    if (!(alpha > 0.0)) throw std::invalid_argument("yukawa: screening parameter must be > 0");
    PotentialSpec p;
    p.kind = PotentialKind::Yukawa;
    p.alpha = alpha;
    return p;
}

PotentialSpec PotentialSpec::custom(std::function<double(double)> v, double origin_limit) {
    if (!v) throw std::invalid_argument("custom potential: evaluator is empty");
    if (!std::isfinite(origin_limit))
        throw std::invalid_argument("custom potential: lim r->0+ r*V(r) must be finite");
    PotentialSpec p;
    p.kind = PotentialKind::Custom;
    p.custom_eval = std::move(v);
    p.custom_origin_limit = origin_limit;
    return p;
}

double evaluate(const PotentialSpec& p, double r) {
    if (!(r > 0.0)) throw std::domain_error("potential evaluated at r <= 0");
    switch (p.kind) {
        case PotentialKind::Hydrogen:
            return -2.0 / r;
        case PotentialKind::Hulthen: {
            const double x = p.alpha * r;
            // e^{-x}/(1-e^{-x}) = 1/(x + x^2/2 + x^3/6 + ...); the truncated
            // series avoids cancellation for small x
            if (x < 1e-4) return -2.0 * p.alpha / (x * (1.0 + x * (0.5 + x / 6.0)));
            const double e = std::exp(-x);
            return -2.0 * p.alpha * e / (1.0 - e);
        }
        case PotentialKind::Yukawa:
            return -2.0 * std::exp(-p.alpha * r) / r;
        case PotentialKind::Custom:
            return p.custom_eval(r);
    }
    throw std::logic_error("unreachable potential kind");
}

std::optional<double> exact_eigenvalue(const PotentialSpec& p, int n, int ell) {
    if (n < ell + 1)
        throw std::invalid_argument("exact_eigenvalue: requires n >= ell + 1");
    switch (p.kind) {
        case PotentialKind::Hydrogen:
            return -1.0 / (static_cast<double>(n) * n);
        case PotentialKind::Hulthen: {
            if (ell != 0) return std::nullopt;
            const double n2a = static_cast<double>(n) * n * p.alpha;
            if (!(n2a < 2.0)) return std::nullopt;  // state not bound
            const double q = (2.0 - n2a) / (2.0 * n);
            return -q * q;
        }
        default:
            return std::nullopt;
    }
}

std::string to_string(PotentialKind kind) {
    switch (kind) {
        case PotentialKind::Hydrogen: return "hydrogen";
        case PotentialKind::Hulthen: return "hulthen";
        case PotentialKind::Yukawa: return "yukawa";
        case PotentialKind::Custom: return "custom";
    }
    return "?";
}

PotentialKind potential_kind_from_string(const std::string& name) {
    if (name == "hydrogen") return PotentialKind::Hydrogen;
    if (name == "hulthen") return PotentialKind::Hulthen;
    if (name == "yukawa") return PotentialKind::Yukawa;
    if (name == "custom") return PotentialKind::Custom;
    throw std::invalid_argument("unknown potential \"" + name +
                                "\" (expected hydrogen, hulthen or yukawa)");
}

}  // namespace radschrod
