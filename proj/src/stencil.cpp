#include "radschrod/stencil.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace radschrod {

namespace {

using Int = __int128;

void check_half_width(int k, const char* op) {
    if (k < 1 || k > kMaxHalfWidth) {
        throw std::invalid_argument(std::string(op) + ": stencil half-width k must be in [1, " +
                                    std::to_string(kMaxHalfWidth) + "], got " + std::to_string(k));
    }
}

// Weights w_j of the unique interpolatory formula
//
//   f^(s)(at) ~= sum_j w_j f(nodes[j])
//
// on distinct integer nodes, obtained as the s-th derivative of the Lagrange
// basis polynomials evaluated at `at`.  These are exactly the solutions of
// the monomial order-condition system; numerator and denominator stay exact
// in 128-bit integers (at most 14 nodes with values <= 13), so every weight
// is a correctly rounded double.
std::vector<double> lagrange_weights(const std::vector<int>& nodes, int at, int s) {
    const int n = static_cast<int>(nodes.size());
    std::vector<double> w(n);
    std::vector<Int> coeff;
    coeff.reserve(n);
    for (int j = 0; j < n; ++j) {
        Int den = 1;
        coeff.assign(1, Int{1});
        for (int i = 0; i < n; ++i) {
            if (i == j) continue;
            den *= Int{nodes[j] - nodes[i]};
            // multiply the numerator polynomial by (x - nodes[i])
            coeff.push_back(0);
            for (int d = static_cast<int>(coeff.size()) - 1; d > 0; --d) {
                coeff[d] = coeff[d - 1] - Int{nodes[i]} * coeff[d];
            }
            coeff[0] *= -Int{nodes[i]};
        }
        if (den == 0) throw std::runtime_error("lagrange_weights: repeated stencil node");
        // differentiate s times
        for (int pass = 0; pass < s; ++pass) {
            for (size_t d = 0; d + 1 < coeff.size(); ++d) coeff[d] = Int(d + 1) * coeff[d + 1];
            coeff.pop_back();
        }
        Int num = 0;
        for (auto it = coeff.rbegin(); it != coeff.rend(); ++it) num = num * Int{at} + *it;
        w[j] = static_cast<double>(static_cast<long double>(num) / static_cast<long double>(den));
    }
    return w;
}

std::vector<int> range(int first, int last) {
    std::vector<int> r;
    r.reserve(last - first + 1);
    for (int i = first; i <= last; ++i) r.push_back(i);
    return r;
}

}  // namespace

std::pair<std::vector<double>, std::vector<double>> derive_main(int k) {
    check_half_width(k, "derive_main");
    const auto nodes = range(-k, k);
    auto first = lagrange_weights(nodes, 0, 1);
    auto second = lagrange_weights(nodes, 0, 2);
    for (int j = 0; j <= k; ++j) {
        if (std::abs(first[j] + first[2 * k - j]) > 1e-12 ||
            std::abs(second[j] - second[2 * k - j]) > 1e-12) {
            throw std::runtime_error("derive_main: computed coefficients are not symmetric");
        }
    }
    return {std::move(first), std::move(second)};
}

AdditionalTables derive_additional(int k) {
    check_half_width(k, "derive_additional");
    AdditionalTables t;
    if (k == 1) return t;
    const auto first_nodes = range(0, 2 * k);
    const auto second_nodes = range(0, 2 * k + 1);
    for (int i = 1; i <= k - 1; ++i) {
        t.initial_first.push_back(lagrange_weights(first_nodes, i, 1));
        t.initial_second.push_back(lagrange_weights(second_nodes, i, 2));
    }
    // final rows mirror the initial ones: row r corresponds to the node k-1-r
    // positions from the right end
    for (int r = 0; r <= k - 2; ++r) {
        const auto& bf = t.initial_first[k - 2 - r];
        const auto& gf = t.initial_second[k - 2 - r];
        std::vector<double> b(bf.rbegin(), bf.rend());
        for (auto& v : b) v = -v;
        t.final_first.push_back(std::move(b));
        t.final_second.emplace_back(gf.rbegin(), gf.rend());
    }
    return t;
}

std::vector<double> derive_bdf(int k) {
    check_half_width(k, "derive_bdf");
    return lagrange_weights(range(0, 2 * k), 2 * k, 1);
}

StencilSet make_stencil_set(int k) {
    check_half_width(k, "make_stencil_set");
    StencilSet s;
    s.k = k;
    std::tie(s.main_first, s.main_second) = derive_main(k);
    auto add = derive_additional(k);
    s.initial_first = std::move(add.initial_first);
    s.initial_second = std::move(add.initial_second);
    s.final_first = std::move(add.final_first);
    s.final_second = std::move(add.final_second);
    s.bdf = derive_bdf(k);
    return s;
}

}  // namespace radschrod
