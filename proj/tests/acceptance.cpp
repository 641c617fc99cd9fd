// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.  The N=1500 benchmark column takes a few minutes and sits behind
// --slow (everything) or --slow-only (just the slow checks).
#include <cmath>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "radschrod/commands.hpp"

using namespace radschrod;

namespace {

int failures = 0;

void report(const std::string& name, bool ok, const std::string& detail) {
    std::printf("[%s] %s%s%s\n", ok ? "PASS" : "FAIL", name.c_str(),
                detail.empty() ? "" : "  --  ", detail.c_str());
    if (!ok) ++failures;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3e", v);
    return buf;
}

double tcii_lambda(const std::string& potential, double alpha, int ell, int order, int npoints,
                   int n, const std::string& xi = "auto") {
    RunConfig cfg;
    cfg.potential = potential;
    cfg.alpha = alpha;
    cfg.ell = ell;
    cfg.transform = "tcii";
    cfg.order = order;
    cfg.xi = xi;
    cfg.npoints = {npoints};
    cfg.reference = "none";
    const auto run = run_pipeline(cfg, npoints);
    const auto lambda = eigenvalue_for(n, ell, run.spectrum);
    if (!lambda)
        throw std::runtime_error("eigenvalue n=" + std::to_string(n) + " missing at N=" +
                                 std::to_string(npoints));
    return *lambda;
}

struct GoldenRow {
    int n;
    int ell;
    double alpha;
    double half_n200;
    double half_n1500;
};

// published reference grid: lambda/2 for the screened-Coulomb tail,
// compression transform, heuristic scale, order 8
const std::vector<GoldenRow> kGolden = {
    {9, 0, 0.010, -0.0005858266584, -0.0005858247613},
    {9, 1, 0.010, -0.0005665076452, -0.0005665076262},
    {9, 2, 0.010, -0.0005276644219, -0.0005276644203},
    {9, 3, 0.010, -0.0004688490639, -0.0004688490636},
    {9, 4, 0.010, -0.0003893108560, -0.0003893108559},
    {9, 5, 0.010, -0.0002878564558, -0.0002878564558},
    {9, 6, 0.005, -0.0022606077423, -0.0022606077423},
    {9, 7, 0.005, -0.0021997976659, -0.0021997976659},
    {9, 8, 0.005, -0.0021291265596, -0.0021291265596},
    {10, 0, 0.005, -0.0015083751962, -0.0015083559308},
    {10, 1, 0.005, -0.0015009237055, -0.0015009235029},
    {10, 2, 0.005, -0.0014860116411, -0.0014860116241},
    {10, 3, 0.005, -0.0014635239308, -0.0014635239276},
    {10, 4, 0.005, -0.0014333097815, -0.0014333097805},
    {10, 5, 0.005, -0.0013951561297, -0.0013951561294},
    {10, 6, 0.005, -0.0013487749861, -0.0013487749860},
    {10, 7, 0.005, -0.0012937846260, -0.0012937846260},
    {10, 8, 0.005, -0.0012296811836, -0.0012296811836},
};

void criterion1_column(int npoints, bool large) {
    double worst = 0;
    bool ok = true;
    for (const auto& row : kGolden) {
        const double half =
            0.5 * tcii_lambda("yukawa", row.alpha, row.ell, 8, npoints, row.n);
        const double diff = std::abs(half - (large ? row.half_n1500 : row.half_n200));
        worst = std::max(worst, diff);
        ok = ok && diff <= 1e-10;
    }
    report("criterion 1: benchmark grid, N=" + std::to_string(npoints) +
               " column (18 rows, abs tol 1e-10)",
           ok, "max |diff| = " + fmt(worst));
}

void criterion2() {
    double worst = 0;
    bool ok = true;
    for (int ell : {0, 3}) {
        for (int n = ell + 1; n <= ell + 5; ++n) {
            const double lambda = tcii_lambda("hydrogen", 0.0, ell, 8, 300, n);
            const double rel = floored_rel_error(lambda, -1.0 / (double(n) * n));
            worst = std::max(worst, rel);
            ok = ok && rel <= 1e-6;
        }
    }
    report("criterion 2: hydrogen vs -1/n^2, order 8, N=300, ell in {0,3} (rel tol 1e-6)", ok,
           "max rel = " + fmt(worst));
}

void criterion3() {
    bool ok = true;
    std::string detail;
    for (int p : {2, 4, 6}) {
        std::vector<double> hs, errs;
        for (int npoints : {25, 50, 100, 200}) {
            // xi = 2 rather than the heuristic: the free parameter is chosen
            // off the error sign change the heuristic value hits at p = 6,
            // where no order is measurable
            const double lambda = tcii_lambda("hydrogen", 0.0, 0, p, npoints, 1, "2");
            hs.push_back(1.0 / (npoints + 1));
            errs.push_back(floored_rel_error(lambda, -1.0));
        }
        const double order = observed_order(hs, errs);
        ok = ok && order >= p - 0.5;
        detail += "p=" + std::to_string(p) + ": " + fmt(order).substr(0, 5) + "  ";
    }
    report("criterion 3: fitted convergence order >= p - 0.5 for p in {2,4,6}", ok, detail);
}

void criterion4(bool slow) {
    const auto hulthen = PotentialSpec::hulthen(0.02);
    const int npoints = slow ? 1500 : 400;
    const double tol = slow ? 1e-10 : 1e-8;
    double worst = 0;
    bool ok = true;
    for (int n = 1; n <= 5; ++n) {
        const double lambda = tcii_lambda("hulthen", 0.02, 0, 8, npoints, n);
        const double rel = floored_rel_error(lambda, *exact_eigenvalue(hulthen, n, 0));
        worst = std::max(worst, rel);
        ok = ok && rel <= tol;
    }
    report("criterion 4: closed-form screened-tail spectrum, n=1..5, N=" +
               std::to_string(npoints) + " (rel tol " + fmt(tol) + ")",
           ok, "max rel = " + fmt(worst));
}

double lambda10_rel_error(const std::string& transform) {
    RunConfig cfg;
    cfg.potential = "hydrogen";
    cfg.ell = 3;
    cfg.transform = transform;
    cfg.order = 4;
    cfg.npoints = {400};
    cfg.reference = "none";
    const auto run = run_pipeline(cfg, 400);
    const auto lambda = eigenvalue_for(10, 3, run.spectrum);
    if (!lambda) throw std::runtime_error("lambda_10 missing for " + transform);
    return floored_rel_error(*lambda, -0.01);
}

void criterion5() {
    const double tcii = lambda10_rel_error("tcii");
    const double tds = lambda10_rel_error("tds");
    const double atcii = lambda10_rel_error("atcii");
    const bool ok = tcii < tds && tcii < atcii;
    report("criterion 5: transform comparison on lambda_10 (tcii beats tds and atcii)", ok,
           "tcii " + fmt(tcii) + " vs tds " + fmt(tds) + " vs atcii " + fmt(atcii));
}

void criterion6() {
    bool ok = true;
    double worst = 0;
    // exactness on the target-centered monomials, symmetry, row sums, mirror
    for (int k = 1; k <= 4 && ok; ++k) {
        const auto s = make_stencil_set(k);
        auto defect = [&](const std::vector<double>& w, int first_node, int at, int deriv,
                          int q) {
            long double acc = 0;
            for (size_t j = 0; j < w.size(); ++j) {
                long double p = 1;
                for (int e = 0; e < q; ++e) p *= first_node + int(j) - at;
                acc += static_cast<long double>(w[j]) * p;
            }
            if (q == deriv) acc -= deriv == 1 ? 1 : 2;
            return static_cast<double>(std::fabs(static_cast<double>(acc)));
        };
        auto check_row = [&](const std::vector<double>& w, int first_node, int at, int deriv) {
            double mw = 1;
            for (double x : w) mw = std::max(mw, std::abs(x));
            double sum = 0;
            for (double x : w) sum += x;
            ok = ok && std::abs(sum) <= 1e-10 * mw;
            for (int q = 0; q <= 2 * k; ++q) {
                const double d = defect(w, first_node, at, deriv, q);
                worst = std::max(worst, d / mw);
                ok = ok && d <= 1e-10 * mw;
            }
        };
        check_row(s.main_first, -k, 0, 1);
        check_row(s.main_second, -k, 0, 2);
        check_row(s.bdf, 0, 2 * k, 1);
        for (int i = 1; i <= k - 1; ++i) {
            check_row(s.initial_first[i - 1], 0, i, 1);
            check_row(s.initial_second[i - 1], 0, i, 2);
            check_row(s.final_first[i - 1], 0, k + i, 1);
            check_row(s.final_second[i - 1], 0, k + 1 + i, 2);
        }
        for (int j = 0; j <= k; ++j) {
            ok = ok && std::abs(s.main_first[j] + s.main_first[2 * k - j]) <= 1e-12;
            ok = ok && std::abs(s.main_second[j] - s.main_second[2 * k - j]) <= 1e-12;
        }
        for (int r = 0; r <= k - 2; ++r) {
            const auto& bi = s.initial_first[k - 2 - r];
            const auto& gi = s.initial_second[k - 2 - r];
            for (size_t j = 0; j < bi.size(); ++j)
                ok = ok && s.final_first[r][j] == -bi[bi.size() - 1 - j];
            for (size_t j = 0; j < gi.size(); ++j)
                ok = ok && s.final_second[r][j] == gi[gi.size() - 1 - j];
        }
    }
    // the order-4 tables as rationals over 12
    const auto s4 = make_stencil_set(2);
    auto rat = [&](const std::vector<double>& w, const std::vector<double>& twelfths) {
        for (size_t j = 0; j < w.size(); ++j)
            ok = ok && std::abs(w[j] - twelfths[j] / 12.0) <= 1e-15 * std::max(1.0, std::abs(w[j]));
    };
    rat(s4.main_first, {1, -8, 0, 8, -1});
    rat(s4.main_second, {-1, 16, -30, 16, -1});
    rat(s4.initial_first[0], {-3, -10, 18, -6, 1});
    rat(s4.initial_second[0], {10, -15, -4, 14, -6, 1});
    rat(s4.final_first[0], {-1, 6, -18, 10, 3});
    rat(s4.final_second[0], {1, -6, 14, -4, -15, 10});
    report("criterion 6: stencil invariants k=1..4 at 1e-10, order-4 tables exact", ok,
           "worst exactness defect/max|w| = " + fmt(worst));
}

void criterion7() {
    TransformedProblem tp;
    tp.m = 1;
    tp.a2 = [](double) { return Eigen::MatrixXd::Identity(1, 1); };
    tp.a1 = [](double) { return Eigen::MatrixXd::Zero(1, 1); };
    tp.a0 = [](double) { return Eigen::MatrixXd::Zero(1, 1); };
    tp.w = [](double) { return Eigen::MatrixXd::Identity(1, 1); };
    tp.right_bc = RightBc::Dirichlet;
    tp.map_t_of_r = [](double r) { return r; };
    tp.map_r_of_t = [](double t) { return t; };
    const int n = 50;
    const auto evp = assemble(tp, n, make_stencil_set(1));
    const auto raw = solve_spectrum(evp);
    std::vector<double> lams;
    for (auto z : raw) lams.push_back(z.real());
    std::sort(lams.begin(), lams.end());
    double worst = 0;
    bool ok = raw.size() == static_cast<size_t>(n);
    for (int j = 1; j <= n; ++j) {
        const double exact = (2.0 - 2.0 * std::cos(j * M_PI * evp.h)) / (evp.h * evp.h);
        const double rel = std::abs(lams[j - 1] - exact) / exact;
        worst = std::max(worst, rel);
        ok = ok && rel <= 1e-10;
    }
    report("criterion 7: Dirichlet Laplacian eigenvalues vs closed form, N=50 (rel tol 1e-10)",
           ok, "max rel = " + fmt(worst));
}

void criterion8() {
    bool ok = true;
    std::string detail;
    struct Case {
        std::string potential;
        double alpha;
        int ell;
        int order;
        int npoints;
    };
    for (const Case& c : {Case{"hydrogen", 0.0, 0, 2, 30}, Case{"hulthen", 0.05, 2, 4, 40},
                          Case{"yukawa", 0.01, 1, 8, 64}}) {
        RunConfig cfg;
        cfg.potential = c.potential;
        cfg.alpha = c.alpha;
        cfg.ell = c.ell;
        cfg.transform = "tds";
        cfg.order = c.order;
        cfg.npoints = {c.npoints};
        cfg.reference = "none";
        const auto run = run_pipeline(cfg, c.npoints);
        const auto& s = run.spectrum;
        const int finite = s.raw_count - s.discarded.infinite;
        ok = ok && s.discarded.infinite == 2 && finite == 2 * c.npoints;
        detail += c.potential + ": " + std::to_string(s.discarded.infinite) + " inf / " +
                  std::to_string(finite) + " finite  ";
    }
    report("criterion 8: coupled-boundary pencil has exactly 2 infinite eigenvalues", ok, detail);
}

}  // namespace

int main(int argc, char** argv) {
    bool slow = false, slow_only = false;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--slow") == 0) slow = true;
        if (std::strcmp(argv[i], "--slow-only") == 0) slow = slow_only = true;
    }
    try {
        if (!slow_only) {
            criterion1_column(200, false);
            criterion2();
            criterion3();
            criterion4(false);
            criterion5();
            criterion6();
            criterion7();
            criterion8();
        }
        if (slow) {
            criterion1_column(1500, true);
            criterion4(true);
        }
    } catch (const std::exception& e) {
        std::printf("[FAIL] acceptance aborted: %s\n", e.what());
        return 1;
    }
    if (failures) std::printf("%d criterion check(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
