#include "radschrod/commands.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "radschrod/matrix_io.hpp"

namespace radschrod {

namespace {

using nlohmann::json;

std::string sci(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.16e", v);
    return buf;
}

std::string fixed13(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.13f", v);
    return buf;
}

PotentialSpec make_potential(const RunConfig& cfg) {
    switch (potential_kind_from_string(cfg.potential)) {
        case PotentialKind::Hydrogen: return PotentialSpec::hydrogen();
        case PotentialKind::Hulthen: return PotentialSpec::hulthen(cfg.alpha);
        case PotentialKind::Yukawa: return PotentialSpec::yukawa(cfg.alpha);
        default:
            throw std::invalid_argument("custom potentials are not reachable from the CLI");
    }
}

TransformedProblem make_transform(const RunConfig& cfg, double& xi_resolved) {
    const PotentialSpec pot = make_potential(cfg);
    xi_resolved = 0.0;
    switch (transform_kind_from_string(cfg.transform)) {
        case TransformKind::Tds: return build_tds(pot, cfg.ell);
        case TransformKind::Tcii:
            xi_resolved = resolve_xi(cfg);
            return build_tcii(pot, cfg.ell, xi_resolved);
        case TransformKind::Atcii: return build_atcii(pot, cfg.ell);
    }
    throw std::logic_error("unreachable transform kind");
}

int worker_count(int njobs) {
    int n = static_cast<int>(std::thread::hardware_concurrency());
    if (n <= 0) n = 1;
    if (const char* env = std::getenv("RADSCHROD_THREADS")) {
        const int cap = std::atoi(env);
        if (cap >= 1) n = cap;
    }
    return std::min(n, njobs);
}

void parallel_for(int njobs, const std::function<void(int)>& fn) {
    const int workers = worker_count(njobs);
    if (workers <= 1) {
        for (int i = 0; i < njobs; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr err;
    std::mutex err_mu;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const int i = next.fetch_add(1);
                if (i >= njobs) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(err_mu);
                    if (!err) err = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
}

int with_sink(const RunConfig& cfg, std::ostream& fallback,
              const std::function<void(std::ostream&)>& write) {
    if (cfg.out.empty()) {
        write(fallback);
        return 0;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file " + cfg.out);
    write(f);
    return 0;
}

void write_config_comment(std::ostream& out, const RunConfig& cfg, double xi_resolved) {
    std::istringstream lines(render_config(cfg));
    std::string line;
    while (std::getline(lines, line)) out << "# " << line << "\n";
    if (cfg.xi == "auto" && cfg.transform == "tcii")
        out << "# xi_resolved=" << sci(xi_resolved) << "\n";
}

json config_to_json(const RunConfig& cfg) {
    return json{{"potential", cfg.potential}, {"alpha", cfg.alpha},
                {"ell", cfg.ell},             {"transform", cfg.transform},
                {"order", cfg.order},         {"npoints", cfg.npoints},
                {"xi", cfg.xi},               {"imag_tol", cfg.imag_tol},
                {"reference", cfg.reference}, {"nref", cfg.nref},
                {"order_ref", cfg.order_ref}, {"format", cfg.format},
                {"out", cfg.out},             {"nq", cfg.nq},
                {"min_lambda", cfg.min_lambda}};
}

json diagnostics_to_json(const SpectrumResult& s) {
    return json{{"raw_count", s.raw_count},
                {"nonreal", s.discarded.nonreal},
                {"nonnegative", s.discarded.nonnegative},
                {"infinite", s.discarded.infinite},
                {"below_guard", s.discarded.below_guard},
                {"merged_conjugates", s.merged_conjugates},
                {"imag_tol_used", s.imag_tol_used}};
}

struct ReportRow {
    int nu = 0;
    int n = 0;
    double lambda = 0;
    std::optional<double> reference;
};

// reference eigenvalue provider for mode exact/highn/none
std::function<std::optional<double>(int)> make_reference(const RunConfig& cfg,
                                                         std::ostream& log) {
    if (cfg.reference == "none") return [](int) { return std::optional<double>{}; };
    if (cfg.reference == "exact") {
        const PotentialSpec pot = make_potential(cfg);
        const int ell = cfg.ell;
        return [pot, ell](int n) { return exact_eigenvalue(pot, n, ell); };
    }
    // highn: one reference solve, shared across rows
    RunConfig ref_cfg = cfg;
    ref_cfg.order = cfg.order_ref;
    ref_cfg.npoints = {cfg.nref};
    ref_cfg.reference = "none";
    log << "computing high-N reference (order " << ref_cfg.order << ", N=" << cfg.nref << ")\n";
    auto ref = run_pipeline(ref_cfg, cfg.nref);
    const int ell = cfg.ell;
    auto spectrum = std::make_shared<SpectrumResult>(std::move(ref.spectrum));
    return [spectrum, ell](int n) { return eigenvalue_for(n, ell, *spectrum); };
}

}  // namespace

PipelineResult run_pipeline(const RunConfig& cfg, int npoints) {
    PipelineResult res;
    TransformedProblem tp = make_transform(cfg, res.xi_resolved);
    const StencilSet stencils = make_stencil_set(stencil_half_width(cfg));
    const DiscreteEvp evp = assemble(tp, npoints, stencils);
    const auto raw = solve_spectrum(evp);
    res.spectrum = filter_physical(evp, raw, cfg.imag_tol, cfg.min_lambda);
    return res;
}

double floored_rel_error(double computed, double reference) {
    const double scale = std::abs(reference);
    const double rel = scale > 0 ? std::abs(computed - reference) / scale
                                 : std::abs(computed - reference);
    return std::max(rel, 1e-16);
}

double observed_order(const std::vector<double>& h, const std::vector<double>& err) {
    if (h.size() != err.size() || h.size() < 2)
        throw std::invalid_argument("observed_order: need matching h/err with >= 2 samples");
    const size_t use = std::min<size_t>(3, h.size());
    const size_t first = h.size() - use;
    double sx = 0, sy = 0;
    for (size_t i = first; i < h.size(); ++i) {
        sx += std::log(h[i]);
        sy += std::log(err[i]);
    }
    const double mx = sx / use, my = sy / use;
    double num = 0, den = 0;
    for (size_t i = first; i < h.size(); ++i) {
        const double dx = std::log(h[i]) - mx;
        num += dx * (std::log(err[i]) - my);
        den += dx * dx;
    }
    return num / den;
}

int cmd_solve(const RunConfig& cfg, std::ostream& out, std::ostream& log) {
    validate_config(cfg);
    if (cfg.npoints.size() != 1)
        throw std::invalid_argument("solve expects a single npoints value; use converge for sweeps");
    const int npoints = cfg.npoints.front();

    PipelineResult run = run_pipeline(cfg, npoints);
    if (cfg.xi == "auto" && cfg.transform == "tcii")
        log << "xi=auto resolved to " << sci(run.xi_resolved) << "\n";

    auto reference = make_reference(cfg, log);
    std::vector<ReportRow> rows;
    for (size_t nu = 0; nu < run.spectrum.eigenvalues.size(); ++nu) {
        ReportRow r;
        r.nu = static_cast<int>(nu);
        r.n = r.nu + cfg.ell + 1;
        r.lambda = run.spectrum.eigenvalues[nu];
        r.reference = reference(r.n);
        rows.push_back(r);
    }

    return with_sink(cfg, out, [&](std::ostream& o) {
        if (cfg.format == "csv") {
            o << "# radschrod solve\n";
            write_config_comment(o, cfg, run.xi_resolved);
            o << "nu,n,lambda,lambda_half,reference,rel_error\n";
            if (rows.empty()) o << "# no bound states retained\n";
            for (const auto& r : rows) {
                o << r.nu << "," << r.n << "," << sci(r.lambda) << "," << sci(0.5 * r.lambda)
                  << ",";
                if (r.reference) {
                    o << sci(*r.reference) << ",";
                    char buf[32];
                    std::snprintf(buf, sizeof(buf), "%.6e",
                                  floored_rel_error(r.lambda, *r.reference));
                    o << buf;
                } else {
                    o << ",";
                }
                o << "\n";
            }
        } else if (cfg.format == "json") {
            json doc;
            doc["command"] = "solve";
            doc["config"] = config_to_json(cfg);
            if (cfg.xi == "auto" && cfg.transform == "tcii") doc["xi_resolved"] = run.xi_resolved;
            doc["diagnostics"] = diagnostics_to_json(run.spectrum);
            doc["rows"] = json::array();
            for (const auto& r : rows) {
                json jr{{"nu", r.nu},
                        {"n", r.n},
                        {"lambda", r.lambda},
                        {"lambda_half", 0.5 * r.lambda}};
                if (r.reference) {
                    jr["reference"] = *r.reference;
                    jr["rel_error"] = floored_rel_error(r.lambda, *r.reference);
                }
                doc["rows"].push_back(jr);
            }
            if (rows.empty()) doc["note"] = "no bound states retained";
            o << doc.dump(2) << "\n";
        } else {  // table
            char buf[160];
            std::snprintf(buf, sizeof(buf), "%4s %4s %20s %20s %20s %12s\n", "nu", "n", "lambda",
                          "lambda/2", "reference", "rel_error");
            o << buf;
            if (rows.empty()) o << "  no bound states retained\n";
            for (const auto& r : rows) {
                std::string ref = r.reference ? fixed13(*r.reference) : "-";
                std::string rel = "-";
                if (r.reference) {
                    char eb[32];
                    std::snprintf(eb, sizeof(eb), "%.4e", floored_rel_error(r.lambda, *r.reference));
                    rel = eb;
                }
                std::snprintf(buf, sizeof(buf), "%4d %4d %20s %20s %20s %12s\n", r.nu, r.n,
                              fixed13(r.lambda).c_str(), fixed13(0.5 * r.lambda).c_str(),
                              ref.c_str(), rel.c_str());
                o << buf;
            }
        }
    });
}

int cmd_converge(const RunConfig& cfg, std::ostream& out, std::ostream& log) {
    validate_config(cfg);
    if (cfg.npoints.size() < 3)
        throw std::invalid_argument("converge needs at least three npoints values");
    if (cfg.reference == "none")
        throw std::invalid_argument("converge needs a reference (exact or highn)");
    const int n_target = cfg.nq != 0 ? cfg.nq : cfg.ell + 1;
    if (n_target < cfg.ell + 1) throw std::invalid_argument("nq must be >= ell + 1");
    const int n_max = *std::max_element(cfg.npoints.begin(), cfg.npoints.end());
    if (cfg.reference == "highn" && cfg.nref <= n_max)
        throw std::invalid_argument("nref must exceed every npoints value in highn mode");

    auto reference = make_reference(cfg, log);
    const std::optional<double> ref = reference(n_target);
    if (!ref)
        throw std::invalid_argument("no reference eigenvalue available for n=" +
                                    std::to_string(n_target) +
                                    " (try --reference highn with a larger --nref)");

    const int jobs = static_cast<int>(cfg.npoints.size());
    std::vector<PipelineResult> runs(jobs);
    parallel_for(jobs, [&](int i) { runs[i] = run_pipeline(cfg, cfg.npoints[i]); });
    if (cfg.xi == "auto" && cfg.transform == "tcii")
        log << "xi=auto resolved to " << sci(runs.front().xi_resolved) << "\n";

    std::vector<double> hs(jobs), errs(jobs), lambdas(jobs);
    for (int i = 0; i < jobs; ++i) {
        const auto lambda = eigenvalue_for(n_target, cfg.ell, runs[i].spectrum);
        if (!lambda)
            throw std::runtime_error("eigenvalue n=" + std::to_string(n_target) +
                                     " not resolved at N=" + std::to_string(cfg.npoints[i]));
        lambdas[i] = *lambda;
        hs[i] = 1.0 / (cfg.npoints[i] + 1);
        errs[i] = floored_rel_error(*lambda, *ref);
    }
    const double order = observed_order(hs, errs);

    return with_sink(cfg, out, [&](std::ostream& o) {
        if (cfg.format == "json") {
            json doc;
            doc["command"] = "converge";
            doc["config"] = config_to_json(cfg);
            doc["n_target"] = n_target;
            doc["reference"] = *ref;
            doc["rows"] = json::array();
            for (int i = 0; i < jobs; ++i)
                doc["rows"].push_back(json{{"npoints", cfg.npoints[i]},
                                           {"h", hs[i]},
                                           {"lambda", lambdas[i]},
                                           {"rel_error", errs[i]}});
            doc["observed_order"] = order;
            o << doc.dump(2) << "\n";
            return;
        }
        o << "# radschrod converge (n=" << n_target << ")\n";
        write_config_comment(o, cfg, runs.front().xi_resolved);
        o << "N,h,lambda,rel_error\n";
        for (int i = 0; i < jobs; ++i) {
            char eb[32];
            std::snprintf(eb, sizeof(eb), "%.6e", errs[i]);
            o << cfg.npoints[i] << "," << sci(hs[i]) << "," << sci(lambdas[i]) << "," << eb
              << "\n";
        }
        char ob[64];
        std::snprintf(ob, sizeof(ob), "# observed_order = %.4f\n", order);
        o << ob;
    });
}

int cmd_table1(const RunConfig& cfg, std::ostream& out, std::ostream& log, int n_small,
               int n_large) {
    struct GridRow {
        int n;
        int ell;
        double alpha;
    };
    std::vector<GridRow> grid;
    for (int ell = 0; ell <= 8; ++ell) grid.push_back({9, ell, ell <= 5 ? 0.010 : 0.005});
    for (int ell = 0; ell <= 8; ++ell) grid.push_back({10, ell, 0.005});

    // distinct (ell, alpha, N) solves; both n-blocks share them where possible
    std::map<std::tuple<int, double, int>, SpectrumResult> solves;
    for (const auto& g : grid)
        for (int n : {n_small, n_large}) solves.try_emplace({g.ell, g.alpha, n});

    std::vector<std::tuple<int, double, int>> keys;
    keys.reserve(solves.size());
    for (const auto& [key, value] : solves) keys.push_back(key);
    log << "table1: " << keys.size() << " eigenvalue solves\n";

    parallel_for(static_cast<int>(keys.size()), [&](int i) {
        const auto& [ell, alpha, npoints] = keys[i];
        RunConfig row_cfg = cfg;
        row_cfg.potential = "yukawa";
        row_cfg.alpha = alpha;
        row_cfg.ell = ell;
        row_cfg.transform = "tcii";
        row_cfg.order = 8;
        row_cfg.xi = "auto";
        row_cfg.npoints = {npoints};
        row_cfg.reference = "none";
        solves[keys[i]] = run_pipeline(row_cfg, npoints).spectrum;
    });

    auto lambda_half = [&](const GridRow& g, int npoints) {
        const auto& spectrum = solves.at({g.ell, g.alpha, npoints});
        const auto lambda = eigenvalue_for(g.n, g.ell, spectrum);
        if (!lambda)
            throw std::runtime_error("table1: eigenvalue n=" + std::to_string(g.n) +
                                     " ell=" + std::to_string(g.ell) +
                                     " not resolved at N=" + std::to_string(npoints));
        return 0.5 * *lambda;
    };

    return with_sink(cfg, out, [&](std::ostream& o) {
        const std::string c_small = "lambda_half_N" + std::to_string(n_small);
        const std::string c_large = "lambda_half_N" + std::to_string(n_large);
        if (cfg.format == "json") {
            json doc;
            doc["command"] = "table1";
            doc["rows"] = json::array();
            for (const auto& g : grid)
                doc["rows"].push_back(json{{"n", g.n},
                                           {"ell", g.ell},
                                           {"alpha", g.alpha},
                                           {c_small, lambda_half(g, n_small)},
                                           {c_large, lambda_half(g, n_large)}});
            o << doc.dump(2) << "\n";
            return;
        }
        if (cfg.format == "table") {
            char buf[160];
            std::snprintf(buf, sizeof(buf), "%3s %4s %7s %18s %18s\n", "n", "ell", "alpha",
                          c_small.c_str(), c_large.c_str());
            o << buf;
            for (const auto& g : grid) {
                std::snprintf(buf, sizeof(buf), "%3d %4d %7.3f %18s %18s\n", g.n, g.ell, g.alpha,
                              fixed13(lambda_half(g, n_small)).c_str(),
                              fixed13(lambda_half(g, n_large)).c_str());
                o << buf;
            }
            return;
        }
        o << "n,ell,alpha," << c_small << "," << c_large << "\n";
        for (const auto& g : grid) {
            char ab[16];
            std::snprintf(ab, sizeof(ab), "%.3f", g.alpha);
            o << g.n << "," << g.ell << "," << ab << "," << fixed13(lambda_half(g, n_small))
              << "," << fixed13(lambda_half(g, n_large)) << "\n";
        }
    });
}

int cmd_dump_stencil(int order, const std::string& table, std::ostream& out) {
    if (order < 2 || order > 12 || order % 2 != 0)
        throw std::invalid_argument("order must be even and in [2, 12]");
    const StencilSet s = make_stencil_set(order / 2);

    auto print_row = [&](const std::vector<double>& row) {
        char buf[40];
        for (size_t j = 0; j < row.size(); ++j) {
            std::snprintf(buf, sizeof(buf), "%.17g", row[j]);
            out << (j ? "," : "") << buf;
        }
        out << "\n";
    };
    if (table == "main-first") print_row(s.main_first);
    else if (table == "main-second") print_row(s.main_second);
    else if (table == "bdf") print_row(s.bdf);
    else if (table == "initial-first") for (const auto& r : s.initial_first) print_row(r);
    else if (table == "initial-second") for (const auto& r : s.initial_second) print_row(r);
    else if (table == "final-first") for (const auto& r : s.final_first) print_row(r);
    else if (table == "final-second") for (const auto& r : s.final_second) print_row(r);
    else
        throw std::invalid_argument(
            "unknown table \"" + table +
            "\" (expected main-first, main-second, initial-first, initial-second, final-first, "
            "final-second or bdf)");
    return 0;
}

int cmd_dump_matrix(const RunConfig& cfg, const std::string& out_prefix, std::ostream& out,
                    std::ostream& log) {
    validate_config(cfg);
    const int npoints = cfg.npoints.front();
    double xi_resolved = 0.0;
    TransformedProblem tp = make_transform(cfg, xi_resolved);
    const DiscreteEvp evp = assemble(tp, npoints, make_stencil_set(stencil_half_width(cfg)));

    if (out_prefix.empty()) {
        write_matrix(out, evp.a);
        if (evp.b) write_matrix(out, *evp.b);
        return 0;
    }
    const std::string a_path = out_prefix + "_A.txt";
    write_matrix_file(a_path, evp.a);
    log << "wrote " << a_path << "\n";
    if (evp.b) {
        const std::string b_path = out_prefix + "_B.txt";
        write_matrix_file(b_path, *evp.b);
        log << "wrote " << b_path << "\n";
    }
    return 0;
}

}  // namespace radschrod
