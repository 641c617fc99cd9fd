#include <CLI11.hpp>

#include <cstring>
#include <exception>
#include <iostream>
#include <string>

#include "radschrod/commands.hpp"

namespace {

// bind the shared flags of the eigenvalue commands to a RunConfig
void add_common_options(CLI::App* app, radschrod::RunConfig& cfg) {
    app->add_option("--potential", cfg.potential, "hydrogen | hulthen | yukawa");
    app->add_option("--alpha", cfg.alpha, "screening parameter (hulthen/yukawa)");
    app->add_option("--ell", cfg.ell, "angular momentum quantum number");
    app->add_option("--transform", cfg.transform, "tds | tcii | atcii");
    app->add_option("--order", cfg.order, "scheme order p = 2k (even, 2..12; 2..8 typical)");
    app->add_option("--npoints", cfg.npoints, "interior mesh points N (repeatable for sweeps)");
    app->add_option("--xi", cfg.xi, "compression scale for tcii: \"auto\" or a decimal");
    app->add_option("--imag-tol", cfg.imag_tol, "relative imaginary-part tolerance of the filter");
    app->add_option("--reference", cfg.reference, "exact | highn | none");
    app->add_option("--nref", cfg.nref, "mesh size of the high-N reference");
    app->add_option("--order-ref", cfg.order_ref, "scheme order of the high-N reference");
    app->add_option("--format", cfg.format, "csv | json | table");
    app->add_option("--out", cfg.out, "output file (default stdout)");
    app->add_option("--nq", cfg.nq, "target radial quantum number n (default ell+1)");
    app->add_option("--min-lambda", cfg.min_lambda, "discard eigenvalues below this guard");
    app->add_option("--config", "flat key=value config file (flags override it)")
        ->check(CLI::ExistingFile);
}

// --config is applied before flag parsing so explicit flags win
void preload_config(int argc, char** argv, radschrod::RunConfig& cfg) {
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--config") == 0 && i + 1 < argc) {
            cfg = radschrod::load_config_file(argv[i + 1]);
            return;
        }
        if (std::strncmp(argv[i], "--config=", 9) == 0) {
            cfg = radschrod::load_config_file(argv[i] + 9);
            return;
        }
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bound-state eigenvalues of the radial Schrodinger equation on (0,inf),\n"
                 "computed by compactifying to (0,1) and discretizing with high-order\n"
                 "finite-difference matrix methods."};
    app.require_subcommand(1);

    radschrod::RunConfig cfg;
    try {
        preload_config(argc, argv, cfg);
    } catch (const std::exception& e) {
        std::cerr << "radschrod: " << e.what() << "\n";
        return 1;
    }

    auto* solve = app.add_subcommand("solve", "filtered bound-state spectrum for one mesh size");
    add_common_options(solve, cfg);

    auto* converge =
        app.add_subcommand("converge", "error sweep over a list of mesh sizes with a fitted order");
    add_common_options(converge, cfg);

    auto* table1 = app.add_subcommand(
        "table1", "screened-Coulomb benchmark grid: lambda/2 at N=200 and N=1500, order 8");
    add_common_options(table1, cfg);

    auto* dump_stencil = app.add_subcommand("dump-stencil", "stencil coefficient table as CSV");
    int stencil_order = 4;
    std::string stencil_table = "main-second";
    dump_stencil->add_option("--order", stencil_order, "scheme order p = 2k");
    dump_stencil->add_option("--table", stencil_table,
                             "main-first | main-second | initial-first | initial-second | "
                             "final-first | final-second | bdf");

    auto* dump_matrix =
        app.add_subcommand("dump-matrix", "assembled matrix (and pencil mass) as plain text");
    add_common_options(dump_matrix, cfg);
    std::string dump_prefix;
    dump_matrix->add_option("--out-prefix", dump_prefix,
                            "write <prefix>_A.txt and <prefix>_B.txt instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) return radschrod::cmd_solve(cfg, std::cout, std::cerr);
        if (converge->parsed()) return radschrod::cmd_converge(cfg, std::cout, std::cerr);
        if (table1->parsed()) return radschrod::cmd_table1(cfg, std::cout, std::cerr);
        if (dump_stencil->parsed())
            return radschrod::cmd_dump_stencil(stencil_order, stencil_table, std::cout);
        if (dump_matrix->parsed())
            return radschrod::cmd_dump_matrix(cfg, dump_prefix, std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "radschrod: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
