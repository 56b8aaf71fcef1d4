// Command-line front end: every statistic and table as a subcommand with
// machine-readable output.  Exit codes: 0 ok, 1 check failure, 2 usage error.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "glnq/commands.hpp"
#include "glnq/fqpoly.hpp"
#include "glnq/verify.hpp"

namespace {

using glnq::cli::Format;
using glnq::cli::RunConfig;

int emit(const glnq::cli::Report& rep, const RunConfig& cfg) {
    if (cfg.out_path.empty()) {
        glnq::cli::render(rep, cfg.format, std::cout);
        return 0;
    }
    std::ofstream os(cfg.out_path, std::ios::binary);
    if (!os) {
        std::cerr << "glnq: cannot open " << cfg.out_path << '\n';
        return 2;
    }
    glnq::cli::render(rep, cfg.format, os);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact character combinatorics for GL_n(F_q)"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string format = "pretty";
    double density_tol = -1.0;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "csv | json | pretty")
            ->check(CLI::IsMember({"csv", "json", "pretty"}));
        sub->add_option("--out", cfg.out_path, "write the report to a file");
        sub->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::Range(1u, 256u));
        sub->add_option("--budget", cfg.budget, "enumeration item budget");
    };

    CLI::App* sn = app.add_subcommand("sn-stats",
                                      "partition statistics: p(n), v_ell(f_lambda) "
                                      "histograms, chiral counts");
    sn->add_option("--n", cfg.n, "first n");
    sn->add_option("--n-max", cfg.n_max, "last n");
    sn->add_option("--ell", cfg.ell, "prime ell")->check(CLI::PositiveNumber);
    sn->add_option("--r", cfg.r, "threshold offset r in v < r + log_ell n");
    add_common(sn);

    CLI::App* gln = app.add_subcommand("gln-stats",
                                       "Green label statistics: |X_n|, |Y_n|, degree "
                                       "valuations, divisibility proportions");
    gln->add_option("--q", cfg.q, "first odd prime power");
    gln->add_option("--q-max", cfg.q_max, "last q");
    gln->add_option("--n", cfg.n, "first n");
    gln->add_option("--n-max", cfg.n_max, "last n");
    gln->add_option("--k", cfg.k, "falling-factorial length for the proportion column");
    gln->add_option("--n0", cfg.n0, "embedded rank for the divisibility census");
    gln->add_option("--r", cfg.r, "2-power exponent for the divisibility census");
    add_common(gln);

    CLI::App* table = app.add_subcommand("gl2-table",
                                         "per-family w2/w4 verdicts for self-dual "
                                         "GL_2(F_q) representations");
    table->add_option("--q", cfg.q, "first odd prime power");
    table->add_option("--q-max", cfg.q_max, "last q");
    add_common(table);

    CLI::App* density = app.add_subcommand("gl2-density",
                                           "w2 = 0 densities over odd prime powers");
    density->add_option("--X", cfg.X, "upper bound for q")->check(CLI::PositiveNumber);
    add_common(density);

    CLI::App* verify = app.add_subcommand("verify", "run the acceptance suite");
    verify->add_option("--X", cfg.X, "density bound used by the acceptance run");
    verify->add_option("--density-tol", density_tol,
                       "override every density tolerance (testing hook)");
    add_common(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (format == "csv") cfg.format = Format::csv;
    else if (format == "json") cfg.format = Format::json;
    else cfg.format = Format::pretty;
    if (density_tol >= 0.0) cfg.density_tol = density_tol;

    try {
        if (sn->parsed()) {
            cfg.command = "sn-stats";
            return emit(glnq::cli::cmd_sn_stats(cfg), cfg);
        }
        if (gln->parsed()) {
            cfg.command = "gln-stats";
            if (!cfg.q_max) (void)glnq::FieldFq::from_q(cfg.q); // usage check
            return emit(glnq::cli::cmd_gln_stats(cfg), cfg);
        }
        if (table->parsed()) {
            cfg.command = "gl2-table";
            if (!cfg.q_max) (void)glnq::FieldFq::from_q(cfg.q);
            return emit(glnq::cli::cmd_gl2_table(cfg), cfg);
        }
        if (density->parsed()) {
            cfg.command = "gl2-density";
            return emit(glnq::cli::cmd_gl2_density(cfg), cfg);
        }
        if (verify->parsed()) {
            cfg.command = "verify";
            int failures = glnq::cli::cmd_verify(cfg, std::cout);
            return failures == 0 ? 0 : 1;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "glnq: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "glnq: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
