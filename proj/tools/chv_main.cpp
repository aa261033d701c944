#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "chv/errors.hpp"
#include "chv/run.hpp"

namespace {

void add_common_options(CLI::App* sub, chv::RunConfig& cfg) {
    sub->add_option("--delta", cfg.delta,
                    "homogeneity exponent of the candidate (in [0, 1))")
        ->capture_default_str();
    sub->add_option("--c", cfg.c, "additive constant of u = c + w")
        ->capture_default_str();
    sub->add_option("--samples", cfg.samples,
                    "Monte Carlo sample count (search: restart count)")
        ->capture_default_str();
    sub->add_option("--seed", cfg.seed, "base seed for all substreams")
        ->envname("CHV_SEED")
        ->capture_default_str();
    sub->add_option("--r-min", cfg.r_min,
                    "inner radius of the sampling annulus")
        ->capture_default_str();
    sub->add_option("--grid-step", cfg.grid_step,
                    "parameter step for grid checks")
        ->capture_default_str();
    sub->add_option("--threads", cfg.threads,
                    "worker threads (0 = hardware); results do not depend "
                    "on this")
        ->capture_default_str();
    sub->add_option("--output", cfg.output,
                    "write the report to this file instead of stdout");
    sub->add_option("--format", cfg.format, "report format: json or csv")
        ->capture_default_str();
}

int emit_and_status(const chv::RunConfig& cfg,
                    const std::vector<chv::CheckReport>& reports) {
    const std::string text = cfg.format == "csv"
                                 ? chv::emit_report_csv(reports)
                                 : chv::emit_report_json(reports, cfg);
    chv::write_output(cfg, text);
    for (const chv::CheckReport& r : reports)
        if (!r.pass) return 1;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    chv::RunConfig cfg;
    std::string verify_target;
    std::string dump_target;

    CLI::App app{
        "Numerical verifier for the Cartan-cubic singular candidate of the "
        "conformal Hessian equation"};
    app.require_subcommand(1);

    CLI::App* verify = app.add_subcommand(
        "verify", "run one named check or the whole suite ('all')");
    verify->add_option("check", verify_target, "check name or 'all'")
        ->required();
    add_common_options(verify, cfg);

    CLI::App* counter = app.add_subcommand(
        "counterexample-delta0",
        "evaluate the fixed counterexample at delta = 0");
    add_common_options(counter, cfg);

    CLI::App* search = app.add_subcommand(
        "search", "adversarial search for the worst eigenvalue ratio");
    add_common_options(search, cfg);

    CLI::App* dump = app.add_subcommand(
        "dump", "per-sample statistics of one check as CSV");
    dump->add_option("check", dump_target, "dumpable check name")->required();
    add_common_options(dump, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (verify->parsed()) {
            cfg.checks = {verify_target};
            const std::string problem = chv::usage_problems(cfg);
            if (!problem.empty()) {
                std::cerr << "chv: " << problem << "\n";
                return 2;
            }
            return emit_and_status(cfg, chv::run(cfg));
        }

        if (counter->parsed()) {
            cfg.checks = {"counterexample-delta0"};
            const std::string problem = chv::validate(cfg);
            if (!problem.empty()) {
                std::cerr << "chv: " << problem << "\n";
                return 2;
            }
            return emit_and_status(cfg, {chv::counterexample_delta0(cfg)});
        }

        if (search->parsed()) {
            cfg.checks = {"search"};
            const std::string problem = chv::usage_problems(cfg);
            if (!problem.empty()) {
                std::cerr << "chv: " << problem << "\n";
                return 2;
            }
            return emit_and_status(cfg, chv::run(cfg));
        }

        if (dump->parsed()) {
            cfg.checks = {dump_target};
            std::string problem = chv::usage_problems(cfg);
            const chv::CheckDef* def = chv::find_check(dump_target);
            if (problem.empty() && (!def || !def->dumpable))
                problem = "check '" + dump_target +
                          "' does not support per-sample dumps";
            if (!problem.empty()) {
                std::cerr << "chv: " << problem << "\n";
                return 2;
            }
            std::ostringstream os;
            chv::dump_samples(cfg, os);
            chv::write_output(cfg, os.str());
            return 0;
        }
    } catch (const chv::Error& e) {
        std::cerr << "chv: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
