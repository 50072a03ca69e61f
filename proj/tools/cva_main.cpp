#include <iostream>

#include <CLI11.hpp>

#include "cva/commands.hpp"

using namespace cva;

int main(int argc, char** argv) {
    CLI::App app{"cva: exact verification suite for commuting-variety degenerations"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string pi_str;
    std::string orientation = "standard";
    std::string diag_convention = "pi";

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--n", cfg.n, "matrix size");
        sub->add_option("--seed", cfg.seed, "PRNG seed");
        sub->add_option("--trials", cfg.trials, "sampling trials (0 = command default)");
        sub->add_option("--format", cfg.format, "table | json | csv")
            ->check(CLI::IsMember({"table", "json", "csv"}));
        sub->add_option("--order", cfg.order, "grevlex | lex")
            ->check(CLI::IsMember({"grevlex", "lex"}));
        sub->add_option("--threads", cfg.threads, "worker pool size");
        sub->add_option("--cache-dir", cfg.cache_dir, "Groebner basis cache directory");
        sub->add_option("--budget-seconds", cfg.budget_seconds,
                        "wall-clock budget per Groebner computation");
        sub->add_option("--pi", pi_str, "restrict to one permutation (one-line, e.g. 231)");
        sub->add_option("--orientation", orientation, "standard | flipped")
            ->check(CLI::IsMember({"standard", "flipped"}));
        sub->add_option("--diag-convention", diag_convention,
                        "diag identity action convention: pi | pi-inverse")
            ->check(CLI::IsMember({"pi", "pi-inverse"}));
        sub->add_flag("--redact-timings", cfg.redact_timings,
                      "zero elapsedMs fields for byte-identical reports");
    };

    for (const char* name : {"degrees", "identities", "degenerate", "smooth", "tao", "strata",
                             "conjectures", "all"}) {
        add_common(app.add_subcommand(name));
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    cfg.command = app.get_subcommands().front()->get_name();
    cfg.orientation = orientation == "flipped" ? Orientation::Flipped : Orientation::Standard;
    cfg.diag_inverse = diag_convention == "pi-inverse";
    if (!pi_str.empty()) {
        try {
            cfg.pi = Permutation::parse(pi_str);
        } catch (const std::exception& e) {
            std::cerr << "error: bad --pi: " << e.what() << "\n";
            return 2;
        }
    }

    try {
        Session session(cfg);
        Report rep = session.run();
        std::cout << rep.render();
        return rep.failures() ? 1 : 0;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
