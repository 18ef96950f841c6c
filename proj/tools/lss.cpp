#include <CLI11.hpp>

#include "lss_cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Lovasz-Saks-Schrijver ideals: combinatorial Groebner bases, primary "
                 "decomposition and verification (d = 2)"};
    app.require_subcommand(1);

    lss::cli::RunConfig cfg;

    auto add_common = [&](CLI::App* cmd, bool needs_graph) {
        if (needs_graph)
            cmd->add_option("--graph", cfg.graph_source,
                            "preset (cycle:<n>, complete:<n>, complete_bipartite:<m>,<k>, "
                            "path:<n>, butterfly, fig3), JSON file path, or inline JSON")
                ->required();
        cmd->add_option("--field", cfg.field, "coefficient field: Q, F<p> or Fp:<p>")
            ->capture_default_str();
        cmd->add_option("--format", cfg.format, "output format: text or json")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
        cmd->add_option("--budget", cfg.budget,
                        "oracle basis-size cap (pairs cap = 100x); overrides LSS_BUDGET");
    };

    CLI::App* gb = app.add_subcommand("gb", "combinatorial Groebner basis of the permanental "
                                            "ideal, certified against the Buchberger oracle");
    add_common(gb, true);
    gb->add_option("--order", cfg.order, "monomial order (default or a full x1>..>y<n> list)");
    gb->add_flag("!--no-prune", cfg.prune, "emit the unpruned element set");

    CLI::App* decompose =
        app.add_subcommand("decompose", "minimal primes and classification of L_G");
    add_common(decompose, true);
    decompose->add_flag("--verify", cfg.run_verify,
                        "oracle-check the decomposition (n <= 4 unless --allow-large)");
    decompose->add_flag("--allow-large", cfg.allow_large, "lift the n <= 4 guard on --verify");

    CLI::App* invariants =
        app.add_subcommand("invariants", "summary verdicts (dim, unmixed, prime, radical)");
    add_common(invariants, true);

    CLI::App* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("--suite", cfg.suite, "gb, decomp, ikn, char2, variety or all")
        ->check(CLI::IsMember({"gb", "decomp", "ikn", "char2", "variety", "all"}))
        ->capture_default_str();
    verify->add_option("--n-max", cfg.n_max, "override sweep sizes (0 = per-criterion defaults)");
    verify->add_option("--seeds", cfg.seeds, "seeds per variety sample")->capture_default_str();
    verify->add_option("--jobs", cfg.jobs, "criteria evaluated concurrently")
        ->capture_default_str();
    verify->add_option("--format", cfg.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    verify->add_option("--budget", cfg.budget,
                       "oracle basis-size cap (pairs cap = 100x); overrides LSS_BUDGET");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : lss::cli::kInputError;
    }

    if (gb->parsed()) cfg.command = "gb";
    if (decompose->parsed()) cfg.command = "decompose";
    if (invariants->parsed()) cfg.command = "invariants";
    if (verify->parsed()) cfg.command = "verify";

    return lss::cli::run_command(cfg, std::cout, std::cerr);
}
