#include <CLI11.hpp>

#include <iostream>
#include <map>

#include "commands.hpp"
#include "rumin/errors.hpp"

using namespace rumin::cli;

int main(int argc, char** argv) {
    CLI::App app{"Rumin complex toolkit for stratified Lie algebras"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    Args args;
    std::map<std::string, Format> formats{
        {"text", Format::text}, {"table", Format::text}, {"latex", Format::latex}, {"json", Format::json}};
    app.add_option("--group", cfg.group, "builtin:cartan | free:m,k | path to a group JSON file");
    app.add_option("--format", cfg.format, "text (or table) | latex | json")
        ->transform(CLI::CheckedTransformer(formats))
        ->option_text("FORMAT");
    app.add_flag("--paper-basis", cfg.paper_basis, "express matrices in the reference Cartan bases");
    app.add_option("--max-dim", cfg.max_dim, "largest accepted group dimension");
    app.add_option("--seed", cfg.seed, "seed for the randomized oracle test");
    app.add_option("--golden", cfg.golden, "golden matrix file used by verify");
    app.add_flag("--update-golden", cfg.update_golden, "rewrite the golden file before comparing");

    auto* build = app.add_subcommand("build", "build the complex and print dimensions");
    auto* dc = app.add_subcommand("dc", "print d_c on E_0^h");
    auto* deltac = app.add_subcommand("deltac", "print delta_c on E_0^h");
    auto* lap = app.add_subcommand("laplacian", "print a Laplacian with its order");
    auto* pie = app.add_subcommand("pi-e", "print Pi_E of the basis forms of E_0^h");
    auto* exps = app.add_subcommand("exponents", "exponent bookkeeping tables");
    auto* tens = app.add_subcommand("tensors", "divergence tensor findings");
    auto* ver = app.add_subcommand("verify", "run the verification suite");

    for (auto* sc : {dc, deltac, lap, pie}) sc->add_option("--degree", args.degree, "form degree h")->required();
    lap->add_option("--family", args.family, "A | R | G")->required();
    pie->add_option("--index", args.index, "1-based basis index");
    exps->add_option("--theorem", args.theorem, "H2 | C2 | H2cor | H2sum (default: all)");
    tens->add_option("--convention", args.convention, "CvS | pierre");
    ver->add_option("--oracle-pairs", args.oracle_pairs, "number of randomized oracle pairs");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*build) return cmd_build(cfg, std::cout);
        if (*dc) return cmd_dc(cfg, args, std::cout);
        if (*deltac) return cmd_deltac(cfg, args, std::cout);
        if (*lap) return cmd_laplacian(cfg, args, std::cout);
        if (*pie) return cmd_pi_e(cfg, args, std::cout);
        if (*exps) return cmd_exponents(cfg, args, std::cout);
        if (*tens) return cmd_tensors(cfg, args, std::cout);
        if (*ver) return cmd_verify(cfg, args, std::cout);
    } catch (const rumin::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
