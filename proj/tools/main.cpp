// invalg: symbolic and concrete checks for invariant algebras and their
// derived products, plus module tools.

#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace invalg::cli;
  CLI::App app{"Exact verification workbench for invariant algebras"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  // --h is a parameter, so help is long-form only
  app.set_help_flag("--help", "Print this help message and exit");

  GlobalOptions g;
  std::uint64_t budget = 0;
  app.add_option("--seed", g.seed, "Seed for random mode");
  auto* budget_opt = app.add_option("--budget", budget, "Exhaustive assignment cap, random sample count or enumeration cap");
  app.add_option("--report", g.report, "Write a JSON report to this path");
  app.add_option("--field", g.field, "Override the field: Q or Fp:<p>");
  app.add_flag("--timings", g.timings, "Include elapsed times in the JSON report");

  ProveOptions prove;
  auto* prove_cmd = app.add_subcommand("prove", "Symbolic proofs in the free invariant algebra");
  prove_cmd->add_flag("--all", prove.all, "Every catalog identity");
  prove_cmd->add_option("--family", prove.families, "Product family: huliu, square, jordan, angle, prelie, lsa");
  prove_cmd->add_option("--identity", prove.identities,
                        "Identity kind (assoc, jacobi, ...), full name (assoc:huliu:3) or 'accompanying'");
  prove_cmd->add_option("--k", prove.k, "Polynomial value for k (default: symbolic)");
  prove_cmd->add_option("--h", prove.h, "Polynomial value for h (default: symbolic)");

  AlgebraOptions alg;
  auto* alg_cmd = app.add_subcommand("algebra", "Concrete invariant algebra from a file");
  alg_cmd->add_option("--file", alg.file, "Algebra file")->required();
  alg_cmd->add_flag("--extract", alg.extract, "Print the invariant subalgebra");
  alg_cmd->add_flag("--annihilator", alg.annihilator, "Annihilator with ideal and inclusion checks");
  alg_cmd->add_flag("--embedding", alg.embedding, "Verify the left-regular embedding");
  alg_cmd->add_option("--check", alg.checks, "Identity to check concretely (repeatable)");
  alg_cmd->add_option("--k", alg.k, "'all' or comma separated values");
  alg_cmd->add_option("--h", alg.h, "'all' or comma separated values");
  alg_cmd->add_option("--mode", alg.mode, "exhaustive or random");
  alg_cmd->add_option("--write", alg.write, "Write the algebra in canonical form");

  ModuleOptions mod;
  auto* mod_cmd = app.add_subcommand("module", "Module tools");
  mod_cmd->add_option("--file", mod.file, "Module file")->required();
  mod_cmd->add_flag("--verify", mod.verify, "Check the module axioms");
  mod_cmd->add_flag("--classify", mod.classify, "Enumerate submodules and classify irreducibility");
  mod_cmd->add_flag("--restrict", mod.restrict, "Restrict to W");
  mod_cmd->add_option("--quotient", mod.quotient, "Quotient by W, 0, V or a subspace file");
  mod_cmd->add_option("--hom", mod.hom, "Map file for homomorphism tools");
  mod_cmd->add_option("--target", mod.target, "Target module file for --hom (default: the module itself)");
  mod_cmd->add_option("--write", mod.write, "Write the resulting module in canonical form");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitInputError;
  }
  if (budget_opt->count() > 0) g.budget = budget;

  try {
    if (*prove_cmd) return run_prove(g, prove, std::cout);
    if (*alg_cmd) return run_algebra(g, alg, std::cout);
    if (*mod_cmd) return run_module(g, mod, std::cout);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kExitInputError;
}
