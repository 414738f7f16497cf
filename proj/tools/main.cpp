#include <iostream>

#include "CLI11.hpp"
#include "cli_run.hpp"

int main(int argc, char** argv) {
  canon::cli::RunConfig cfg;
  CLI::App app{"exact-arithmetic toolkit for canonical colorings of integer sums"};
  app.require_subcommand(1);

  const auto add_format = [&cfg](CLI::App* cmd) {
    cmd->add_option("--format", cfg.format, "output format: records|human")->capture_default_str();
  };
  const auto add_coloring = [&cfg](CLI::App* cmd, bool required) {
    auto* opt = cmd->add_option(
        "--coloring", cfg.coloring,
        "interval:B | valuation:K | valres:P | sqrt2mod5 | product:A+B | table:PATH");
    if (required) opt->required();
  };

  auto* color = app.add_subcommand("color", "evaluate a coloring on integers");
  add_coloring(color, true);
  color->add_option("--values", cfg.values, "integers to color (comma list or @file)")->required();
  add_format(color);

  auto* classify = app.add_subcommand("classify", "canonical-pattern verdict for a colored prefix");
  add_coloring(classify, true);
  classify->add_option("--ground", cfg.ground, "ground set (comma list or @file)")->required();
  classify
      ->add_option("--profile", cfg.profile,
                   "taylor | sums-with-x | alt-with-x | altodd-with-x | sums | alt | altodd")
      ->required();
  classify->add_option("--k", cfg.k, "form arity (ignored by taylor)");
  classify->add_option("--n", cfg.n, "prefix length to classify")->required();
  add_format(classify);

  auto* thin = app.add_subcommand("thin", "run a thinning procedure on a ground set");
  thin->add_option("--ground", cfg.ground, "ground set (comma list or @file)")->required();
  thin->add_option("--algorithm", cfg.algorithm, "interval | residue | star | split")->required();
  thin->add_option("--base", cfg.base, "interval: coloring base");
  thin->add_option("--k", cfg.k, "residue: modulus");
  thin->add_option("--prime", cfg.prime, "star/split: odd prime p");
  thin->add_option("--m", cfg.m, "star/split: target length");
  add_format(thin);

  auto* rado = app.add_subcommand("rado", "columns property, regularity, solution searches");
  rado->add_option("--matrix", cfg.matrix, "matrix file: first line 'N M', then N rows");
  rado->add_option("--coeffs", cfg.coeffs, "single-equation coefficients (comma list)");
  add_coloring(rado, false);
  rado->add_option("--solution", cfg.solution, "candidate solution to classify (comma list)");
  rado->add_option("--want", cfg.want, "search verdict filter: mono | rainbow | blocks | none");
  rado->add_option("--bound", cfg.search_bound, "search box [1..N]");
  add_format(rado);

  auto* encode = app.add_subcommand("encode", "block-family codes and alternating-sum identity");
  encode->add_option("--blocks", cfg.blocks, "block family file: one line per block")->required();
  encode->add_option("--J", cfg.j, "index set (comma list or @file)");
  encode->add_option("--parity", cfg.parity, "even | odd");
  encode->add_flag("--verify", cfg.verify, "check the alternating-sum identity on J");
  add_format(encode);

  auto* oracle = app.add_subcommand("oracle", "enumerate canonical colorings; search for witnesses");
  oracle->add_option("--n", cfg.n, "base set [1..n]")->required();
  oracle->add_option("--k", cfg.k, "subset size")->required();
  oracle->add_option("--cap", cfg.cap, "stop after this many tables (0 = all)");
  oracle->add_option("--er-m", cfg.m, "run the witness search at this m on every table");
  add_format(oracle);

  auto* witness = app.add_subcommand("witness", "exclusion report with re-verified witnesses");
  add_coloring(witness, true);
  witness->add_option("--ground", cfg.ground, "ground set (comma list or @file)")->required();
  witness
      ->add_option("--profile", cfg.profile,
                   "taylor | sums-with-x | alt-with-x | altodd-with-x | sums | alt | altodd")
      ->required();
  witness->add_option("--k", cfg.k, "form arity (ignored by taylor)");
  witness->add_option("--n", cfg.n, "prefix length to classify")->required();
  add_format(witness);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  cfg.command = app.get_subcommands().front()->get_name();
  return canon::cli::run(cfg, std::cout, std::cerr);
}
