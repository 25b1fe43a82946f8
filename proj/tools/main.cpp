#include <iostream>

#include <CLI11.hpp>

#include "cli/commands.hpp"

using namespace charsub::cli;

int main(int argc, char** argv) {
  CLI::App app{"Characteristic and hyperinvariant subspaces of nilpotent operators over GF(2)"};
  app.require_subcommand(1);

  bool json = false;
  bool dot = false;
  std::uint64_t cap = charsub::kDefaultAutomorphismCap;
  std::size_t max_dim = 0;
  auto add_common = [&](CLI::App* sub, bool with_dot) {
    sub->add_flag("--json", json, "JSON output");
    if (with_dot) sub->add_flag("--dot", dot, "Graphviz DOT output");
    sub->add_option("--cap", cap, "Largest automorphism group to enumerate")->check(CLI::PositiveNumber);
    sub->add_option("--max-dim", max_dim, "Largest n for a subspace census")->check(CLI::Range(1, 8));
  };

  std::string matrix_file;
  std::string subspace_file;
  std::string which = "hinv";
  std::string suite = "paper";
  bool census = false;

  auto* analyze = app.add_subcommand("analyze", "Structure of a nilpotent operator");
  analyze->add_option("matrix", matrix_file, "Operator file")->required();
  analyze->add_flag("--census", census, "Include the exhaustive subspace census");
  add_common(analyze, false);

  auto* classify = app.add_subcommand("classify", "Classify a subspace");
  classify->add_option("matrix", matrix_file, "Operator file")->required();
  classify->add_option("subspace", subspace_file, "Subspace file")->required();
  add_common(classify, false);

  auto* counter = app.add_subcommand("counterexample", "Characteristic, non-hyperinvariant subspace");
  counter->add_option("matrix", matrix_file, "Operator file")->required();
  add_common(counter, false);

  auto* lattice = app.add_subcommand("lattice", "Lattice of subspaces as a Hasse diagram");
  lattice->add_option("matrix", matrix_file, "Operator file")->required();
  lattice->add_option("--which", which, "hinv, chinv or inv")
      ->check(CLI::IsMember({"hinv", "chinv", "inv"}));
  add_common(lattice, true);

  auto* verify = app.add_subcommand("verify", "Run a self-check suite");
  verify->add_option("--suite", suite, "paper, census or oracle")
      ->check(CLI::IsMember({"paper", "census", "oracle"}));
  verify->add_option("--max-dim", max_dim, "Largest n covered by the suite")->check(CLI::Range(1, 12));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  if (json && dot) {
    std::cerr << "--json and --dot are exclusive\n";
    return kExitParse;
  }
  CommonFlags flags;
  flags.format = json ? Format::Json : dot ? Format::Dot : Format::Text;
  flags.cap = cap;
  flags.max_dim = max_dim == 0 ? charsub::kDefaultCensusMaxDim : max_dim;

  if (*analyze) return cmd_analyze(matrix_file, flags, census, std::cout, std::cerr);
  if (*classify) return cmd_classify(matrix_file, subspace_file, flags, std::cout, std::cerr);
  if (*counter) return cmd_counterexample(matrix_file, flags, std::cout, std::cerr);
  if (*lattice) return cmd_lattice(matrix_file, which, flags, std::cout, std::cerr);
  return cmd_verify(suite, max_dim, std::cout, std::cerr);
}
