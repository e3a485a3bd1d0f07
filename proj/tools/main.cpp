#include <CLI11.hpp>
#include <iostream>

#include "cli/commands.hpp"

int main(int argc, char** argv) {
  using namespace busekit::cli;
  CLI::App app{"Busemann space toolkit: bicombings, parallel lines, line spaces and isometries"};
  app.require_subcommand(1);

  Options opt;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  double tol = 0.0;
  const auto common = [&](CLI::App* cmd) {
    cmd->add_option("--scene", opt.scene, "Scene JSON file")->required();
    cmd->add_option("--out", opt.out, "Write the report here instead of stdout");
    cmd->add_option("--format", opt.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--seed", seed, "Sampling seed (falls back to the scene, then BUSEMANN_KIT_SEED)");
    cmd->add_option("--samples", samples, "Sample count per check");
    cmd->add_option("--tol", tol, "Check tolerance");
  };
  CLI::App* verify = app.add_subcommand("verify", "Certify the model space and its line space");
  CLI::App* decompose = app.add_subcommand("decompose", "Split points of X_omega into (line, t)");
  CLI::App* classify = app.add_subcommand("classify", "Classify the scene's isometries");
  CLI::App* induced = app.add_subcommand("induced", "Compare each isometry with its induced map on lines");
  for (CLI::App* cmd : {verify, decompose, classify, induced}) common(cmd);
  decompose->add_option("--points", opt.points, "JSON file with an array of points");
  decompose->add_option("--random", opt.random_points, "Also decompose this many random points of X_omega");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : parse_failure;
  }
  for (CLI::App* cmd : {verify, decompose, classify, induced}) {
    if (cmd->count("--seed")) opt.seed = seed;
    if (cmd->count("--samples")) opt.samples = samples;
    if (cmd->count("--tol")) opt.tol = tol;
  }
  if (*verify) return cmd_verify(opt, std::cout, std::cerr);
  if (*decompose) return cmd_decompose(opt, std::cout, std::cerr);
  if (*classify) return cmd_classify(opt, std::cout, std::cerr);
  return cmd_induced(opt, std::cout, std::cerr);
}
