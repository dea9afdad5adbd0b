#include <CLI11.hpp>

#include <iostream>

#include "daha_lab/commands.hpp"
#include "dahalab/parallel.hpp"

namespace {

using dahalab::cli::RunConfig;

void add_common(CLI::App* sub, RunConfig& cfg, std::string& flavor, std::string& output, std::vector<int>& lambda) {
  sub->add_option("--flavor", flavor, "gl or sl")->check(CLI::IsMember({"gl", "sl"}))->default_val("gl");
  sub->add_option("-N", cfg.N, "rank parameter N")->default_val(2);
  sub->add_option("-k", cfg.k, "level parameter k")->default_val(1);
  sub->add_option("--lambda", lambda, "dominant weight, comma separated")->delimiter(',');
  sub->add_option("--radius", cfg.radius, "ball radius");
  sub->add_option("--output", output, "json, csv or pretty")->check(CLI::IsMember({"json", "csv", "pretty"}))->default_val("pretty");
  sub->add_option("--seed", cfg.seed, "sampling seed")->default_val(0);
  sub->add_option("--threads", cfg.threads, "worker threads (0 = auto)")->default_val(0);
}

}  // namespace

int main(int argc, char** argv) {
  namespace cli = dahalab::cli;
  CLI::App app{"daha-lab: looped walks, periodic tableaux and DAHA modules"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string flavor = "gl", output = "pretty", suite, sabotage;
  std::vector<int> lambda;

  auto* walks = app.add_subcommand("walks", "enumerate looped walks");
  add_common(walks, cfg, flavor, output, lambda);

  auto* tableaux = app.add_subcommand("tableaux", "tableaux of walks, rectangles or a file");
  add_common(tableaux, cfg, flavor, output, lambda);
  tableaux->add_flag("--rect", cfg.rect, "standard tableaux of the k^N rectangle");
  tableaux->add_option("--input", cfg.input, "JSON file with tableaux");

  auto* periodic = app.add_subcommand("periodic", "periodic tableaux and classes");
  add_common(periodic, cfg, flavor, output, lambda);
  periodic->add_flag("--orbit", cfg.orbit, "pi-orbit of the first walk at lambda");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  add_common(verify, cfg, flavor, output, lambda);
  verify->add_option("suite", suite, "relations, support, main-theorem, twists, content-bounds, rmatrix")
      ->required()
      ->check(CLI::IsMember({"relations", "support", "main-theorem", "twists", "content-bounds", "rmatrix"}));
  verify->add_option("--sabotage", sabotage, "deliberately corrupt a coefficient")->check(CLI::IsMember({"b-coeff"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : cli::kUsage;
  }

  try {
    cfg.flavor = dahalab::parse_flavor(flavor);
    cfg.output = dahalab::io::parse_format(output);
    if (!lambda.empty()) cfg.lambda = lambda;
    cfg.sabotage = !sabotage.empty();
    if (cfg.threads > 0) dahalab::set_thread_count(cfg.threads);

    if (walks->parsed()) return cli::cmd_walks(cfg, std::cout, std::cerr);
    if (tableaux->parsed()) return cli::cmd_tableaux(cfg, std::cout, std::cerr);
    if (periodic->parsed()) return cli::cmd_periodic(cfg, std::cout, std::cerr);
    return cli::cmd_verify(cfg, suite, std::cout, std::cerr);
  } catch (const cli::UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kVerifyFailed;
  }
}
