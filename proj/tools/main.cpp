#include "run.hpp"

#include <CLI11.hpp>

int main(int argc, char** argv) {
  CLI::App app{"collared-tile approximants of tiling spaces and their cohomology towers"};
  app.require_subcommand(1);

  tilecoh::cli::RunConfig cfg;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--def", cfg.definition_path, "tiling definition file")
        ->required();
    cmd->add_option("-o,--out", cfg.out_path, "write the report to this file");
    cmd->add_flag("--pretty", cfg.pretty, "human readable text instead of JSON");
  };
  auto add_depth = [&](CLI::App* cmd) {
    cmd->add_option("-n,--depth", cfg.depth, "collar depth (default 4, cap 8)");
    cmd->add_flag("--unsafe-depth", cfg.unsafe_depth, "lift the depth cap of 8");
  };

  CLI::App* language = app.add_subcommand("language", "admissible windows of one shape");
  add_common(language);
  language->add_option("--width", cfg.width, "window width")->required();
  language->add_option("--height", cfg.height, "window height (2D only, default 1)");

  CLI::App* collar = app.add_subcommand("collar", "collared tile classes and adjacencies");
  add_common(collar);
  add_depth(collar);

  CLI::App* complex = app.add_subcommand("complex", "approximant cell complex at one depth");
  add_common(complex);
  add_depth(complex);
  complex->add_option("--dot", cfg.dot_path, "write the 1-skeleton as DOT ('-' for stdout)");

  CLI::App* cohomology = app.add_subcommand("cohomology", "per-level cohomology groups");
  add_common(cohomology);
  add_depth(cohomology);
  cohomology->add_flag("--include-k0", cfg.include_k0, "start the tower at depth 0");

  CLI::App* limit = app.add_subcommand("limit", "classify the cohomology tower");
  add_common(limit);
  add_depth(limit);
  limit->add_flag("--include-k0", cfg.include_k0, "start the tower at depth 0");
  limit->add_option("--stab-window", cfg.stab_window,
                    "consecutive levels required for stabilization (default 3)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  cfg.command = app.get_subcommands().front()->get_name();
  return tilecoh::cli::run(cfg);
}
