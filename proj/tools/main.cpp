#include <CLI11.hpp>
#include <iostream>

#include "commands.hpp"
#include "pcz/types.hpp"

int main(int argc, char** argv) {
  CLI::App app{"pcz — numerics for piecewise-continuous functions with unit-interval pieces:\n"
               "sequence extensions, recurrence/continuity diagnostics, convolution and heat\n"
               "transforms, and DEPCA solvers"};
  app.require_subcommand(1);

  pcz::tools::GlobalConfig cfg;
  app.add_option("--out-dir", cfg.out_dir, "directory for default artifact paths")
      ->capture_default_str();
  app.add_option("--precision", cfg.precision, "significant digits in CSV output")
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed for stochastic fixtures")->capture_default_str();

  pcz::tools::register_extend(app, cfg);
  pcz::tools::register_diagnose(app, cfg);
  pcz::tools::register_conv(app, cfg);
  pcz::tools::register_heat(app, cfg);
  pcz::tools::register_depca(app, cfg);
  pcz::tools::register_demo(app, cfg);

  // global flags remain usable after the subcommand name
  for (CLI::App* sub : app.get_subcommands([](CLI::App*) { return true; })) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help() << std::flush;
    return 2;
  } catch (const pcz::NumericalContractError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
