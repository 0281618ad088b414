#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Noether current analysis for fixed-region variational problems"};
  app.require_subcommand(1);

  noether::cli::Options opts;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("spec", opts.spec_path, "spec JSON file")->required();
    cmd->add_option("--out", opts.out_path, "report output path (default: stdout)");
  };

  CLI::App* analyze = app.add_subcommand(
      "analyze", "derive currents, classify the generator, improve the current");
  add_common(analyze);

  CLI::App* verify = app.add_subcommand(
      "verify", "integrate the equations of motion and check conservation");
  add_common(verify);
  verify->add_option("--t0", opts.t0, "override region start");
  verify->add_option("--t1", opts.t1, "override region end");
  verify->add_option("--dt", opts.dt, "override integrator step");
  verify->add_option("--tol", opts.tol, "override conservation tolerance");
  verify->add_option("--seed", opts.seed, "seed for sampled sub-regions");
  verify->add_option("--csv", opts.csv_path, "write the trajectory as CSV");

  CLI::App* homotopy = app.add_subcommand(
      "homotopy", "construct a divergence potential for an EL-trivial Lagrangian");
  add_common(homotopy);

  CLI::App* gauge = app.add_subcommand(
      "gauge", "minimally couple a gauge potential to the global quasi-symmetry");
  add_common(gauge);

  CLI11_PARSE(app, argc, argv);

  if (analyze->parsed()) return noether::cli::run_analyze(opts);
  if (verify->parsed()) return noether::cli::run_verify(opts);
  if (homotopy->parsed()) return noether::cli::run_homotopy(opts);
  if (gauge->parsed()) return noether::cli::run_gauge(opts);
  return 1;
}
