#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "entrolab/cli_runner.hpp"
#include "entrolab/version.hpp"

namespace {

using entrolab::Report;

void write_outputs(const Report& r, const std::string& report_path,
                   const std::string& csv_path) {
  std::string doc = entrolab::emit_report(r);
  if (report_path.empty()) {
    std::cout << doc;
  } else {
    std::ofstream f(report_path, std::ios::binary);
    if (!f) throw entrolab::Error("cannot write '" + report_path + "'");
    f << doc;
  }
  if (!csv_path.empty()) {
    std::ofstream f(csv_path, std::ios::binary);
    if (!f) throw entrolab::Error("cannot write '" + csv_path + "'");
    f << entrolab::report_to_csv(r);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum entropy certification toolkit"};
  app.set_version_flag("--version", entrolab::kToolVersion);
  app.require_subcommand(1);

  std::string report_path, csv_path;
  app.add_option("--report", report_path, "write the report to this file");
  app.add_option("--csv", csv_path, "also write a flat CSV export");

  entrolab::VerifyOptions vopt;
  auto* verify = app.add_subcommand("verify-inequalities",
                                    "certify the inequality and sign claims");
  verify->add_option("--x-points", vopt.x_points, "grid resolution over [0,1]");
  verify->add_option("--slack", vopt.slack, "absolute slack for <= margins");
  verify->add_option("--only", vopt.only, "restrict to these claim ids");
  verify->add_option("--threads", vopt.threads,
                     "parallelism degree (default: ENTROLAB_THREADS or cores)");

  entrolab::BuildOptions bopt;
  auto* build = app.add_subcommand("build", "build a reduction instance file");
  build->add_option("--family", bopt.family, "tsallis | renyi")->required();
  build->add_option("--order", bopt.order, "entropy order (0, 1, inf or real)")
      ->required();
  build->add_option("--n", bopt.n, "output length")->required();
  build->add_option("--accept-prob", bopt.accept_prob,
                    "represented acceptance probability")
      ->required();
  build->add_option("--out", bopt.out_path, "instance file to write")->required();

  entrolab::RunOptions ropt;
  auto* run = app.add_subcommand("run", "verify an instance file by simulation");
  run->add_option("--instance", ropt.instance_path, "instance file")->required();

  entrolab::SwapTestOptions sopt;
  auto* swap = app.add_subcommand("swap-test", "sampling estimators");
  swap->add_option("--state0", sopt.state0_path, "circuit file preparing rho0");
  swap->add_option("--state1", sopt.state1_path,
                   "circuit file preparing rho1 (defaults to rho0)");
  swap->add_option("--order0-instance", sopt.order0_instance_path,
                   "run the order-0 rank detector on this instance file");
  swap->add_option("--shots", sopt.shots, "shot count");
  swap->add_option("--seed", sopt.seed, "rng seed");

  entrolab::QStarOptions qopt;
  auto* qstar = app.add_subcommand("scan-qstar",
                                   "exploratory normalized-entropy transition scan");
  qstar->add_option("--x-points", qopt.x_points, "number of x samples in (0, 1/2)");

  for (CLI::App* sub : {verify, build, run, swap, qstar}) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    Report rep;
    int status = 1;
    if (*verify) status = entrolab::run_verify_inequalities(vopt, rep);
    if (*build) status = entrolab::run_build(bopt, rep);
    if (*run) status = entrolab::run_instance_file(ropt, rep);
    if (*swap) status = entrolab::run_swap_test(sopt, rep);
    if (*qstar) status = entrolab::run_scan_qstar(qopt, rep);
    write_outputs(rep, report_path, csv_path);
    return status;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
