#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "entrolab/report.hpp"

namespace entrolab {

// Subcommand implementations shared by the binary and the tests. Each
// returns the process exit status (0 iff everything it executed passed)
// and fills `out`; reports are written even on failure.

struct VerifyOptions {
  int x_points = 1001;
  double slack = 1e-9;
  std::vector<std::string> only;
  int threads = 0;  // 0: resolve from ENTROLAB_THREADS, then hardware
};

int run_verify_inequalities(const VerifyOptions& opt, Report& out);

struct BuildOptions {
  std::string family;   // "tsallis" | "renyi"
  std::string order;    // "0" | "1" | "inf" | real
  int n = 2;
  double accept_prob = 1.0;
  std::string out_path;
};

int run_build(const BuildOptions& opt, Report& out);

struct RunOptions {
  std::string instance_path;
};

int run_instance_file(const RunOptions& opt, Report& out);

struct SwapTestOptions {
  std::string state0_path;            // circuit file; reduced state is rho0
  std::string state1_path;            // optional; defaults to rho0
  std::string order0_instance_path;   // run the rank detector on this instance
  long long shots = 10000;
  std::uint64_t seed = 1;
};

int run_swap_test(const SwapTestOptions& opt, Report& out);

struct QStarOptions {
  int x_points = 9;  // interior x values in (0, 1/2)
};

int run_scan_qstar(const QStarOptions& opt, Report& out);

// Parallelism degree: explicit value if > 0, else ENTROLAB_THREADS, else
// hardware concurrency.
int resolve_threads(int requested);

}  // namespace entrolab
