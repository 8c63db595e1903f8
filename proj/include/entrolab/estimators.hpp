#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "entrolab/circuit.hpp"
#include "entrolab/density.hpp"

namespace entrolab {

struct ShotPlan {
  long long shots = 1;  // >= 1
  std::uint64_t seed = 0;
};

// Deterministic shot source: mt19937_64 with an explicit 53-bit mapping to
// [0,1), so the same seed yields the same outcome sequence on any platform.
class ShotRng {
 public:
  explicit ShotRng(std::uint64_t seed) : gen_(seed) {}
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 gen_;
};

// Exact probability that the mixed-state comparison test outputs 0:
// (1 + Tr(rho0 rho1))/2.
double swap_test_prob(const DensityMatrix& rho0, const DensityMatrix& rho1);

struct SwapTestSample {
  long long zeros = 0;
  long long ones = 0;
  double estimate = 0.0;  // 2 * zeros/shots - 1, estimates Tr(rho0 rho1)
  double exact = 0.0;     // Tr(rho0 rho1)
};

// Seeded Bernoulli sampling of the test at its exact outcome distribution.
SwapTestSample swap_test_sample(const DensityMatrix& rho0,
                                const DensityMatrix& rho1,
                                const ShotPlan& plan);

// Explicit controlled-swap circuit over 1 + w0 + w1 wires whose ancilla
// reads 0 with probability (1 + Tr(rho0 rho1))/2, where rho0, rho1 are the
// reduced states of the two preparation circuits. Used to cross-validate
// the closed form against gate-level simulation at small widths.
Circuit build_swap_test_circuit(const Circuit& prep0, const Circuit& prep1);

enum class RankDecision { Rank2, Rank1 };

struct Order0Result {
  RankDecision decision;
  bool provisional = false;  // sampled RANK1 verdicts are provisional
  double purity = 0.0;       // Tr(rho^2)
  double accept_prob = 0.0;  // (1 - purity)/2, clamped to 0 below 1e-12
  long long ones = 0;        // accepting outcomes seen (sampling mode)
  long long shots = 0;
};

// Rank detector for mixer outputs of rank <= 2 (higher rank is rejected).
// Without a plan: exact mode, Rank2 iff Tr(rho^2) < 1 - 1e-9. With a plan:
// one-sided sampling; any accepting outcome proves Rank2, otherwise Rank1
// is reported as provisional.
Order0Result order0_decide(const Circuit& mixer,
                           const std::optional<ShotPlan>& plan);

}  // namespace entrolab
