#include "entrolab/estimators.hpp"

#include <cmath>

#include "entrolab/quantum_entropy.hpp"

namespace entrolab {

double swap_test_prob(const DensityMatrix& rho0, const DensityMatrix& rho1) {
  if (rho0.dim() != rho1.dim()) throw Error("swap test: dimension mismatch");
  return 0.5 * (1.0 + trace_product(rho0, rho1));
}

SwapTestSample swap_test_sample(const DensityMatrix& rho0,
                                const DensityMatrix& rho1,
                                const ShotPlan& plan) {
  if (plan.shots < 1) throw Error("shot plan needs at least one shot");
  double exact = trace_product(rho0, rho1);
  double p0 = 0.5 * (1.0 + exact);
  ShotRng rng(plan.seed);
  SwapTestSample out;
  out.exact = exact;
  for (long long s = 0; s < plan.shots; ++s) {
    if (rng.uniform() < p0) {
      ++out.zeros;
    } else {
      ++out.ones;
    }
  }
  out.estimate =
      2.0 * static_cast<double>(out.zeros) / static_cast<double>(plan.shots) - 1.0;
  return out;
}

Circuit build_swap_test_circuit(const Circuit& prep0, const Circuit& prep1) {
  prep0.validate();
  prep1.validate();
  if (prep0.outputs.size() != prep1.outputs.size()) {
    throw Error("swap test circuits must have equal output counts");
  }
  const int w0 = prep0.width;
  const int w1 = prep1.width;
  const int total = 1 + w0 + w1;

  Circuit c;
  c.width = total;
  c.outputs = {0};  // the ancilla carries the outcome

  Circuit a = shift_wires(prep0, 1, total);
  Circuit b = shift_wires(prep1, 1 + w0, total);
  c.gates.insert(c.gates.end(), a.gates.begin(), a.gates.end());
  c.gates.insert(c.gates.end(), b.gates.begin(), b.gates.end());

  c.gates.push_back(Gate::h(0));
  Circuit swaps;
  swaps.width = total;
  for (std::size_t k = 0; k < prep0.outputs.size(); ++k) {
    int p = prep0.outputs[k] + 1;
    int q = prep1.outputs[k] + 1 + w0;
    swaps.gates.push_back(Gate::cnot(p, q));
    swaps.gates.push_back(Gate::cnot(q, p));
    swaps.gates.push_back(Gate::cnot(p, q));
  }
  c.gates.push_back(Gate::controlled(0, std::move(swaps)));
  c.gates.push_back(Gate::h(0));
  c.validate();
  return c;
}

Order0Result order0_decide(const Circuit& mixer,
                           const std::optional<ShotPlan>& plan) {
  DensityMatrix rho = reduced_state(mixer, StateVector::zero(mixer.width));
  auto spec = spectrum(rho);
  if (numerical_rank(spec) > 2) {
    throw Error("order-0 detector expects a state of rank at most 2");
  }

  Order0Result out{RankDecision::Rank1};
  out.purity = purity(rho);
  double p_accept = 0.5 * (1.0 - out.purity);
  if (p_accept < 1e-12) p_accept = 0.0;  // rank-1 inputs never accept
  out.accept_prob = p_accept;

  if (!plan.has_value()) {
    out.decision =
        out.purity < 1.0 - 1e-9 ? RankDecision::Rank2 : RankDecision::Rank1;
    out.provisional = false;
    return out;
  }

  if (plan->shots < 1) throw Error("shot plan needs at least one shot");
  ShotRng rng(plan->seed);
  out.shots = plan->shots;
  for (long long s = 0; s < plan->shots; ++s) {
    if (rng.uniform() < p_accept) ++out.ones;
  }
  if (out.ones > 0) {
    out.decision = RankDecision::Rank2;
    out.provisional = false;
  } else {
    out.decision = RankDecision::Rank1;
    out.provisional = true;  // absence of accepting outcomes is not a proof
  }
  return out;
}

}  // namespace entrolab
