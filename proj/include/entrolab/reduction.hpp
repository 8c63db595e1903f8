#pragma once

#include <string>
#include <utility>

#include "entrolab/circuit.hpp"
#include "entrolab/density.hpp"
#include "entrolab/quantum_entropy.hpp"

namespace entrolab {

struct ThresholdGap {
  double t = 0.0;
  double g = 0.0;
  bool valid = false;  // g > 0
};

enum class InstanceLabel { Yes, No, Unknown };

std::string label_str(InstanceLabel l);
InstanceLabel parse_label(const std::string& s);

// Stand-in for an amplified decision circuit: a width-n' rotation circuit
// with one designated output wire whose all-zeros Born probability is
// sqrt(1 - accept_prob^2), so that the infidelity gadget built on it
// produces |<psi0|psi1>|^2 = 1 - accept_prob^2 exactly.
struct SyntheticBqpInstance {
  Circuit circuit;     // width n_prime, outputs = {0}
  double accept_prob;  // represented machine's acceptance probability
  int n_prime;
};

SyntheticBqpInstance synthesize_bqp_instance(int n_prime, double accept_prob);

// Builds the overlap gadget from a circuit with exactly one declared output
// wire O: Q0 = identity, Q1 = adjoint(C) . CNOT(O->F) . C on a fresh ancilla
// wire F appended last. Both returned circuits declare all wires as outputs.
std::pair<Circuit, Circuit> infidelity_gadget(const Circuit& c_prime);

// Ancilla-controlled preparation of the uniform two-state mixture:
// H on the ancilla (appended last), controlled-Q1, X, controlled-Q0, X;
// the ancilla is the only non-output wire.
Circuit rank2_mixer(const Circuit& q0, const Circuit& q1);

// Minimum n for which the (family, order) threshold family is defined.
int min_instance_size(EntropyFamily family, const Order& order);

// Threshold/gap pair for the order's interval. Rejects n below the
// interval's minimum (naming it) and order zero (rank detection handles
// that case; see order0_decide).
ThresholdGap threshold_gap(EntropyFamily family, const Order& order, int n);

struct ReductionInstance {
  Circuit mixer;
  EntropyFamily family = EntropyFamily::Tsallis;
  Order order = Order::one();
  ThresholdGap tg;
  InstanceLabel label = InstanceLabel::Unknown;
  int n = 0;  // output length
};

ReductionInstance build_instance(const SyntheticBqpInstance& bqp,
                                 EntropyFamily family, const Order& order);

enum class Verdict { Yes, No, Ambiguous };

std::string verdict_str(Verdict v);

struct VerifyResult {
  Verdict verdict;
  double entropy;   // exact entropy of the reduced mixer state
  int rank;         // numerical rank of that state
};

// Simulates the mixer exactly, computes the entropy of the reduced state
// and classifies it against (t, g). Ambiguous iff entropy lies strictly
// inside (t-g, t+g).
VerifyResult verify_instance(const ReductionInstance& inst);

// Single-file format: header line
//   family=...; order=...; t=...; g=...; label=...
// (t, g at 17 significant digits) followed by the circuit text.
std::string serialize_instance(const ReductionInstance& inst);
ReductionInstance parse_instance(const std::string& text);

namespace threshold_detail {
// Per-interval threshold/gap families at real-valued n, exposed for the
// gap-positivity certificates that evaluate them at fractional n.
ThresholdGap renyi_order2(double n);
ThresholdGap renyi_below2(double n, double alpha);
ThresholdGap renyi_above2(double n, double alpha, bool is_infinity);
ThresholdGap tsallis_order2(double n);
ThresholdGap tsallis_below2(double n, double q);
ThresholdGap tsallis_2_to_3(double n, double q);
ThresholdGap tsallis_above3(double n, double q);

// Verbatim displayed gap expression for the below-2 Renyi family at n = 2
// (kept as displayed; differs from renyi_below2(2, alpha).g for alpha != 2,
// see the certification notes in the suite).
double renyi_below2_gap_anchor(double alpha);
}  // namespace threshold_detail

}  // namespace entrolab
