#pragma once

#include <span>
#include <vector>

#include "entrolab/circuit.hpp"

namespace entrolab {

// Width caps. Dense amplitudes only; every construction here is exercised
// far below these limits.
inline constexpr int kMaxPureWidth = 24;
inline constexpr int kMaxDensityWidth = 14;

// Dense state vector over `width` wires. Wire 0 is the most significant
// bit of the amplitude index (big-endian).
class StateVector {
 public:
  StateVector(int width, std::vector<cplx> amplitudes);

  static StateVector zero(int width);  // |0...0>

  int width() const { return width_; }
  std::size_t dim() const { return amps_.size(); }
  const std::vector<cplx>& amplitudes() const { return amps_; }
  std::vector<cplx>& amplitudes() { return amps_; }

  double norm() const;

 private:
  int width_;
  std::vector<cplx> amps_;
};

// Applies the circuit to `input`. Dimension mismatches and bad wires are
// rejected with a diagnostic naming the gate index.
StateVector simulate(const Circuit& c, const StateVector& input);

// <psi0|psi1>; dimensions must agree.
cplx overlap(const StateVector& psi0, const StateVector& psi1);

// Born probability that measuring `wires` yields the bits of `outcome`
// (outcome bit i corresponds to wires[i]).
double measure_probability(const StateVector& psi, std::span<const int> wires,
                           unsigned long long outcome);

// Probability that every declared output wire reads 0.
double all_zeros_probability(const StateVector& psi, const Circuit& c);

}  // namespace entrolab
