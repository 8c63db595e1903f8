#include "entrolab/simulator.hpp"

#include <cmath>

namespace entrolab {

StateVector::StateVector(int width, std::vector<cplx> amplitudes)
    : width_(width), amps_(std::move(amplitudes)) {
  if (width < 1 || width > kMaxPureWidth) {
    throw Error("state width out of range");
  }
  if (amps_.size() != (std::size_t{1} << width)) {
    throw Error("amplitude count does not match width");
  }
  if (std::abs(norm() - 1.0) > 1e-10) {
    throw Error("state vector is not normalized");
  }
}

StateVector StateVector::zero(int width) {
  std::vector<cplx> a(std::size_t{1} << width, cplx{0.0, 0.0});
  a[0] = 1.0;
  return StateVector(width, std::move(a));
}

double StateVector::norm() const {
  double s = 0.0;
  for (const cplx& a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

namespace {

// Wire w is the most significant bit of the index for wire 0.
inline std::size_t wire_bit(int width, int wire) {
  return std::size_t{1} << (width - 1 - wire);
}

void apply_1q(std::vector<cplx>& a, int width, int wire, const cplx m00,
              const cplx m01, const cplx m10, const cplx m11,
              std::size_t ctrl_mask) {
  const std::size_t bit = wire_bit(width, wire);
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    if ((i & bit) != 0) continue;
    if ((i & ctrl_mask) != ctrl_mask) continue;
    const std::size_t j = i | bit;
    const cplx lo = a[i], hi = a[j];
    a[i] = m00 * lo + m01 * hi;
    a[j] = m10 * lo + m11 * hi;
  }
}

void apply_cnot(std::vector<cplx>& a, int width, int control, int target,
                std::size_t ctrl_mask) {
  const std::size_t cbit = wire_bit(width, control);
  const std::size_t tbit = wire_bit(width, target);
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    if ((i & cbit) == 0 || (i & tbit) != 0) continue;
    if ((i & ctrl_mask) != ctrl_mask) continue;
    std::swap(a[i], a[i | tbit]);
  }
}

void apply_gates(std::vector<cplx>& a, int width, const std::vector<Gate>& gates,
                 std::size_t ctrl_mask, bool adjoint, std::size_t gate_base);

void apply_one(std::vector<cplx>& a, int width, const Gate& g,
               std::size_t ctrl_mask, bool adjoint, std::size_t index) {
  static const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  switch (g.kind) {
    case Gate::Kind::H:
      apply_1q(a, width, g.targets[0], inv_sqrt2, inv_sqrt2, inv_sqrt2,
               -inv_sqrt2, ctrl_mask);
      return;
    case Gate::Kind::X:
      apply_1q(a, width, g.targets[0], 0.0, 1.0, 1.0, 0.0, ctrl_mask);
      return;
    case Gate::Kind::Cnot:
      apply_cnot(a, width, g.targets[0], g.targets[1], ctrl_mask);
      return;
    case Gate::Kind::Ry: {
      double t = adjoint ? -g.theta : g.theta;
      double c = std::cos(t / 2.0), s = std::sin(t / 2.0);
      apply_1q(a, width, g.targets[0], c, -s, s, c, ctrl_mask);
      return;
    }
    case Gate::Kind::Unitary1Q: {
      const auto& m = g.matrix;
      if (adjoint) {
        apply_1q(a, width, g.targets[0], std::conj(m[0]), std::conj(m[2]),
                 std::conj(m[1]), std::conj(m[3]), ctrl_mask);
      } else {
        apply_1q(a, width, g.targets[0], m[0], m[1], m[2], m[3], ctrl_mask);
      }
      return;
    }
    case Gate::Kind::Controlled: {
      int ctrl = g.targets[0];
      if (ctrl < 0 || ctrl >= width) {
        throw Error("gate " + std::to_string(index) + ": control out of range");
      }
      // controlled(U V) = controlled(U) controlled(V): recurse per gate
      apply_gates(a, width, g.body->gates,
                  ctrl_mask | wire_bit(width, ctrl), adjoint, index);
      return;
    }
    case Gate::Kind::Adjoint:
      apply_gates(a, width, g.body->gates, ctrl_mask, !adjoint, index);
      return;
  }
  throw Error("unknown gate kind");
}

void apply_gates(std::vector<cplx>& a, int width, const std::vector<Gate>& gates,
                 std::size_t ctrl_mask, bool adjoint, std::size_t gate_base) {
  if (!adjoint) {
    for (std::size_t i = 0; i < gates.size(); ++i) {
      apply_one(a, width, gates[i], ctrl_mask, false, gate_base + i);
    }
  } else {
    for (std::size_t i = gates.size(); i-- > 0;) {
      apply_one(a, width, gates[i], ctrl_mask, true, gate_base + i);
    }
  }
}

}  // namespace

StateVector simulate(const Circuit& c, const StateVector& input) {
  c.validate();
  if (input.width() != c.width) {
    throw Error("simulate: input dimension does not match circuit width");
  }
  std::vector<cplx> a = input.amplitudes();
  apply_gates(a, c.width, c.gates, 0, false, 0);
  return StateVector(c.width, std::move(a));
}

cplx overlap(const StateVector& psi0, const StateVector& psi1) {
  if (psi0.dim() != psi1.dim()) throw Error("overlap: dimension mismatch");
  cplx s{0.0, 0.0};
  const auto& a = psi0.amplitudes();
  const auto& b = psi1.amplitudes();
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

double measure_probability(const StateVector& psi, std::span<const int> wires,
                           unsigned long long outcome) {
  std::size_t want = 0, mask = 0;
  for (std::size_t k = 0; k < wires.size(); ++k) {
    int w = wires[k];
    if (w < 0 || w >= psi.width()) throw Error("measured wire out of range");
    std::size_t bit = std::size_t{1} << (psi.width() - 1 - w);
    mask |= bit;
    if ((outcome >> k) & 1ULL) want |= bit;
  }
  double p = 0.0;
  const auto& a = psi.amplitudes();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if ((i & mask) == want) p += std::norm(a[i]);
  }
  return p;
}

double all_zeros_probability(const StateVector& psi, const Circuit& c) {
  return measure_probability(psi, c.outputs, 0ULL);
}

}  // namespace entrolab
