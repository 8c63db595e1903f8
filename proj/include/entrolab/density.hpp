#pragma once

#include <vector>

#include "entrolab/simulator.hpp"

namespace entrolab {

// Dense density matrix on n wires (dim 2^n), row-major.
class DensityMatrix {
 public:
  DensityMatrix(int wires, std::vector<cplx> entries);

  static DensityMatrix from_pure(const StateVector& psi);
  static DensityMatrix maximally_mixed(int wires);

  int wires() const { return wires_; }
  std::size_t dim() const { return dim_; }
  const std::vector<cplx>& entries() const { return data_; }

  cplx at(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

  double trace() const;
  // Hermitian within 1e-12 entrywise and unit trace within 1e-10.
  void validate() const;

 private:
  int wires_;
  std::size_t dim_;
  std::vector<cplx> data_;
};

// Convex combination p*a + (1-p)*b.
DensityMatrix mix(const DensityMatrix& a, const DensityMatrix& b, double p);

DensityMatrix kron(const DensityMatrix& a, const DensityMatrix& b);

// Tr(a b) for Hermitian a, b (real).
double trace_product(const DensityMatrix& a, const DensityMatrix& b);

// Tr(rho^2).
double purity(const DensityMatrix& rho);

// Runs the circuit on `input` and traces out the non-output wires. The
// reduced index orders bits by the declared output list (first output =
// most significant). Width above kMaxDensityWidth is rejected.
DensityMatrix reduced_state(const Circuit& c, const StateVector& input);

// Eigenvalues sorted descending. Negatives in [-1e-9, 0) clamp to zero,
// anything lower is rejected, and the result is renormalized to unit sum.
std::vector<double> spectrum(const DensityMatrix& rho);

// Count of eigenvalues above 1e-9 in an already-cleaned spectrum.
int numerical_rank(std::span<const double> spectrum);

}  // namespace entrolab
