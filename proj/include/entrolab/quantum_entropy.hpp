#pragma once

#include <array>
#include <span>

#include "entrolab/binary_entropy.hpp"
#include "entrolab/binomial.hpp"
#include "entrolab/density.hpp"
#include "entrolab/order.hpp"

namespace entrolab {

enum class EntropyFamily { Tsallis, Renyi };

// Uniform mixture of two pure states with the overlap magnitude cached at
// construction; its nonzero spectrum is {(1 +- overlap)/2} in closed form.
class Rank2Mixture {
 public:
  Rank2Mixture(StateVector psi0, StateVector psi1);

  const StateVector& psi0() const { return psi0_; }
  const StateVector& psi1() const { return psi1_; }
  double overlap_mag() const { return overlap_mag_; }

  // {(1+v)/2, (1-v)/2}: the nonzero eigenvalues of the mixture.
  std::array<double, 2> closed_spectrum() const;

  // (psi0><psi0| + |psi1><psi1|)/2 as an explicit matrix.
  DensityMatrix density() const;

  // Family entropy straight from the closed-form spectrum.
  double entropy(const Order& order, EntropyFamily family) const;

 private:
  StateVector psi0_, psi1_;
  double overlap_mag_;
};

// Entropy of a spectrum (must sum to 1 within 1e-9, entries >= 0).
// Order zero uses the numerical rank at threshold 1e-9: Tsallis gives
// rank-1, Renyi gives ln(rank). Order one is von Neumann. Infinity is
// -ln(lambda_max) for Renyi and rejected for Tsallis.
double quantum_entropy(std::span<const double> spectrum, const Order& order,
                       EntropyFamily family);

double quantum_entropy(const DensityMatrix& rho, const Order& order,
                       EntropyFamily family);

// Tr(rho^q) for the uniform rank-2 mixture with overlap magnitude v:
// ((1-v)^q + (1+v)^q) / 2^q.
double rank2_trace_power(double overlap_mag, double order);

// Same quantity by its even generalized-binomial series
// 2^(1-q) * sum_k binom(q,2k) v^(2k), valid for v < 1. Truncates when the
// rigorous geometric tail bound drops below cfg.tail_tolerance.
SeriesResult rank2_trace_power_series(double overlap_mag, double order,
                                      const BinomSeriesConfig& cfg);

enum class DivergenceFamily { Tsallis, Renyi, ShannonJS };

// Jensen-type divergence S((rho0+rho1)/2) - (S(rho0)+S(rho1))/2, where S is
// the family entropy at `order` (ShannonJS fixes order one). For pure inputs
// the subtracted term vanishes and the value equals the binary entropy of
// (1 - |<psi0|psi1>|)/2.
double jensen_divergence(const DensityMatrix& rho0, const DensityMatrix& rho1,
                         const Order& order, DivergenceFamily family);

}  // namespace entrolab
