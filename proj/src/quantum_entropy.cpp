#include "entrolab/quantum_entropy.hpp"

#include <algorithm>
#include <cmath>

namespace entrolab {

namespace {

constexpr double kRankThreshold = 1e-9;

void validate_spectrum(std::span<const double> spec) {
  double sum = 0.0;
  for (double v : spec) {
    if (!(v >= -1e-12)) throw Error("spectrum entry below zero");
    sum += v;
  }
  if (std::abs(sum - 1.0) > 1e-9) throw Error("spectrum does not sum to 1");
}

}  // namespace

double quantum_entropy(std::span<const double> spectrum, const Order& order,
                       EntropyFamily family) {
  validate_spectrum(spectrum);

  if (order.is_zero()) {
    int rank = 0;
    for (double v : spectrum)
      if (v > kRankThreshold) ++rank;
    if (rank == 0) throw Error("spectrum has numerical rank zero");
    return family == EntropyFamily::Tsallis ? static_cast<double>(rank - 1)
                                            : std::log(static_cast<double>(rank));
  }
  if (order.is_one()) {
    double h = 0.0;
    for (double v : spectrum)
      if (v > 0.0) h -= v * std::log(v);
    return h;
  }
  if (order.is_infinity()) {
    if (family == EntropyFamily::Tsallis) {
      throw Error("Tsallis entropy undefined at infinite order");
    }
    double vmax = *std::max_element(spectrum.begin(), spectrum.end());
    return -std::log(vmax);
  }

  double q = order.value();
  if (family == EntropyFamily::Tsallis) {
    if (std::abs(q - 1.0) <= 0.5) {
      // 1 - sum v^q = -sum v expm1((q-1) ln v), exact at the q -> 1 limit
      double s = 0.0;
      for (double v : spectrum)
        if (v > 0.0) s -= v * std::expm1((q - 1.0) * std::log(v));
      return s / (q - 1.0);
    }
    double s = 0.0;
    for (double v : spectrum)
      if (v > 0.0) s += std::pow(v, q);
    return (1.0 - s) / (q - 1.0);
  }

  // Renyi
  if (std::abs(q - 1.0) <= 0.5) {
    double s = 0.0;
    for (double v : spectrum)
      if (v > 0.0) s += v * std::expm1((q - 1.0) * std::log(v));
    return std::log1p(s) / (1.0 - q);
  }
  double vmax = *std::max_element(spectrum.begin(), spectrum.end());
  if (!(vmax > 0.0)) throw Error("spectrum has no positive entry");
  double s = 0.0;  // sum (v/vmax)^q, scaled so no under/overflow at large q
  for (double v : spectrum)
    if (v > 0.0) s += std::exp(q * (std::log(v) - std::log(vmax)));
  return (q * std::log(vmax) + std::log(s)) / (1.0 - q);
}

double quantum_entropy(const DensityMatrix& rho, const Order& order,
                       EntropyFamily family) {
  auto spec = spectrum(rho);
  return quantum_entropy(std::span<const double>(spec), order, family);
}

Rank2Mixture::Rank2Mixture(StateVector psi0, StateVector psi1)
    : psi0_(std::move(psi0)), psi1_(std::move(psi1)) {
  if (psi0_.dim() != psi1_.dim()) {
    throw Error("rank-2 mixture needs states of one dimension");
  }
  overlap_mag_ = std::abs(overlap(psi0_, psi1_));
  if (overlap_mag_ > 1.0 + 1e-10) throw Error("overlap magnitude above 1");
  overlap_mag_ = std::min(overlap_mag_, 1.0);
}

std::array<double, 2> Rank2Mixture::closed_spectrum() const {
  return {(1.0 + overlap_mag_) / 2.0, (1.0 - overlap_mag_) / 2.0};
}

DensityMatrix Rank2Mixture::density() const {
  return mix(DensityMatrix::from_pure(psi0_), DensityMatrix::from_pure(psi1_),
             0.5);
}

double Rank2Mixture::entropy(const Order& order, EntropyFamily family) const {
  auto s = closed_spectrum();
  return quantum_entropy(std::span<const double>(s.data(), s.size()), order,
                         family);
}

double rank2_trace_power(double overlap_mag, double order) {
  if (!(overlap_mag >= 0.0 && overlap_mag <= 1.0)) {
    throw Error("overlap magnitude outside [0,1]");
  }
  if (!(order > 0.0)) throw Error("rank2_trace_power requires positive order");
  double lo = (1.0 - overlap_mag) / 2.0;
  double hi = (1.0 + overlap_mag) / 2.0;
  double a = lo > 0.0 ? std::pow(lo, order) : 0.0;
  return a + std::pow(hi, order);
}

SeriesResult rank2_trace_power_series(double overlap_mag, double order,
                                      const BinomSeriesConfig& cfg) {
  if (!(overlap_mag >= 0.0 && overlap_mag < 1.0)) {
    throw Error("series form requires overlap magnitude in [0,1)");
  }
  if (cfg.max_terms < 8) throw Error("max_terms must be at least 8");
  if (!(cfg.tail_tolerance > 0.0)) throw Error("tail_tolerance must be positive");

  const double q = order;
  const double v2 = overlap_mag * overlap_mag;
  const double front = std::exp2(1.0 - q);

  SeriesResult res;
  double sum = 1.0;  // k = 0 term: binom(q, 0) = 1
  double coef = 1.0;
  double vpow = 1.0;
  res.terms = 1;

  // |binom(q,2k)| is non-increasing once 2k >= q, so past that point the
  // remaining terms are dominated by a geometric series in v^2:
  //   |tail after term k| <= |term_k| v^2 / (1 - v^2).
  for (int k = 1; k <= cfg.max_terms; ++k) {
    double m = 2.0 * (k - 1);
    coef *= (q - m) * (q - m - 1.0) / ((m + 1.0) * (m + 2.0));
    vpow *= v2;
    double term = coef * vpow;
    sum += term;
    res.terms = k + 1;
    if (coef == 0.0) {
      res.tail_bound = 0.0;
      res.converged = true;
      break;
    }
    if (2.0 * k >= q) {
      double bound = front * std::abs(term) * v2 / (1.0 - v2);
      res.tail_bound = bound;
      if (bound <= cfg.tail_tolerance) {
        res.converged = true;
        break;
      }
    }
  }
  res.value = front * sum;
  return res;
}

double jensen_divergence(const DensityMatrix& rho0, const DensityMatrix& rho1,
                         const Order& order, DivergenceFamily family) {
  if (rho0.dim() != rho1.dim()) {
    throw Error("jensen_divergence requires equal dimensions");
  }
  Order ord = family == DivergenceFamily::ShannonJS ? Order::one() : order;
  EntropyFamily fam = family == DivergenceFamily::Tsallis
                          ? EntropyFamily::Tsallis
                          : EntropyFamily::Renyi;

  DensityMatrix avg = mix(rho0, rho1, 0.5);
  double s_avg = quantum_entropy(avg, ord, fam);
  double s0 = quantum_entropy(rho0, ord, fam);
  double s1 = quantum_entropy(rho1, ord, fam);
  return s_avg - 0.5 * (s0 + s1);
}

}  // namespace entrolab
