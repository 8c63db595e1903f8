#include "entrolab/density.hpp"

#include <algorithm>
#include <cmath>

#include "entrolab/hermitian_eig.hpp"

namespace entrolab {

DensityMatrix::DensityMatrix(int wires, std::vector<cplx> entries)
    : wires_(wires), dim_(std::size_t{1} << wires), data_(std::move(entries)) {
  if (wires < 1 || wires > kMaxDensityWidth) {
    throw Error("density matrix wire count out of range");
  }
  if (data_.size() != dim_ * dim_) {
    throw Error("density matrix entry count does not match wire count");
  }
}

DensityMatrix DensityMatrix::from_pure(const StateVector& psi) {
  std::size_t d = psi.dim();
  std::vector<cplx> m(d * d);
  const auto& a = psi.amplitudes();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) m[i * d + j] = a[i] * std::conj(a[j]);
  return DensityMatrix(psi.width(), std::move(m));
}

DensityMatrix DensityMatrix::maximally_mixed(int wires) {
  std::size_t d = std::size_t{1} << wires;
  std::vector<cplx> m(d * d, cplx{0.0, 0.0});
  for (std::size_t i = 0; i < d; ++i) m[i * d + i] = 1.0 / static_cast<double>(d);
  return DensityMatrix(wires, std::move(m));
}

double DensityMatrix::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += data_[i * dim_ + i].real();
  return t;
}

void DensityMatrix::validate() const {
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i; j < dim_; ++j) {
      cplx diff = data_[i * dim_ + j] - std::conj(data_[j * dim_ + i]);
      if (std::abs(diff) > 1e-12) throw Error("density matrix is not Hermitian");
    }
  }
  if (std::abs(trace() - 1.0) > 1e-10) throw Error("density matrix trace is not 1");
}

DensityMatrix mix(const DensityMatrix& a, const DensityMatrix& b, double p) {
  if (a.dim() != b.dim()) throw Error("mix: dimension mismatch");
  if (!(p >= 0.0 && p <= 1.0)) throw Error("mix: weight outside [0,1]");
  std::vector<cplx> m(a.entries().size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    m[i] = p * a.entries()[i] + (1.0 - p) * b.entries()[i];
  }
  return DensityMatrix(a.wires(), std::move(m));
}

DensityMatrix kron(const DensityMatrix& a, const DensityMatrix& b) {
  std::size_t da = a.dim(), db = b.dim(), d = da * db;
  std::vector<cplx> m(d * d);
  for (std::size_t i1 = 0; i1 < da; ++i1)
    for (std::size_t j1 = 0; j1 < da; ++j1)
      for (std::size_t i2 = 0; i2 < db; ++i2)
        for (std::size_t j2 = 0; j2 < db; ++j2) {
          m[(i1 * db + i2) * d + (j1 * db + j2)] = a.at(i1, j1) * b.at(i2, j2);
        }
  return DensityMatrix(a.wires() + b.wires(), std::move(m));
}

double trace_product(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() != b.dim()) throw Error("trace_product: dimension mismatch");
  // Tr(ab) = sum_ij a_ij conj(b_ij) for Hermitian b
  cplx s{0.0, 0.0};
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    s += a.entries()[i] * std::conj(b.entries()[i]);
  }
  return s.real();
}

double purity(const DensityMatrix& rho) { return trace_product(rho, rho); }

DensityMatrix reduced_state(const Circuit& c, const StateVector& input) {
  if (c.width > kMaxDensityWidth) {
    throw Error("reduced_state: width above " + std::to_string(kMaxDensityWidth) +
                " (memory guard)");
  }
  if (c.outputs.empty()) throw Error("reduced_state: no output wires declared");
  if (static_cast<int>(c.outputs.size()) > 12) {
    throw Error("reduced_state: more than 12 output wires (memory guard)");
  }
  StateVector psi = simulate(c, input);

  const int m = c.width;
  const int n = static_cast<int>(c.outputs.size());
  std::vector<std::size_t> out_bit(n);
  for (int k = 0; k < n; ++k) out_bit[k] = std::size_t{1} << (m - 1 - c.outputs[k]);

  std::vector<std::size_t> env_bit;
  for (int w = 0; w < m; ++w) {
    bool is_out = false;
    for (int o : c.outputs) is_out = is_out || (o == w);
    if (!is_out) env_bit.push_back(std::size_t{1} << (m - 1 - w));
  }

  const std::size_t dn = std::size_t{1} << n;
  const std::size_t de = std::size_t{1} << env_bit.size();
  auto scatter = [](std::size_t bits, const std::vector<std::size_t>& places) {
    std::size_t idx = 0;
    for (std::size_t k = 0; k < places.size(); ++k) {
      if ((bits >> k) & 1ULL) idx |= places[k];
    }
    return idx;
  };
  // Reduced index: first declared output is the most significant bit.
  std::vector<std::size_t> out_index(dn);
  for (std::size_t i = 0; i < dn; ++i) {
    std::size_t idx = 0;
    for (int k = 0; k < n; ++k) {
      if ((i >> (n - 1 - k)) & 1ULL) idx |= out_bit[k];
    }
    out_index[i] = idx;
  }

  std::vector<cplx> rho(dn * dn, cplx{0.0, 0.0});
  const auto& a = psi.amplitudes();
  for (std::size_t env = 0; env < de; ++env) {
    std::size_t base = scatter(env, env_bit);
    for (std::size_t i = 0; i < dn; ++i) {
      cplx ai = a[base | out_index[i]];
      if (ai == cplx{0.0, 0.0}) continue;
      for (std::size_t j = 0; j < dn; ++j) {
        rho[i * dn + j] += ai * std::conj(a[base | out_index[j]]);
      }
    }
  }
  DensityMatrix out(n, std::move(rho));
  out.validate();
  return out;
}

std::vector<double> spectrum(const DensityMatrix& rho) {
  rho.validate();
  std::vector<double> ev =
      hermitian_eigenvalues(rho.entries(), static_cast<int>(rho.dim()));
  double sum = 0.0;
  for (double& v : ev) {
    if (v < -1e-9) throw Error("density matrix has a negative eigenvalue");
    // Clamp negatives and sub-resolution dust to exact zero. Low-order
    // entropies magnify stray eigenvalues (a 1e-16 artifact contributes
    // ~1e-4 to Tr(rho^0.25)), so anything beneath the solver's resolution
    // must not survive.
    if (v < 1e-12) v = 0.0;
    sum += v;
  }
  if (!(sum > 0.0)) throw Error("spectrum sums to zero");
  for (double& v : ev) v /= sum;
  std::sort(ev.begin(), ev.end(), std::greater<double>());
  return ev;
}

int numerical_rank(std::span<const double> spectrum) {
  int r = 0;
  for (double v : spectrum)
    if (v > 1e-9) ++r;
  return r;
}

}  // namespace entrolab
