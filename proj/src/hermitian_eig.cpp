#include "entrolab/hermitian_eig.hpp"

#include <cmath>
#include <stdexcept>

namespace entrolab {

namespace {

using cd = std::complex<double>;

/**
 * Householder reduction of a Hermitian matrix to real symmetric tridiagonal
 * form (eigenvalues only, so subdiagonal phases are dropped: conjugating by
 * a diagonal unitary preserves the spectrum and makes the subdiagonal real).
 *
 * For each column k the reflector H = I - 2 v v† (unit v supported on rows
 * k+1..n-1) maps the trailing block B to
 *   H B H = B - 2 z v† - 2 v z†,   z = B v - (v† B v) v.
 */
void tridiagonalize(std::vector<cd>& a, int n, std::vector<double>& d,
                    std::vector<double>& e) {
  auto at = [&](int i, int j) -> cd& { return a[static_cast<std::size_t>(i) * n + j]; };
  std::vector<cd> v(n), z(n);

  for (int k = 0; k + 2 < n; ++k) {
    double below = 0.0;  // squared norm strictly below the subdiagonal entry
    for (int i = k + 2; i < n; ++i) below += std::norm(at(i, k));
    cd a0 = at(k + 1, k);
    if (below <= 1e-300) {
      e[k + 1] = std::abs(a0);
      continue;
    }
    double xnorm = std::sqrt(below + std::norm(a0));
    cd phase = (std::abs(a0) > 0.0) ? a0 / std::abs(a0) : cd{1.0, 0.0};
    cd alpha = -phase * xnorm;

    double vnorm2 = 0.0;
    for (int i = k + 1; i < n; ++i) {
      v[i] = at(i, k);
      if (i == k + 1) v[i] -= alpha;
      vnorm2 += std::norm(v[i]);
    }
    double vnorm = std::sqrt(vnorm2);
    for (int i = k + 1; i < n; ++i) v[i] /= vnorm;

    // z = B v - (v† B v) v over the trailing block
    double c = 0.0;
    for (int i = k + 1; i < n; ++i) {
      cd s{0.0, 0.0};
      for (int j = k + 1; j < n; ++j) s += at(i, j) * v[j];
      z[i] = s;
    }
    for (int i = k + 1; i < n; ++i) c += (std::conj(v[i]) * z[i]).real();
    for (int i = k + 1; i < n; ++i) z[i] -= c * v[i];

    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        at(i, j) -= 2.0 * (z[i] * std::conj(v[j]) + v[i] * std::conj(z[j]));
      }
    }
    at(k + 1, k) = alpha;
    e[k + 1] = std::abs(alpha);
  }
  if (n >= 2) e[n - 1] = std::abs(at(n - 1, n - 2));
  for (int i = 0; i < n; ++i) d[i] = at(i, i).real();
}

// Implicitly shifted QL sweeps on the tridiagonal (d, e); e[i] couples
// d[i-1] and d[i].
void ql_eigenvalues(std::vector<double>& d, std::vector<double>& e, int n) {
  if (n == 1) return;
  for (int i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0.0;

  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= 2.3e-16 * dd + 1e-300) break;
      }
      if (m != l) {
        if (iter++ == 80) throw std::runtime_error("eigenvalue iteration stalled");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        bool underflow = false;
        int i = m - 1;
        for (; i >= l; --i) {
          double f = s * e[i];
          double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            underflow = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
        }
        if (underflow && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

}  // namespace

std::vector<double> hermitian_eigenvalues(std::vector<std::complex<double>> a,
                                          int n) {
  if (n < 1 || a.size() != static_cast<std::size_t>(n) * n) {
    throw std::invalid_argument("hermitian_eigenvalues: bad dimensions");
  }
  std::vector<double> d(n, 0.0), e(n, 0.0);
  if (n == 1) {
    d[0] = a[0].real();
    return d;
  }
  tridiagonalize(a, n, d, e);
  ql_eigenvalues(d, e, n);
  return d;
}

}  // namespace entrolab
