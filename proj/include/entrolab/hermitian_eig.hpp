#pragma once

#include <complex>
#include <vector>

namespace entrolab {

/**
 * Eigenvalues of an n x n complex Hermitian matrix (row-major, destroyed).
 *
 * Householder reduction to real symmetric tridiagonal form followed by
 * implicitly shifted QL iteration; eigenvalues only, unordered. The
 * strictly lower triangle drives the reduction; the upper triangle is
 * assumed conjugate-symmetric.
 */
std::vector<double> hermitian_eigenvalues(std::vector<std::complex<double>> a,
                                          int n);

}  // namespace entrolab
