#pragma once

#include "entrolab/order.hpp"

namespace entrolab {

// Auxiliary functions certified by the sign suite. Each is transcribed
// directly from its displayed formula so a transcription error fails a
// named check instead of skewing anything downstream. All vanish at both
// endpoints of [0,1]; the exact endpoints return the limit value.

// fact-A1 pair (drives the Renyi upper bound on 1 < a < 2).
double fact_i1(double x, double alpha);  // I1(x;a), claim: I1(x;1) >= 0
double fact_i2(double x);                // claim: I2(x) <= 0

// fact-A2 pair (endpoint values of G(x;a) on a in (1,2)).
double fact_g1(double x);                // claim: G1(x) <= 0
double fact_g2(double x);                // claim: G2(x) >= 0

// fact-A3 triple (drives the Renyi upper bound on 0 < a < 1).
double fact_j1(double x, double alpha);  // claims: J1(x;0) >= 0, J1(x;1) >= 0
double fact_j2(double x);                // claim: J2(x) >= 0

// Constant from the fact-A1 derivative evaluation at x = 1/2:
// 3(ln(4/3) - 1)ln(3/2) + 2 ln(2)^2, claimed > 1/11.
double fact_a1_derivative_constant();

// d/dx of I1(x;1)/(2x), for cross-checking the constant numerically.
double fact_i1_half_slope(double x, double h);

// Auxiliaries from the cross-order comparison proofs.
double aux_t(double x, double q);        // T(x;q) = (1+x)^q - (1-x)^q - 2^q x
double aux_t_dx(double x, double q);     // q((1+x)^(q-1) + (1-x)^(q-1)) - 2^q
double aux_u(double x, double q);        // U(x;q) = 2^q x + (1-x)^q - (1+x)^q
double aux_u_dx(double x, double q);     // 2^q - q((1-x)^(q-1) + (1+x)^(q-1))
double aux_g(double x, double alpha);    // claim: G(x;a) <= G(x;2) = 0 for a >= 2

}  // namespace entrolab
