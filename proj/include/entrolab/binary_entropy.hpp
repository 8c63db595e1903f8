#pragma once

#include "entrolab/order.hpp"

namespace entrolab {

// q-deformed logarithm ln_q(x) = (1 - x^(1-q))/(q - 1), ln_1 = ln.
// Requires x > 0 and q != infinity.
double q_log(double x, const Order& q);

// Shannon binary entropy in nats, with 0 ln 0 := 0.
double shannon_binary(double x);

// Min binary entropy -ln(max{x, 1-x}).
double min_binary_entropy(double x);

// Tsallis binary entropy H^T_q(x) = (1 - x^q - (1-x)^q)/(q - 1).
// Order one is the Shannon limit; order zero is the rank functional
// (1 on (0,1), 0 at the endpoints). Infinity is rejected.
double tsallis_binary(double x, const Order& q);

// Renyi binary entropy H^R_a(x) = ln(x^a + (1-x)^a)/(1 - a).
// Order one is Shannon, order zero is ln 2 on (0,1) and 0 at endpoints,
// order infinity is the min binary entropy.
double renyi_binary(double x, const Order& alpha);

// H^T_q(1/2) = (1 - 2^(1-q))/(q - 1); ln 2 at order one, 1 at order zero.
double tsallis_half(const Order& q);

// Maps x into [0, 1/2] so that x and 1-x share one floating-point path.
// Rejects inputs outside [0,1] beyond 1e-12 slack; values below 1e-300
// collapse to exact zero.
double canonical_binary_argument(double x);

}  // namespace entrolab
