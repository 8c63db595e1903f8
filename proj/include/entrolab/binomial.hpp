#pragma once

#include <cstdint>

#include "entrolab/error.hpp"

namespace entrolab {

// Generalized binomial coefficient binom(a, k) for real a, integer k >= 0,
// evaluated by the product form with interleaved multiply/divide so
// intermediates stay near the final magnitude.
double gen_binom(double a, int k);

enum class CoeffSign { Negative = -1, Zero = 0, Positive = 1 };

// Sign of binom(a, 2k) for a > 0, k >= 1, from the parity rule:
// nonnegative iff max{0, 2k - ceil(a)} is even. Exact zeros (integer a
// with 2k > a) are reported as Zero.
CoeffSign gen_binom_even_sign(double a, int k);

struct BinomSeriesConfig {
  int max_terms = 2000000;       // >= 8
  double tail_tolerance = 1e-10; // absolute, > 0
};

struct BinomSums {
  double sum_even = 0.0;       // partial sum of binom(a,2k), k >= 1
  double sum_weighted = 0.0;   // partial sum of binom(a,2k)*k, k >= 1
  double tail_even = 0.0;      // analytic tail estimate past the last term
  double tail_weighted = 0.0;  // +inf when the weighted series diverges (a <= 1)
  long long terms = 0;
  bool exact = false;          // series terminated exactly (integer a)
  double estimate_even() const { return sum_even + tail_even; }
  double estimate_weighted() const { return sum_weighted + tail_weighted; }
};

// Partial sums of sum_k binom(a,2k) and sum_k binom(a,2k)*k for a > 0,
// with tail estimates. The closed targets are 2^(a-1) - 1 and 2^(a-3)*a.
BinomSums binom_identity_sums(double a, const BinomSeriesConfig& cfg);

struct SeriesResult {
  double value = 0.0;
  bool converged = false;
  int terms = 0;
  double tail_bound = 0.0;
};

// Tail of the Hurwitz sum: sum_{j > K} j^(-s) for s > 1, by Euler-Maclaurin.
double hurwitz_tail(double s, double K);

}  // namespace entrolab
