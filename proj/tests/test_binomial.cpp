#include <cmath>

#include "doctest.h"
#include "entrolab/binomial.hpp"

using namespace entrolab;

TEST_CASE("generalized binomial coefficients") {
  CHECK(gen_binom(3.7, 0) == 1.0);
  CHECK(gen_binom(-2.5, 0) == 1.0);
  CHECK(gen_binom(5.0, 2) == 10.0);
  CHECK(std::abs(gen_binom(2.5, 3) - 0.3125) < 1e-15);
  CHECK(gen_binom(4.0, 6) == 0.0);
}

TEST_CASE("even-index sign rule") {
  CHECK(gen_binom_even_sign(2.5, 1) == CoeffSign::Positive);
  CHECK(gen_binom_even_sign(2.5, 2) == CoeffSign::Negative);
  CHECK(gen_binom_even_sign(4.0, 3) == CoeffSign::Zero);  // exact zero
  CHECK_THROWS_AS(gen_binom_even_sign(-1.0, 1), Error);

  // consistency with numerics wherever the coefficient is resolvable
  for (double a : {0.7, 1.3, 2.5, 3.9, 5.2, 6.0, 8.8}) {
    for (int k = 1; k <= 30; ++k) {
      double c = gen_binom(a, 2 * k);
      if (std::abs(c) <= 1e-14) continue;
      CoeffSign s = gen_binom_even_sign(a, k);
      CHECK(((s == CoeffSign::Positive && c > 0.0) ||
             (s == CoeffSign::Negative && c < 0.0)));
    }
  }
}

TEST_CASE("terminating identity sums at integer upper index") {
  BinomSeriesConfig cfg;
  auto s2 = binom_identity_sums(2.0, cfg);
  CHECK(s2.exact);
  CHECK(s2.sum_even == 1.0);
  CHECK(s2.sum_weighted == 1.0);

  auto s3 = binom_identity_sums(3.0, cfg);
  CHECK(s3.exact);
  CHECK(s3.sum_even == 3.0);
  CHECK(s3.sum_weighted == 3.0);

  auto s4 = binom_identity_sums(4.0, cfg);
  CHECK(s4.exact);
  CHECK(s4.sum_even == 7.0);
  CHECK(s4.sum_weighted == 8.0);
}

TEST_CASE("identity sums reach their closed targets") {
  BinomSeriesConfig cfg;
  cfg.max_terms = 2000000;
  cfg.tail_tolerance = 1e-10;
  for (double a : {1.3, 2.0, 2.5, 3.0, 4.0, 6.7}) {
    auto s = binom_identity_sums(a, cfg);
    double target_even = std::exp2(a - 1.0) - 1.0;
    double target_weighted = std::exp2(a - 3.0) * a;
    CHECK(std::abs(s.estimate_even() - target_even) <= 1e-8);
    CHECK(std::abs(s.estimate_weighted() - target_weighted) <= 1e-8);
  }
}

TEST_CASE("weighted series diverges at small upper index") {
  BinomSeriesConfig cfg;
  cfg.max_terms = 20000;
  auto s = binom_identity_sums(0.7, cfg);
  CHECK(!s.exact);
  CHECK(std::isinf(s.tail_weighted));
  // the unweighted estimate still lands on 2^(a-1) - 1
  CHECK(std::abs(s.estimate_even() - (std::exp2(-0.3) - 1.0)) < 1e-6);
}

TEST_CASE("hurwitz tail matches direct summation") {
  for (double s : {1.5, 2.0, 3.3}) {
    double direct = 0.0;
    for (int j = 101; j <= 4000000; ++j) direct += std::pow(j, -s);
    // add the analytic remainder past the direct cut
    direct += hurwitz_tail(s, 4000000.0);
    CHECK(std::abs(hurwitz_tail(s, 100.0) - direct) < 1e-10);
  }
}

TEST_CASE("config validation") {
  BinomSeriesConfig bad;
  bad.max_terms = 4;
  CHECK_THROWS_AS(binom_identity_sums(2.0, bad), Error);
  CHECK_THROWS_AS(binom_identity_sums(-1.0, BinomSeriesConfig{}), Error);
}
