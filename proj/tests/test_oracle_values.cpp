// Frozen spot values, independently computed at 50-digit precision from
// the defining formulas. These pin the double-precision implementations to
// an outside evaluation path.

#include <cmath>

#include "doctest.h"
#include "entrolab/binary_entropy.hpp"
#include "entrolab/proof_functions.hpp"
#include "entrolab/quantum_entropy.hpp"
#include "entrolab/reduction.hpp"

using namespace entrolab;

namespace {
constexpr double kTol = 1e-13;
}

TEST_CASE("binary entropy spot values") {
  CHECK(std::abs(tsallis_binary(0.3, Order::real(2.5)) -
                 0.36049437121522535419) < kTol);
  CHECK(std::abs(renyi_binary(0.3, Order::real(2.5)) -
                 0.51876144689858030266) < kTol);
  CHECK(std::abs(renyi_binary(0.1, Order::real(0.25)) -
                 0.57254168732515945069) < kTol);
  CHECK(std::abs(tsallis_binary(0.07, Order::real(0.4)) -
                 0.52760650429918048150) < kTol);
}

TEST_CASE("rank-2 trace power spot value") {
  CHECK(std::abs(rank2_trace_power(0.6, 2.5) - 0.59032194605994447985) < kTol);
}

TEST_CASE("threshold family spot values") {
  ThresholdGap r2 = threshold_gap(EntropyFamily::Renyi, Order::real(2.0), 2);
  CHECK(std::abs(r2.t - 0.14369793943726280529) < kTol);
  CHECK(std::abs(r2.g - 0.11194924112268250413) < kTol);

  ThresholdGap r1 = threshold_gap(EntropyFamily::Renyi, Order::one(), 2);
  CHECK(std::abs(r1.g - 0.05365061554658404004) < kTol);

  ThresholdGap t25 = threshold_gap(EntropyFamily::Tsallis, Order::real(2.5), 2);
  CHECK(std::abs(t25.g - 0.10371986230402653671) < kTol);

  ThresholdGap t8 = threshold_gap(EntropyFamily::Tsallis, Order::real(8.0), 3);
  CHECK(std::abs(t8.t - 0.056492396763392857143) < kTol);
  CHECK(std::abs(t8.g - 0.052028111049107142857) < kTol);
}

TEST_CASE("appendix function spot values at x = 1/2") {
  CHECK(std::abs(fact_i1(0.5, 1.0) - 0.022224838907644084913) < kTol);
  CHECK(std::abs(fact_i2(0.5) - (-0.66313824443056124647)) < kTol);
  CHECK(std::abs(fact_g1(0.5) - (-0.16620911778232137575)) < kTol);
  CHECK(std::abs(fact_g2(0.5) - 0.10966530454225844783) < kTol);
  CHECK(std::abs(fact_j1(0.5, 1.0) - 0.14851057686172916744) < kTol);
  CHECK(std::abs(fact_j2(0.5) - 0.017698540920592208309) < kTol);
  // with the consistent sign, J1(x;0) coincides with J2(x)
  CHECK(std::abs(fact_j1(0.5, 0.0) - fact_j2(0.5)) < 1e-15);
  CHECK(std::abs(fact_a1_derivative_constant() - 0.094445831334236099728) < kTol);
}
