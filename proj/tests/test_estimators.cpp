#include <cmath>
#include <random>

#include "doctest.h"
#include "entrolab/estimators.hpp"
#include "entrolab/reduction.hpp"
#include "test_helpers.hpp"

using namespace entrolab;

TEST_CASE("swap test probability on known pairs") {
  DensityMatrix pure = DensityMatrix::from_pure(StateVector::zero(1));
  CHECK(swap_test_prob(pure, pure) == 1.0);

  StateVector one(1, {cplx{0.0, 0.0}, cplx{1.0, 0.0}});
  DensityMatrix rho1 = DensityMatrix::from_pure(one);
  CHECK(swap_test_prob(pure, rho1) == 0.5);

  DensityMatrix mixed = DensityMatrix::maximally_mixed(1);
  CHECK(std::abs(swap_test_prob(mixed, mixed) - 0.75) < 1e-15);
  CHECK_THROWS_AS(swap_test_prob(pure, DensityMatrix::maximally_mixed(2)), Error);
}

TEST_CASE("swap test agrees with the spectrum purity") {
  std::mt19937_64 gen(61);
  for (int rep = 0; rep < 10; ++rep) {
    Circuit c = testing::random_circuit(gen, 4, 25);
    c.outputs = {0, 1};
    DensityMatrix rho = reduced_state(c, StateVector::zero(4));
    auto spec = spectrum(rho);
    double from_spec = 0.0;
    for (double v : spec) from_spec += v * v;
    CHECK(std::abs(swap_test_prob(rho, rho) - 0.5 * (1.0 + from_spec)) < 1e-10);
  }
}

TEST_CASE("sampling is seeded and reproducible") {
  DensityMatrix mixed = DensityMatrix::maximally_mixed(1);
  ShotPlan plan{20000, 424242};
  SwapTestSample a = swap_test_sample(mixed, mixed, plan);
  SwapTestSample b = swap_test_sample(mixed, mixed, plan);
  CHECK(a.zeros == b.zeros);
  CHECK(a.ones == b.ones);
  CHECK(a.estimate == b.estimate);

  SwapTestSample c = swap_test_sample(mixed, mixed, ShotPlan{20000, 7});
  CHECK(a.zeros != c.zeros);  // overwhelmingly likely for distinct seeds
}

TEST_CASE("identical pure inputs give all-zero outcomes") {
  DensityMatrix pure = DensityMatrix::from_pure(StateVector::zero(2));
  SwapTestSample s = swap_test_sample(pure, pure, ShotPlan{5000, 9});
  CHECK(s.ones == 0);
  CHECK(s.estimate == 1.0);
}

TEST_CASE("estimator concentrates at the binomial rate") {
  std::mt19937_64 gen(71);
  Circuit c = testing::random_circuit(gen, 4, 20);
  c.outputs = {0, 1};
  DensityMatrix rho = reduced_state(c, StateVector::zero(4));
  double exact = trace_product(rho, rho);
  for (long long shots : {1000LL, 10000LL, 100000LL}) {
    int ok = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      SwapTestSample s = swap_test_sample(rho, rho, ShotPlan{shots, seed});
      if (std::abs(s.estimate - exact) <= 5.0 / std::sqrt(static_cast<double>(shots)))
        ++ok;
    }
    CHECK(ok >= 95);
  }
}

TEST_CASE("explicit controlled-swap circuit matches the closed form") {
  std::mt19937_64 gen(83);
  for (int wires : {1, 2, 3}) {
    for (int rep = 0; rep < 4; ++rep) {
      Circuit p0 = testing::random_circuit(gen, wires + 1, 16);
      Circuit p1 = testing::random_circuit(gen, wires + 1, 16);
      p0.outputs.clear();
      p1.outputs.clear();
      for (int w = 0; w < wires; ++w) {
        p0.outputs.push_back(w);
        p1.outputs.push_back(w);
      }
      DensityMatrix r0 = reduced_state(p0, StateVector::zero(wires + 1));
      DensityMatrix r1 = reduced_state(p1, StateVector::zero(wires + 1));

      Circuit sw = build_swap_test_circuit(p0, p1);
      StateVector out = simulate(sw, StateVector::zero(sw.width));
      int anc[] = {0};
      double p_gate = measure_probability(out, anc, 0ULL);
      CHECK(std::abs(p_gate - swap_test_prob(r0, r1)) < 1e-10);
    }
  }
}

TEST_CASE("order-0 detector in exact mode") {
  // pure mixer: identical branches
  Circuit id;
  id.width = 2;
  id.outputs = {0, 1};
  Circuit pure_mixer = rank2_mixer(id, id);
  Order0Result r = order0_decide(pure_mixer, std::nullopt);
  CHECK(r.decision == RankDecision::Rank1);
  CHECK(!r.provisional);
  CHECK(r.accept_prob == 0.0);

  // rank-2 mixer from a synthetic instance with middling acceptance
  SyntheticBqpInstance bqp = synthesize_bqp_instance(2, 0.6);
  auto [q0, q1] = infidelity_gadget(bqp.circuit);
  Circuit mixer = rank2_mixer(q0, q1);
  Order0Result r2 = order0_decide(mixer, std::nullopt);
  CHECK(r2.decision == RankDecision::Rank2);
  double v2 = 1.0 - 0.36;  // overlap^2 = 1 - ap^2
  double expect_purity = 0.5 * (1.0 + v2);
  CHECK(std::abs(r2.purity - expect_purity) < 1e-10);
  CHECK(std::abs(r2.accept_prob - 0.5 * (1.0 - expect_purity)) < 1e-10);
}

TEST_CASE("order-0 detector accept probability matches the rank-2 closed form") {
  std::mt19937_64 gen(91);
  auto [a, b] = testing::state_pair_with_overlap(gen, 3, 0.6);
  DensityMatrix rho = mix(DensityMatrix::from_pure(a), DensityMatrix::from_pure(b), 0.5);
  double p = 0.5 * (1.0 - purity(rho));
  CHECK(std::abs(p - 0.16) < 1e-10);
}

TEST_CASE("order-0 sampling is one-sided") {
  Circuit id;
  id.width = 2;
  id.outputs = {0, 1};
  Circuit pure_mixer = rank2_mixer(id, id);
  Order0Result r = order0_decide(pure_mixer, ShotPlan{100000, 3});
  CHECK(r.decision == RankDecision::Rank1);
  CHECK(r.provisional);
  CHECK(r.ones == 0);

  SyntheticBqpInstance bqp = synthesize_bqp_instance(2, 0.7);
  auto [q0, q1] = infidelity_gadget(bqp.circuit);
  Order0Result r2 = order0_decide(rank2_mixer(q0, q1), ShotPlan{100000, 3});
  CHECK(r2.decision == RankDecision::Rank2);
  CHECK(r2.ones > 0);
}
