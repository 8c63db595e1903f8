#include <cmath>
#include <random>

#include "doctest.h"
#include "entrolab/reduction.hpp"
#include "test_helpers.hpp"

using namespace entrolab;

namespace {
constexpr double kLn2 = 0.69314718055994530942;

double gadget_overlap_sq(const SyntheticBqpInstance& bqp) {
  auto [q0, q1] = infidelity_gadget(bqp.circuit);
  StateVector psi0 = simulate(q0, StateVector::zero(q0.width));
  StateVector psi1 = simulate(q1, StateVector::zero(q1.width));
  return std::norm(overlap(psi0, psi1));
}
}  // namespace

TEST_CASE("gadget realizes the declared overlap identity") {
  for (double ap : {0.0, 0.1, 0.5, 0.8, 0.9375, 1.0}) {
    SyntheticBqpInstance bqp = synthesize_bqp_instance(3, ap);
    CHECK(std::abs(gadget_overlap_sq(bqp) - (1.0 - ap * ap)) < 1e-12);
  }
  // the spot values: certain acceptance gives orthogonal-free overlap 0,
  // certain rejection gives overlap 1, 0.8 gives 0.36
  CHECK(std::abs(gadget_overlap_sq(synthesize_bqp_instance(2, 1.0)) - 0.0) < 1e-12);
  CHECK(std::abs(gadget_overlap_sq(synthesize_bqp_instance(2, 0.0)) - 1.0) < 1e-12);
  CHECK(std::abs(gadget_overlap_sq(synthesize_bqp_instance(2, 0.8)) - 0.36) < 1e-12);
}

TEST_CASE("gadget requires a single designated output wire") {
  Circuit c;
  c.width = 2;
  c.outputs = {0, 1};
  CHECK_THROWS_AS(infidelity_gadget(c), Error);
}

TEST_CASE("mixer of identical branches is the pure projector") {
  Circuit q;
  q.width = 2;
  q.outputs = {0, 1};
  q.gates.push_back(Gate::h(0));
  Circuit m = rank2_mixer(q, q);
  DensityMatrix rho = reduced_state(m, StateVector::zero(m.width));
  CHECK(std::abs(purity(rho) - 1.0) < 1e-12);
  auto s = spectrum(rho);
  CHECK(std::abs(s[0] - 1.0) < 1e-10);
}

TEST_CASE("mixer of identity and X yields a maximally mixed qubit") {
  Circuit id;
  id.width = 1;
  id.outputs = {0};
  Circuit xx = id;
  xx.gates.push_back(Gate::x(0));
  Circuit m = rank2_mixer(id, xx);
  DensityMatrix rho = reduced_state(m, StateVector::zero(2));
  CHECK(std::abs(rho.at(0, 0).real() - 0.5) < 1e-12);
  CHECK(std::abs(rho.at(1, 1).real() - 0.5) < 1e-12);
  CHECK(std::abs(rho.at(0, 1)) < 1e-12);
}

TEST_CASE("mixer reduced state equals the explicit uniform mixture") {
  std::mt19937_64 gen(53);
  for (int rep = 0; rep < 20; ++rep) {
    int width = 3;
    Circuit q0 = testing::random_circuit(gen, width, 18);
    Circuit q1 = testing::random_circuit(gen, width, 18);
    StateVector psi0 = simulate(q0, StateVector::zero(width));
    StateVector psi1 = simulate(q1, StateVector::zero(width));

    Circuit m = rank2_mixer(q0, q1);
    DensityMatrix rho = reduced_state(m, StateVector::zero(width + 1));
    DensityMatrix expect =
        mix(DensityMatrix::from_pure(psi0), DensityMatrix::from_pure(psi1), 0.5);
    for (std::size_t i = 0; i < rho.dim(); ++i)
      for (std::size_t j = 0; j < rho.dim(); ++j)
        CHECK(std::abs(rho.at(i, j) - expect.at(i, j)) < 1e-9);

    double ov = std::abs(overlap(psi0, psi1));
    auto s = spectrum(rho);
    CHECK(std::abs(s[0] - (1.0 + ov) / 2.0) < 1e-9);
    CHECK(std::abs(s[1] - (1.0 - ov) / 2.0) < 1e-9);
  }
}

TEST_CASE("threshold and gap at order 2") {
  ThresholdGap t5 = threshold_gap(EntropyFamily::Tsallis, Order::real(2.0), 2);
  CHECK(t5.t == 0.15625);
  CHECK(t5.g == 0.125);
  CHECK(t5.valid);

  ThresholdGap r5 = threshold_gap(EntropyFamily::Renyi, Order::real(2.0), 2);
  double p_yes = kLn2 - 0.5 + 0.0625;
  double p_no = -std::log1p(-1.0 / 32.0);
  CHECK(std::abs(r5.t - 0.5 * (p_yes + p_no)) < 1e-16);
  CHECK(std::abs(r5.g - 0.5 * (p_yes - p_no)) < 1e-16);
  CHECK(std::abs(r5.g - 0.1120) < 1e-4);
}

TEST_CASE("threshold anchors from the proofs") {
  // scaled gap at the q in (2,3] family: (q-1) g(2;q) = (2^(3-q) + 9q - 4)/128
  for (double q : {2.0, 2.2, 2.5, 2.8, 3.0}) {
    double g = threshold_detail::tsallis_2_to_3(2.0, q).g;
    double closed = (std::exp2(3.0 - q) + 9.0 * q - 4.0) / 128.0;
    CHECK(std::abs((q - 1.0) * g - closed) < 1e-15);
  }
  CHECK((2.0 - 1.0) * threshold_detail::tsallis_2_to_3(2.0, 2.0).g == 0.125);

  // scaled gap at the q > 3 family evaluated at real n = log2(q):
  // q^2 (q-1) g = (q^2 - 9q/4 + 1)/2 - 2^-q (q-1)^2
  for (double q : {3.0, 4.0, 5.5, 8.0}) {
    double n = std::log2(q);
    double g = threshold_detail::tsallis_above3(n, q).g;
    double closed = 0.5 * (q * q - 2.25 * q + 1.0) - std::exp2(-q) * (q - 1.0) * (q - 1.0);
    CHECK(std::abs(q * q * (q - 1.0) * g - closed) < 1e-12);
  }
  CHECK(std::abs(3.0 * 3.0 * 2.0 * threshold_detail::tsallis_above3(std::log2(3.0), 3.0).g -
                 1.125) < 1e-13);

  // displayed below-2 anchor at (n,alpha) = (2,1) clears 1/16; the general
  // dispatch formula stays positive there as well
  CHECK(threshold_detail::renyi_below2_gap_anchor(1.0) > 1.0 / 16.0);
  CHECK(threshold_gap(EntropyFamily::Renyi, Order::one(), 2).g > 0.0);

  // limiting gap of the above-2 family at n = 2 clears 1/21
  ThresholdGap inf2 = threshold_gap(EntropyFamily::Renyi, Order::infinity(), 2);
  CHECK(inf2.g > 1.0 / 21.0);
  CHECK(std::abs(inf2.g - (-7.0 / 64.0 - 2.25 * kLn2 + std::log(31.0) / 2.0)) < 1e-15);
}

TEST_CASE("n-range enforcement names the minimum") {
  CHECK(min_instance_size(EntropyFamily::Renyi, Order::real(0.5)) == 4);
  CHECK(min_instance_size(EntropyFamily::Tsallis, Order::real(0.25)) == 4);
  CHECK(min_instance_size(EntropyFamily::Tsallis, Order::real(8.0)) == 3);
  CHECK(min_instance_size(EntropyFamily::Tsallis, Order::real(2.5)) == 2);
  try {
    threshold_gap(EntropyFamily::Renyi, Order::real(0.5), 2);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("minimum 4") != std::string::npos);
  }
  CHECK_THROWS_AS(threshold_gap(EntropyFamily::Tsallis, Order::zero(), 4), Error);
  CHECK_THROWS_AS(threshold_gap(EntropyFamily::Tsallis, Order::infinity(), 4), Error);
}

TEST_CASE("gap positivity and growth across the families") {
  std::vector<std::pair<EntropyFamily, Order>> cases = {
      {EntropyFamily::Renyi, Order::real(0.5)},
      {EntropyFamily::Renyi, Order::one()},
      {EntropyFamily::Renyi, Order::real(1.7)},
      {EntropyFamily::Renyi, Order::real(2.0)},
      {EntropyFamily::Renyi, Order::real(5.0)},
      {EntropyFamily::Renyi, Order::infinity()},
      {EntropyFamily::Tsallis, Order::real(0.5)},
      {EntropyFamily::Tsallis, Order::one()},
      {EntropyFamily::Tsallis, Order::real(2.0)},
      {EntropyFamily::Tsallis, Order::real(2.5)},
      {EntropyFamily::Tsallis, Order::real(3.0)},
      {EntropyFamily::Tsallis, Order::real(8.0)},
  };
  for (const auto& [fam, ord] : cases) {
    int lo = min_instance_size(fam, ord);
    double prev = 0.0;
    for (int n = lo; n <= 12; ++n) {
      ThresholdGap tg = threshold_gap(fam, ord, n);
      INFO("order ", ord.str(), " n ", n);
      CHECK(tg.valid);
      CHECK(tg.g > 0.0);
      CHECK(tg.g > prev);  // monotone growth over the tested range
      prev = tg.g;
    }
  }
}

TEST_CASE("build, serialize, parse, verify round trip") {
  SyntheticBqpInstance bqp = synthesize_bqp_instance(2, 0.96875);
  ReductionInstance inst = build_instance(bqp, EntropyFamily::Tsallis, Order::real(2.0));
  CHECK(inst.n == 3);
  CHECK(inst.label == InstanceLabel::Yes);

  std::string text = serialize_instance(inst);
  ReductionInstance back = parse_instance(text);
  CHECK(back.n == inst.n);
  CHECK(back.tg.t == inst.tg.t);
  CHECK(back.tg.g == inst.tg.g);
  CHECK(back.label == inst.label);
  CHECK(serialize_instance(back) == text);

  VerifyResult res = verify_instance(back);
  CHECK(res.verdict == Verdict::Yes);
  CHECK(res.rank <= 2);
}

TEST_CASE("labels follow the acceptance promise") {
  auto label_of = [](int n, double ap) {
    SyntheticBqpInstance bqp = synthesize_bqp_instance(n - 1, ap);
    return build_instance(bqp, EntropyFamily::Tsallis, Order::real(2.0)).label;
  };
  CHECK(label_of(3, 1.0) == InstanceLabel::Yes);
  CHECK(label_of(3, 1.0 - std::exp2(-4.0)) == InstanceLabel::Yes);
  CHECK(label_of(3, 0.0) == InstanceLabel::No);
  CHECK(label_of(3, std::exp2(-4.0)) == InstanceLabel::No);
  CHECK(label_of(3, 0.5) == InstanceLabel::Unknown);
}

TEST_CASE("unknown-label instances verify without assertion") {
  SyntheticBqpInstance bqp = synthesize_bqp_instance(2, 0.5);
  ReductionInstance inst = build_instance(bqp, EntropyFamily::Renyi, Order::real(2.0));
  CHECK(inst.label == InstanceLabel::Unknown);
  VerifyResult res = verify_instance(inst);  // any verdict is acceptable
  CHECK(res.rank <= 2);
}

TEST_CASE("corrupted headers are rejected") {
  SyntheticBqpInstance bqp = synthesize_bqp_instance(2, 1.0);
  ReductionInstance inst = build_instance(bqp, EntropyFamily::Renyi, Order::real(2.0));
  std::string text = serialize_instance(inst);
  CHECK_THROWS_AS(parse_instance(text.substr(text.find('\n') + 1)), Error);
  std::string broken = text;
  broken.replace(broken.find("family="), 7, "fam=");
  CHECK_THROWS_AS(parse_instance(broken), Error);
}

TEST_CASE("pipeline soundness spot checks across families") {
  struct Case {
    EntropyFamily fam;
    Order ord;
  };
  std::vector<Case> cases = {{EntropyFamily::Tsallis, Order::real(2.0)},
                             {EntropyFamily::Tsallis, Order::real(0.5)},
                             {EntropyFamily::Tsallis, Order::real(2.5)},
                             {EntropyFamily::Tsallis, Order::real(8.0)},
                             {EntropyFamily::Renyi, Order::one()},
                             {EntropyFamily::Renyi, Order::real(3.0)},
                             {EntropyFamily::Renyi, Order::infinity()}};
  for (const auto& cs : cases) {
    int n = std::max(2, min_instance_size(cs.fam, cs.ord));
    double hi = 1.0 - std::exp2(static_cast<double>(-n - 1));
    double lo = std::exp2(static_cast<double>(-n - 1));
    for (double ap : {hi, 1.0}) {
      auto inst = build_instance(synthesize_bqp_instance(n - 1, ap), cs.fam, cs.ord);
      CHECK(verify_instance(inst).verdict == Verdict::Yes);
    }
    for (double ap : {0.0, lo}) {
      auto inst = build_instance(synthesize_bqp_instance(n - 1, ap), cs.fam, cs.ord);
      CHECK(verify_instance(inst).verdict == Verdict::No);
    }
  }
}
