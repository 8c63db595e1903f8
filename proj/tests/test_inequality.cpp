#include <cmath>
#include <random>

#include "doctest.h"
#include "entrolab/inequality.hpp"
#include "entrolab/proof_functions.hpp"

using namespace entrolab;

TEST_CASE("full suite passes on the default grid") {
  GridSpec grid;
  auto results = run_inequality_suite(grid);
  CHECK(results.size() >= 20);
  for (const auto& r : results) {
    INFO(r.claim_id, " margin ", r.worst_margin, " at x=", r.worst_x, " order ",
         r.worst_order);
    CHECK(r.pass);
    CHECK(r.worst_margin >= -grid.slack);
  }
}

TEST_CASE("results arrive sorted and stable across thread counts") {
  GridSpec grid;
  grid.x_points = 101;
  auto seq = run_inequality_suite(grid, {}, 1);
  auto par = run_inequality_suite(grid, {}, 4);
  REQUIRE(seq.size() == par.size());
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    CHECK(seq[i].claim_id < seq[i + 1].claim_id);
  }
  for (std::size_t i = 0; i < seq.size(); ++i) {
    CHECK(seq[i].claim_id == par[i].claim_id);
    CHECK(seq[i].worst_margin == par[i].worst_margin);
    CHECK(seq[i].worst_x == par[i].worst_x);
  }
}

TEST_CASE("randomized grids pass identically") {
  std::mt19937_64 gen(101);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  GridSpec grid;
  grid.explicit_x.push_back(0.0);
  grid.explicit_x.push_back(1.0);
  for (int i = 0; i < 1000; ++i) grid.explicit_x.push_back(uni(gen));
  for (const auto& r : run_inequality_suite(grid)) {
    INFO(r.claim_id, " margin ", r.worst_margin);
    CHECK(r.pass);
  }
}

TEST_CASE("filtering by claim id") {
  GridSpec grid;
  grid.x_points = 101;
  auto one = run_inequality_suite(grid, {"fact-A2-G1"});
  REQUIRE(one.size() == 1);
  CHECK(one[0].claim_id == "fact-A2-G1");
  CHECK_THROWS_AS(run_inequality_suite(grid, {"no-such-claim"}), Error);
}

TEST_CASE("equality saturation shows up as near-zero margins") {
  GridSpec grid;
  grid.explicit_x = {0.0, 0.125, 0.25, 0.5, 0.75, 1.0};
  // order-2 bounds are equalities, so those runs sit at margin ~ 0
  auto rs = run_inequality_suite(grid, {"renyi-upper-0a2", "tsallis-band-2q3-lower"});
  for (const auto& r : rs) {
    CHECK(r.pass);
    CHECK(r.worst_margin >= -grid.slack);
  }
}

TEST_CASE("appendix facts evaluate to the documented spot values") {
  // endpoint values and interior signs
  CHECK(fact_i1(0.0, 1.0) == 0.0);
  CHECK(fact_i1(1.0, 1.0) == 0.0);
  CHECK(fact_i1(0.5, 1.0) > 0.0);
  CHECK(fact_i2(0.5) < 0.0);
  CHECK(fact_g1(0.5) < 0.0);
  CHECK(fact_g2(0.5) > 0.0);
  CHECK(fact_j1(0.5, 0.0) > 0.0);
  CHECK(fact_j1(0.5, 1.0) > 0.0);
  CHECK(fact_j2(0.5) > 0.0);

  double c = fact_a1_derivative_constant();
  CHECK(c > 1.0 / 11.0);
  CHECK(std::abs(fact_i1_half_slope(0.5, 1e-6) - c) < 1e-6);
}

TEST_CASE("auxiliary function identities") {
  for (double q : {0.3, 0.7}) {
    CHECK(std::abs(aux_t(0.0, q)) == 0.0);
    CHECK(std::abs(aux_t(1.0, q)) < 1e-13);
    CHECK(std::abs(aux_t_dx(0.0, q) - (2.0 * q - std::exp2(q))) < 1e-14);
  }
  for (double q : {1.2, 1.8}) {
    CHECK(std::abs(aux_u(1.0, q)) < 1e-13);
    CHECK(std::abs(aux_u_dx(1.0, q) - std::exp2(q - 1.0) * (2.0 - q)) < 1e-13);
  }
  for (double x : {0.0, 0.3, 0.9, 1.0}) CHECK(std::abs(aux_g(x, 2.0)) < 1e-13);
}

TEST_CASE("grid spec validation") {
  GridSpec g;
  g.x_points = 50;
  CHECK_THROWS_AS(g.grid(), Error);
  g.x_points = 101;
  g.slack = 1e-3;
  CHECK_THROWS_AS(g.grid(), Error);
}

TEST_CASE("qstar scan finds a transition for interior x") {
  auto pts = scan_qstar({0.1, 0.2, 0.3, 0.4});
  for (const auto& p : pts) {
    CHECK(p.found);
    // reported transitions live in the expected band
    CHECK(p.q_star > 1.5);
    CHECK(p.q_star < 3.5);
  }
}
