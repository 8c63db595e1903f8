#include <random>

#include "doctest.h"
#include "entrolab/circuit.hpp"
#include "entrolab/simulator.hpp"
#include "test_helpers.hpp"

using namespace entrolab;

TEST_CASE("emit then parse reproduces the byte-identical text") {
  Circuit body;
  body.width = 3;
  body.gates.push_back(Gate::ry(1.2309594173407747, 1));
  body.gates.push_back(Gate::cnot(1, 2));

  Circuit inner;
  inner.width = 3;
  inner.gates.push_back(Gate::x(2));

  Circuit c;
  c.width = 3;
  c.outputs = {0, 1};
  c.gates.push_back(Gate::h(0));
  body.gates.push_back(Gate::adjoint_of(inner));
  c.gates.push_back(Gate::controlled(0, body));
  c.gates.push_back(Gate::x(2));

  std::string text = emit_circuit(c);
  Circuit parsed = parse_circuit(text);
  CHECK(emit_circuit(parsed) == text);
}

TEST_CASE("round trip preserves random circuits bit-exactly") {
  std::mt19937_64 gen(41);
  for (int rep = 0; rep < 50; ++rep) {
    Circuit c = testing::random_circuit(gen, 2 + static_cast<int>(gen() % 4), 25);
    std::string text = emit_circuit(c);
    Circuit parsed = parse_circuit(text);
    CHECK(emit_circuit(parsed) == text);

    // and the parsed circuit acts identically
    StateVector psi = testing::random_state(gen, c.width);
    StateVector a = simulate(c, psi);
    StateVector b = simulate(parsed, psi);
    for (std::size_t i = 0; i < a.dim(); ++i) {
      CHECK(std::abs(a.amplitudes()[i] - b.amplitudes()[i]) == 0.0);
    }
  }
}

TEST_CASE("parse accepts hand-written wide spacing") {
  Circuit c = parse_circuit("width 2\noutputs  0   1\nH 0\nCNOT 0 1\n");
  CHECK(c.width == 2);
  CHECK(c.gates.size() == 2);
}

TEST_CASE("parse rejects malformed inputs") {
  CHECK_THROWS_AS(parse_circuit("H 0\n"), Error);                    // no header
  CHECK_THROWS_AS(parse_circuit("width 2\nH 0\n"), Error);           // no outputs
  CHECK_THROWS_AS(parse_circuit("width 2\noutputs 0\nFOO 1\n"), Error);
  CHECK_THROWS_AS(parse_circuit("width 2\noutputs 0\nCTRL 0 {\nX 1\n"), Error);
  CHECK_THROWS_AS(parse_circuit("width 2\noutputs 0\nCNOT 0 0\n"), Error);
  CHECK_THROWS_AS(parse_circuit("width 2\noutputs 0 5\n"), Error);
  CHECK_THROWS_AS(parse_circuit("width 2\noutputs 0\nCTRL 1 {\nX 1\n}\n"), Error);
}

TEST_CASE("generic unitaries have no textual form") {
  Circuit c;
  c.width = 1;
  c.outputs = {0};
  c.gates.push_back(
      Gate::unitary1q(0, {cplx{0, 1}, cplx{0, 0}, cplx{0, 0}, cplx{0, -1}}));
  CHECK_THROWS_AS(emit_circuit(c), Error);
}

TEST_CASE("non-unitary payloads are rejected") {
  std::array<cplx, 4> bad = {cplx{1, 0}, cplx{0.1, 0}, cplx{0, 0}, cplx{1, 0}};
  CHECK_THROWS_AS(Gate::unitary1q(0, bad), Error);
}
