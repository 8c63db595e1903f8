#pragma once

#include <array>
#include <complex>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "entrolab/error.hpp"

namespace entrolab {

using cplx = std::complex<double>;

struct Circuit;

// Gate kinds: elementary gates plus first-class controlled-subcircuit and
// adjoint-of-subcircuit wrappers (kept at that granularity rather than
// compiled down, so constructed circuits read exactly as built).
struct Gate {
  enum class Kind { H, X, Cnot, Ry, Unitary1Q, Controlled, Adjoint };

  Kind kind;
  std::vector<int> targets;                  // wires; Cnot: {control, target}
  double theta = 0.0;                        // Ry angle (radians)
  std::array<cplx, 4> matrix{};              // Unitary1Q, row-major
  std::shared_ptr<const Circuit> body;       // Controlled / Adjoint payload

  static Gate h(int wire);
  static Gate x(int wire);
  static Gate cnot(int control, int target);
  static Gate ry(double theta, int wire);
  // Validates unitarity of the payload: max |U†U - I| <= 1e-12.
  static Gate unitary1q(int wire, const std::array<cplx, 4>& u);
  static Gate controlled(int control, Circuit sub);
  static Gate adjoint_of(Circuit sub);

  Gate adjoint() const;
};

struct Circuit {
  int width = 0;
  std::vector<int> outputs;  // declared output wires, ordered
  std::vector<Gate> gates;

  // Checks wire bounds, distinct targets and output declarations.
  // Violations name the offending gate index.
  void validate() const;

  Circuit adjoint() const;
};

// Appends `other`'s gates (same width).
void append(Circuit& c, const Circuit& other);

// Returns a copy with every wire index shifted by `offset` and the width
// extended to `new_width`.
Circuit shift_wires(const Circuit& c, int offset, int new_width);

// Textual format, one gate per line:
//   width m
//   outputs i j k
//   H w | X w | CNOT c t | RY theta w | CTRL c { ... } | ADJ { ... }
// Emission is canonical; parse(emit(c)) reproduces the byte-identical text.
std::string emit_circuit(const Circuit& c);
Circuit parse_circuit(std::string_view text);

}  // namespace entrolab
