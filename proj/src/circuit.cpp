#include "entrolab/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

namespace entrolab {

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void check_unitary_1q(const std::array<cplx, 4>& u) {
  // rows of U†U - I, entrywise max magnitude <= 1e-12
  cplx g00 = std::conj(u[0]) * u[0] + std::conj(u[2]) * u[2] - 1.0;
  cplx g01 = std::conj(u[0]) * u[1] + std::conj(u[2]) * u[3];
  cplx g10 = std::conj(u[1]) * u[0] + std::conj(u[3]) * u[2];
  cplx g11 = std::conj(u[1]) * u[1] + std::conj(u[3]) * u[3] - 1.0;
  double worst = std::max({std::abs(g00), std::abs(g01), std::abs(g10), std::abs(g11)});
  if (worst > 1e-12) throw Error("gate payload is not unitary");
}

}  // namespace

Gate Gate::h(int wire) {
  Gate g;
  g.kind = Kind::H;
  g.targets = {wire};
  return g;
}

Gate Gate::x(int wire) {
  Gate g;
  g.kind = Kind::X;
  g.targets = {wire};
  return g;
}

Gate Gate::cnot(int control, int target) {
  Gate g;
  g.kind = Kind::Cnot;
  g.targets = {control, target};
  return g;
}

Gate Gate::ry(double theta, int wire) {
  Gate g;
  g.kind = Kind::Ry;
  g.targets = {wire};
  g.theta = theta;
  return g;
}

Gate Gate::unitary1q(int wire, const std::array<cplx, 4>& u) {
  check_unitary_1q(u);
  Gate g;
  g.kind = Kind::Unitary1Q;
  g.targets = {wire};
  g.matrix = u;
  return g;
}

Gate Gate::controlled(int control, Circuit sub) {
  Gate g;
  g.kind = Kind::Controlled;
  g.targets = {control};
  g.body = std::make_shared<Circuit>(std::move(sub));
  return g;
}

Gate Gate::adjoint_of(Circuit sub) {
  Gate g;
  g.kind = Kind::Adjoint;
  g.body = std::make_shared<Circuit>(std::move(sub));
  return g;
}

Gate Gate::adjoint() const {
  switch (kind) {
    case Kind::H:
    case Kind::X:
    case Kind::Cnot:
      return *this;
    case Kind::Ry: {
      Gate g = *this;
      g.theta = -theta;
      return g;
    }
    case Kind::Unitary1Q: {
      Gate g = *this;
      g.matrix = {std::conj(matrix[0]), std::conj(matrix[2]),
                  std::conj(matrix[1]), std::conj(matrix[3])};
      return g;
    }
    case Kind::Controlled: {
      Gate g = *this;
      g.body = std::make_shared<Circuit>(body->adjoint());
      return g;
    }
    case Kind::Adjoint: {
      // adjoint of adjoint-of(C) is just C inlined as a fresh Adjoint pair
      Gate g;
      g.kind = Kind::Adjoint;
      g.body = std::make_shared<Circuit>(body->adjoint());
      return g;
    }
  }
  throw Error("unknown gate kind");
}

namespace {

void validate_gates(const std::vector<Gate>& gates, int width,
                    const std::string& where, int extra_excluded) {
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const Gate& g = gates[i];
    std::string at = where + " gate " + std::to_string(i);
    std::set<int> seen;
    for (int w : g.targets) {
      if (w < 0 || w >= width) throw Error(at + ": wire out of range");
      if (!seen.insert(w).second) throw Error(at + ": duplicate wire");
      if (w == extra_excluded) throw Error(at + ": wire collides with enclosing control");
    }
    switch (g.kind) {
      case Gate::Kind::H:
      case Gate::Kind::X:
      case Gate::Kind::Ry:
      case Gate::Kind::Unitary1Q:
        if (g.targets.size() != 1) throw Error(at + ": expects one wire");
        break;
      case Gate::Kind::Cnot:
        if (g.targets.size() != 2) throw Error(at + ": expects two wires");
        break;
      case Gate::Kind::Controlled:
        if (g.targets.size() != 1 || !g.body) throw Error(at + ": malformed control");
        validate_gates(g.body->gates, width, at + " body", g.targets[0]);
        break;
      case Gate::Kind::Adjoint:
        if (!g.targets.empty() || !g.body) throw Error(at + ": malformed adjoint");
        validate_gates(g.body->gates, width, at + " body", extra_excluded);
        break;
    }
    if (g.kind == Gate::Kind::Unitary1Q) check_unitary_1q(g.matrix);
  }
}

}  // namespace

void Circuit::validate() const {
  if (width < 1) throw Error("circuit width must be positive");
  std::set<int> seen;
  for (int w : outputs) {
    if (w < 0 || w >= width) throw Error("output wire out of range");
    if (!seen.insert(w).second) throw Error("duplicate output wire");
  }
  validate_gates(gates, width, "", -1);
}

Circuit Circuit::adjoint() const {
  Circuit out;
  out.width = width;
  out.outputs = outputs;
  out.gates.reserve(gates.size());
  for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
    out.gates.push_back(it->adjoint());
  }
  return out;
}

void append(Circuit& c, const Circuit& other) {
  if (c.width != other.width) throw Error("append: width mismatch");
  c.gates.insert(c.gates.end(), other.gates.begin(), other.gates.end());
}

namespace {

Gate shift_gate(const Gate& g, int offset, int new_width);

std::vector<Gate> shift_gates(const std::vector<Gate>& gs, int offset,
                              int new_width) {
  std::vector<Gate> out;
  out.reserve(gs.size());
  for (const Gate& g : gs) out.push_back(shift_gate(g, offset, new_width));
  return out;
}

Gate shift_gate(const Gate& g, int offset, int new_width) {
  Gate out = g;
  for (int& w : out.targets) w += offset;
  if (g.body) {
    Circuit b;
    b.width = new_width;
    b.gates = shift_gates(g.body->gates, offset, new_width);
    out.body = std::make_shared<Circuit>(std::move(b));
  }
  return out;
}

}  // namespace

Circuit shift_wires(const Circuit& c, int offset, int new_width) {
  Circuit out;
  out.width = new_width;
  for (int w : c.outputs) out.outputs.push_back(w + offset);
  out.gates = shift_gates(c.gates, offset, new_width);
  out.validate();
  return out;
}

namespace {

void emit_gates(std::ostringstream& os, const std::vector<Gate>& gates,
                int indent) {
  std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  for (const Gate& g : gates) {
    switch (g.kind) {
      case Gate::Kind::H:
        os << pad << "H " << g.targets[0] << "\n";
        break;
      case Gate::Kind::X:
        os << pad << "X " << g.targets[0] << "\n";
        break;
      case Gate::Kind::Cnot:
        os << pad << "CNOT " << g.targets[0] << " " << g.targets[1] << "\n";
        break;
      case Gate::Kind::Ry:
        os << pad << "RY " << fmt17(g.theta) << " " << g.targets[0] << "\n";
        break;
      case Gate::Kind::Unitary1Q:
        throw Error("generic unitary gates have no textual form");
      case Gate::Kind::Controlled:
        os << pad << "CTRL " << g.targets[0] << " {\n";
        emit_gates(os, g.body->gates, indent + 1);
        os << pad << "}\n";
        break;
      case Gate::Kind::Adjoint:
        os << pad << "ADJ {\n";
        emit_gates(os, g.body->gates, indent + 1);
        os << pad << "}\n";
        break;
    }
  }
}

}  // namespace

std::string emit_circuit(const Circuit& c) {
  c.validate();
  std::ostringstream os;
  os << "width " << c.width << "\n";
  os << "outputs";
  for (int w : c.outputs) os << " " << w;
  os << "\n";
  emit_gates(os, c.gates, 0);
  return os.str();
}

namespace {

struct Parser {
  std::vector<std::string> tokens_by_line;
  std::size_t pos = 0;

  static std::vector<std::string> split(std::string_view line) {
    std::vector<std::string> out;
    std::string clean(line);
    while (!clean.empty() && clean.back() == '\r') clean.pop_back();
    std::istringstream is{clean};
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
  }
};

int parse_int(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw Error("cannot parse " + what + " '" + s + "'");
  }
}

double parse_double(const std::string& s, const std::string& what) {
  char* end = nullptr;
  double v = std::strtod(s.c_str(), &end);
  if (end == nullptr || *end != '\0' || s.empty()) {
    throw Error("cannot parse " + what + " '" + s + "'");
  }
  return v;
}

// Parses gate lines until `}` (when nested) or end of input.
std::vector<Gate> parse_gates(std::vector<std::vector<std::string>>& lines,
                              std::size_t& i, int width, bool nested) {
  std::vector<Gate> out;
  while (i < lines.size()) {
    auto& t = lines[i];
    if (t.empty()) {
      ++i;
      continue;
    }
    const std::string& op = t[0];
    if (op == "}") {
      if (!nested) throw Error("unexpected '}'");
      ++i;
      return out;
    }
    if (op == "H" || op == "X") {
      if (t.size() != 2) throw Error(op + " expects one wire");
      int w = parse_int(t[1], "wire");
      out.push_back(op == "H" ? Gate::h(w) : Gate::x(w));
      ++i;
    } else if (op == "CNOT") {
      if (t.size() != 3) throw Error("CNOT expects two wires");
      out.push_back(Gate::cnot(parse_int(t[1], "wire"), parse_int(t[2], "wire")));
      ++i;
    } else if (op == "RY") {
      if (t.size() != 3) throw Error("RY expects an angle and a wire");
      out.push_back(Gate::ry(parse_double(t[1], "angle"), parse_int(t[2], "wire")));
      ++i;
    } else if (op == "CTRL") {
      if (t.size() != 3 || t[2] != "{") throw Error("CTRL expects 'CTRL c {'");
      int ctrl = parse_int(t[1], "wire");
      ++i;
      Circuit body;
      body.width = width;
      body.gates = parse_gates(lines, i, width, true);
      out.push_back(Gate::controlled(ctrl, std::move(body)));
    } else if (op == "ADJ") {
      if (t.size() != 2 || t[1] != "{") throw Error("ADJ expects 'ADJ {'");
      ++i;
      Circuit body;
      body.width = width;
      body.gates = parse_gates(lines, i, width, true);
      out.push_back(Gate::adjoint_of(std::move(body)));
    } else {
      throw Error("unknown gate '" + op + "'");
    }
  }
  if (nested) throw Error("missing '}'");
  return out;
}

}  // namespace

Circuit parse_circuit(std::string_view text) {
  std::vector<std::vector<std::string>> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(Parser::split(text.substr(start, end - start)));
    start = end + 1;
  }

  Circuit c;
  std::size_t i = 0;
  while (i < lines.size() && lines[i].empty()) ++i;
  if (i >= lines.size() || lines[i].size() != 2 || lines[i][0] != "width") {
    throw Error("circuit must start with 'width m'");
  }
  c.width = parse_int(lines[i][1], "width");
  ++i;
  while (i < lines.size() && lines[i].empty()) ++i;
  if (i >= lines.size() || lines[i].empty() || lines[i][0] != "outputs") {
    throw Error("expected 'outputs ...' after width");
  }
  for (std::size_t j = 1; j < lines[i].size(); ++j) {
    c.outputs.push_back(parse_int(lines[i][j], "output wire"));
  }
  ++i;
  c.gates = parse_gates(lines, i, c.width, false);
  c.validate();
  return c;
}

}  // namespace entrolab
