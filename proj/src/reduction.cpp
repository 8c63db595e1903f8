#include "entrolab/reduction.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace entrolab {

namespace {

constexpr double kLn2 = 0.6931471805599453094172321214581766;

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

ThresholdGap from_promise(double p_yes, double p_no) {
  ThresholdGap tg;
  tg.t = 0.5 * (p_yes + p_no);
  tg.g = 0.5 * (p_yes - p_no);
  tg.valid = tg.g > 0.0;
  return tg;
}

}  // namespace

std::string label_str(InstanceLabel l) {
  switch (l) {
    case InstanceLabel::Yes:
      return "YES";
    case InstanceLabel::No:
      return "NO";
    case InstanceLabel::Unknown:
      return "UNKNOWN";
  }
  return "?";
}

InstanceLabel parse_label(const std::string& s) {
  if (s == "YES") return InstanceLabel::Yes;
  if (s == "NO") return InstanceLabel::No;
  if (s == "UNKNOWN") return InstanceLabel::Unknown;
  throw Error("unknown label '" + s + "'");
}

std::string verdict_str(Verdict v) {
  switch (v) {
    case Verdict::Yes:
      return "YES";
    case Verdict::No:
      return "NO";
    case Verdict::Ambiguous:
      return "AMBIGUOUS";
  }
  return "?";
}

SyntheticBqpInstance synthesize_bqp_instance(int n_prime, double accept_prob) {
  if (n_prime < 1) throw Error("instance needs at least one wire");
  if (!(accept_prob >= 0.0 && accept_prob <= 1.0)) {
    throw Error("accept probability outside [0,1]");
  }
  // One rotation on the designated output wire; remaining wires idle. The
  // all-zeros amplitude is (1 - ap^2)^(1/4), so the overlap gadget below
  // lands exactly on |<psi0|psi1>|^2 = 1 - ap^2.
  double amp = std::pow(1.0 - accept_prob * accept_prob, 0.25);
  amp = std::min(1.0, amp);
  double theta = 2.0 * std::acos(amp);

  SyntheticBqpInstance inst;
  inst.n_prime = n_prime;
  inst.accept_prob = accept_prob;
  inst.circuit.width = n_prime;
  inst.circuit.outputs = {0};
  inst.circuit.gates.push_back(Gate::ry(theta, 0));
  inst.circuit.validate();
  return inst;
}

std::pair<Circuit, Circuit> infidelity_gadget(const Circuit& c_prime) {
  c_prime.validate();
  if (c_prime.outputs.size() != 1) {
    throw Error("infidelity gadget needs exactly one designated output wire");
  }
  const int m = c_prime.width;
  const int o = c_prime.outputs[0];
  const int f = m;  // fresh ancilla wire, appended last

  Circuit widened = shift_wires(c_prime, 0, m + 1);

  Circuit q1;
  q1.width = m + 1;
  for (int w = 0; w < m + 1; ++w) q1.outputs.push_back(w);
  q1.gates = widened.gates;
  q1.gates.push_back(Gate::cnot(o, f));
  Circuit body;
  body.width = m + 1;
  body.gates = widened.gates;
  q1.gates.push_back(Gate::adjoint_of(std::move(body)));
  q1.validate();

  Circuit q0;
  q0.width = m + 1;
  q0.outputs = q1.outputs;
  q0.validate();

  return {q0, q1};
}

Circuit rank2_mixer(const Circuit& q0, const Circuit& q1) {
  q0.validate();
  q1.validate();
  if (q0.width != q1.width) throw Error("mixer branches must share a width");
  const int w = q0.width;
  const int anc = w;  // control ancilla, appended last and traced out

  Circuit mixer;
  mixer.width = w + 1;
  for (int i = 0; i < w; ++i) mixer.outputs.push_back(i);

  Circuit body1;
  body1.width = w + 1;
  body1.gates = shift_wires(q1, 0, w + 1).gates;
  Circuit body0;
  body0.width = w + 1;
  body0.gates = shift_wires(q0, 0, w + 1).gates;

  mixer.gates.push_back(Gate::h(anc));
  mixer.gates.push_back(Gate::controlled(anc, std::move(body1)));
  mixer.gates.push_back(Gate::x(anc));
  mixer.gates.push_back(Gate::controlled(anc, std::move(body0)));
  mixer.gates.push_back(Gate::x(anc));
  mixer.validate();
  return mixer;
}

namespace threshold_detail {

ThresholdGap renyi_order2(double n) {
  double p_yes = kLn2 - std::exp2(1.0 - n) + std::exp2(-2.0 * n);
  double p_no = -std::log1p(-std::exp2(-2.0 * n - 1.0));
  return from_promise(p_yes, p_no);
}

ThresholdGap renyi_below2(double n, double alpha) {
  double p_yes = kLn2 - std::exp2(1.0 - n) + std::exp2(-2.0 * n);
  double minus_log2 = -std::log1p(-std::exp2(-2.0 * n - 1.0)) / kLn2;
  double p_no = kLn2 * std::pow(minus_log2, alpha / 2.0);
  return from_promise(p_yes, p_no);
}

ThresholdGap renyi_above2(double n, double alpha, bool is_infinity) {
  double coeff = is_infinity ? 0.5 : alpha / (2.0 * (alpha - 1.0));
  double p_yes = coeff * (kLn2 - std::exp2(1.0 - n) + std::exp2(-2.0 * n));
  double p_no = -std::log1p(-std::exp2(-2.0 * n - 1.0));
  return from_promise(p_yes, p_no);
}

ThresholdGap tsallis_order2(double n) {
  double d = 1.0 - std::exp2(-n);
  double p_yes = 0.5 * d * d;
  double p_no = std::exp2(-2.0 * n - 1.0);
  return from_promise(p_yes, p_no);
}

ThresholdGap tsallis_below2(double n, double q) {
  double half = tsallis_half(Order::real(q));
  double d = 1.0 - std::exp2(-n);
  double p_yes = half * d * d;
  double p_no = half * std::exp2(-n * q);
  return from_promise(p_yes, p_no);
}

ThresholdGap tsallis_2_to_3(double n, double q) {
  double half = tsallis_half(Order::real(q));
  double ratio = q / (4.0 * (q - 1.0));
  double d = 1.0 - std::exp2(-n);
  double p_yes = ratio * d * d;
  double p_no = half * std::exp2(-2.0 * n);
  return from_promise(p_yes, p_no);
}

ThresholdGap tsallis_above3(double n, double q) {
  double half = tsallis_half(Order::real(q));
  double ratio = q / (4.0 * (q - 1.0));
  double d = 1.0 - std::exp2(-n);
  double p_yes = half * d * d;
  double p_no = ratio * std::exp2(-2.0 * n);
  return from_promise(p_yes, p_no);
}

double renyi_below2_gap_anchor(double alpha) {
  // Verbatim displayed n = 2 gap expression for the below-2 family.
  double inner = 5.0 * kLn2 - std::log(31.0);
  return -(kLn2 / 2.0) * (std::pow(inner, alpha / 2.0) - 1.0) - 7.0 / 32.0;
}

}  // namespace threshold_detail

int min_instance_size(EntropyFamily family, const Order& order) {
  if (order.is_zero()) {
    throw Error("order 0 has no threshold family; use the rank detector");
  }
  if (family == EntropyFamily::Renyi) {
    if (order.is_infinity()) return 2;
    double a = order.value();
    if (a < 1.0) return static_cast<int>(std::ceil(2.0 / a));
    return 2;
  }
  if (order.is_infinity()) {
    throw Error("Tsallis entropy undefined at infinite order");
  }
  double q = order.value();
  if (q < 1.0) return static_cast<int>(std::ceil(1.0 / q));
  if (q <= 3.0) return 2;
  return std::max(2, static_cast<int>(std::ceil(std::log2(q))));
}

ThresholdGap threshold_gap(EntropyFamily family, const Order& order, int n) {
  int min_n = min_instance_size(family, order);
  if (n < min_n) {
    throw Error("n = " + std::to_string(n) + " below the minimum " +
                std::to_string(min_n) + " for this order");
  }
  double nn = static_cast<double>(n);
  using namespace threshold_detail;
  if (family == EntropyFamily::Renyi) {
    if (order.is_infinity()) return renyi_above2(nn, 0.0, true);
    double a = order.value();
    if (a == 2.0) return renyi_order2(nn);
    if (a < 2.0) return renyi_below2(nn, a);
    return renyi_above2(nn, a, false);
  }
  double q = order.value();
  if (q == 2.0) return tsallis_order2(nn);
  if (q < 2.0) return tsallis_below2(nn, q);
  if (q <= 3.0) return tsallis_2_to_3(nn, q);
  return tsallis_above3(nn, q);
}

ReductionInstance build_instance(const SyntheticBqpInstance& bqp,
                                 EntropyFamily family, const Order& order) {
  const int n = bqp.n_prime + 1;
  ReductionInstance inst;
  inst.family = family;
  inst.order = order;
  inst.n = n;
  inst.tg = threshold_gap(family, order, n);

  auto [q0, q1] = infidelity_gadget(bqp.circuit);
  inst.mixer = rank2_mixer(q0, q1);

  double hi = 1.0 - std::exp2(-n - 1.0);
  double lo = std::exp2(-n - 1.0);
  if (bqp.accept_prob >= hi) {
    inst.label = InstanceLabel::Yes;
  } else if (bqp.accept_prob <= lo) {
    inst.label = InstanceLabel::No;
  } else {
    inst.label = InstanceLabel::Unknown;
  }
  return inst;
}

VerifyResult verify_instance(const ReductionInstance& inst) {
  DensityMatrix rho = reduced_state(inst.mixer, StateVector::zero(inst.mixer.width));
  auto spec = spectrum(rho);
  VerifyResult res;
  res.rank = numerical_rank(spec);
  if (res.rank > 2) throw Error("mixer state has numerical rank above 2");
  res.entropy = quantum_entropy(spec, inst.order, inst.family);
  if (res.entropy >= inst.tg.t + inst.tg.g) {
    res.verdict = Verdict::Yes;
  } else if (res.entropy <= inst.tg.t - inst.tg.g) {
    res.verdict = Verdict::No;
  } else {
    res.verdict = Verdict::Ambiguous;
  }
  return res;
}

std::string serialize_instance(const ReductionInstance& inst) {
  std::ostringstream os;
  os << "family=" << (inst.family == EntropyFamily::Tsallis ? "tsallis" : "renyi")
     << "; order=" << inst.order.str() << "; t=" << fmt17(inst.tg.t)
     << "; g=" << fmt17(inst.tg.g) << "; label=" << label_str(inst.label) << "\n";
  os << emit_circuit(inst.mixer);
  return os.str();
}

namespace {

std::string header_field(const std::string& header, const std::string& key) {
  std::size_t pos = header.find(key + "=");
  if (pos == std::string::npos) throw Error("instance header missing '" + key + "'");
  pos += key.size() + 1;
  std::size_t end = header.find(';', pos);
  if (end == std::string::npos) end = header.size();
  std::string v = header.substr(pos, end - pos);
  while (!v.empty() && (v.back() == ' ' || v.back() == '\r')) v.pop_back();
  while (!v.empty() && v.front() == ' ') v.erase(v.begin());
  return v;
}

}  // namespace

ReductionInstance parse_instance(const std::string& text) {
  std::size_t nl = text.find('\n');
  if (nl == std::string::npos) throw Error("instance file has no circuit section");
  std::string header = text.substr(0, nl);

  ReductionInstance inst;
  std::string fam = header_field(header, "family");
  if (fam == "tsallis") {
    inst.family = EntropyFamily::Tsallis;
  } else if (fam == "renyi") {
    inst.family = EntropyFamily::Renyi;
  } else {
    throw Error("unknown family '" + fam + "'");
  }
  inst.order = Order::parse(header_field(header, "order"));
  char* end = nullptr;
  std::string ts = header_field(header, "t");
  inst.tg.t = std::strtod(ts.c_str(), &end);
  if (end == nullptr || *end != '\0') throw Error("bad t in instance header");
  std::string gs = header_field(header, "g");
  inst.tg.g = std::strtod(gs.c_str(), &end);
  if (end == nullptr || *end != '\0') throw Error("bad g in instance header");
  inst.tg.valid = inst.tg.g > 0.0;
  inst.label = parse_label(header_field(header, "label"));
  inst.mixer = parse_circuit(std::string_view(text).substr(nl + 1));
  inst.n = static_cast<int>(inst.mixer.outputs.size());
  return inst;
}

}  // namespace entrolab
