#include "entrolab/binary_entropy.hpp"

#include <algorithm>
#include <cmath>

namespace entrolab {

namespace {

constexpr double kLn2 = 0.6931471805599453094172321214581766;

// Real-order paths switch to a scaled power-sum once the order is far from
// 1; near 1 the expm1 rearrangement keeps the (q-1) cancellation exact.
constexpr double kNearOneBand = 0.5;

}  // namespace

double canonical_binary_argument(double x) {
  if (!(x >= -1e-12 && x <= 1.0 + 1e-12)) {
    throw Error("binary entropy argument outside [0,1]");
  }
  x = std::clamp(x, 0.0, 1.0);
  double u = std::min(x, 1.0 - x);
  if (u < 1e-300) u = 0.0;
  return u;
}

double q_log(double x, const Order& q) {
  if (!(x > 0.0)) throw Error("q_log requires x > 0");
  if (q.is_infinity()) throw Error("q_log undefined at infinite order");
  if (q.is_one()) return std::log(x);
  double qv = q.is_zero() ? 0.0 : q.value();
  // (1 - x^(1-q))/(q-1) = -expm1((1-q) ln x)/(q-1)
  return -std::expm1((1.0 - qv) * std::log(x)) / (qv - 1.0);
}

double shannon_binary(double x) {
  double u = canonical_binary_argument(x);
  if (u == 0.0) return 0.0;
  return -u * std::log(u) - (1.0 - u) * std::log1p(-u);
}

double min_binary_entropy(double x) {
  double u = canonical_binary_argument(x);
  return -std::log1p(-u);  // max{x, 1-x} = 1-u
}

double tsallis_binary(double x, const Order& q) {
  double u = canonical_binary_argument(x);
  if (q.is_infinity()) throw Error("Tsallis binary entropy undefined at infinite order");
  if (q.is_one()) {
    if (u == 0.0) return 0.0;
    return -u * std::log(u) - (1.0 - u) * std::log1p(-u);
  }
  if (q.is_zero()) return u == 0.0 ? 0.0 : 1.0;
  double qv = q.value();
  if (u == 0.0) return 0.0;
  double lu = std::log(u);
  double l1u = std::log1p(-u);
  if (std::abs(qv - 1.0) <= kNearOneBand) {
    // 1 - u^q - (1-u)^q = -u expm1((q-1)ln u) - (1-u) expm1((q-1)ln(1-u))
    double s = -u * std::expm1((qv - 1.0) * lu) -
               (1.0 - u) * std::expm1((qv - 1.0) * l1u);
    return s / (qv - 1.0);
  }
  double s = 1.0 - std::exp(qv * lu) - std::exp(qv * l1u);
  return s / (qv - 1.0);
}

double renyi_binary(double x, const Order& alpha) {
  double u = canonical_binary_argument(x);
  if (alpha.is_one()) {
    if (u == 0.0) return 0.0;
    return -u * std::log(u) - (1.0 - u) * std::log1p(-u);
  }
  if (alpha.is_zero()) return u == 0.0 ? 0.0 : kLn2;
  if (alpha.is_infinity()) return -std::log1p(-u);
  double a = alpha.value();
  if (u == 0.0) return 0.0;
  double lu = std::log(u);
  double l1u = std::log1p(-u);
  if (std::abs(a - 1.0) <= kNearOneBand) {
    double s = u * std::expm1((a - 1.0) * lu) +
               (1.0 - u) * std::expm1((a - 1.0) * l1u);
    return std::log1p(s) / (1.0 - a);
  }
  // ln(u^a + (1-u)^a) = a ln(1-u) + log1p((u/(1-u))^a), 1-u dominant
  double t = std::exp(a * (lu - l1u));
  return (a * l1u + std::log1p(t)) / (1.0 - a);
}

double tsallis_half(const Order& q) {
  if (q.is_infinity()) throw Error("Tsallis binary entropy undefined at infinite order");
  if (q.is_one()) return kLn2;
  if (q.is_zero()) return 1.0;
  double qv = q.value();
  // (1 - 2^(1-q))/(q-1)
  return -std::expm1((1.0 - qv) * kLn2) / (qv - 1.0);
}

}  // namespace entrolab
