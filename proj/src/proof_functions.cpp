#include "entrolab/proof_functions.hpp"

#include <cmath>

#include "entrolab/binary_entropy.hpp"

namespace entrolab {

namespace {
constexpr double kLn2 = 0.6931471805599453094172321214581766;

void check_range(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw Error("proof function argument outside [0,1]");
}
}  // namespace

double fact_i1(double x, double alpha) {
  check_range(x);
  if (x == 1.0) return 0.0;  // limit
  double lm = std::log1p(-x);         // ln(1-x)
  double lp = std::log1p(x);          // ln(1+x)
  double pm = std::pow(1.0 - x, 2.0 * alpha);
  double pp = std::pow(1.0 + x, 2.0 * alpha);
  return -2.0 * x * pm * (lm - kLn2) * lm - 2.0 * x * pp * (lp - kLn2) * lp;
}

double fact_i2(double x) {
  check_range(x);
  if (x == 1.0) return 0.0;  // limit
  double one_m_x2 = (1.0 - x) * (1.0 + x);
  double t1 = -x * one_m_x2 * (std::log(one_m_x2) - 2.0 * kLn2);
  double t2 = 2.0 * (1.0 + x * x) * (std::log1p(x) - std::log1p(-x)) *
              (std::log1p(x * x) - kLn2);
  return t1 + t2;
}

double fact_g1(double x) {
  check_range(x);
  if (x == 1.0) return 0.0;  // limit
  double ratio = std::log1p(-x) - std::log1p(x);        // ln((1-x)/(1+x))
  double lhalf = kLn2 - std::log1p(x * x);              // ln(2/(1+x^2))
  return 2.0 * (1.0 + x * x) * ratio * lhalf +
         4.0 * x * shannon_binary((1.0 - x) / 2.0);
}

double fact_g2(double x) {
  check_range(x);
  if (x == 1.0) return 0.0;  // limit
  double lm = std::log1p(-x);
  double lp = std::log1p(x);
  double lhalf = kLn2 - std::log1p(x * x);
  double t1 = (1.0 - x) * lm * ((1.0 + x) * lhalf - x * (1.0 - x));
  double t2 = (1.0 + x) * lp * ((1.0 - x) * lhalf + x * (1.0 + x));
  double t3 = 2.0 * x * (1.0 + x * x) * kLn2;
  return t1 - t2 + t3;
}

double fact_j1(double x, double alpha) {
  check_range(x);
  if (x == 1.0) return 0.0;  // limit
  double lm = std::log1p(-x);
  double lp = std::log1p(x);
  double lhalf = kLn2 - std::log1p(x * x);
  double t1 = (1.0 + x * x) * lhalf * (lp - lm);
  double t2 = x * std::pow(1.0 + x, 1.0 + alpha) * std::pow(1.0 - x, 1.0 - alpha) *
              (kLn2 - lp);
  double t3 = x * std::pow(1.0 + x, 1.0 - alpha) * std::pow(1.0 - x, 1.0 + alpha) *
              (kLn2 - lm);
  return t1 - t2 - t3;
}

double fact_j2(double x) {
  check_range(x);
  if (x == 1.0) return 0.0;  // limit
  double one_m_x2 = (1.0 - x) * (1.0 + x);
  double lhalf = kLn2 - std::log1p(x * x);
  double t1 = x * one_m_x2 * (std::log(one_m_x2) - 2.0 * kLn2);
  double t2 = (1.0 + x * x) * lhalf * (std::log1p(x) - std::log1p(-x));
  return t1 + t2;
}

double fact_a1_derivative_constant() {
  return 3.0 * (std::log(4.0 / 3.0) - 1.0) * std::log(1.5) + 2.0 * kLn2 * kLn2;
}

double fact_i1_half_slope(double x, double h) {
  auto phi = [](double t) { return fact_i1(t, 1.0) / (2.0 * t); };
  return (phi(x + h) - phi(x - h)) / (2.0 * h);
}

double aux_t(double x, double q) {
  check_range(x);
  return std::pow(1.0 + x, q) - std::pow(1.0 - x, q) - std::exp2(q) * x;
}

double aux_t_dx(double x, double q) {
  check_range(x);
  return q * (std::pow(1.0 + x, q - 1.0) + std::pow(1.0 - x, q - 1.0)) -
         std::exp2(q);
}

double aux_u(double x, double q) {
  check_range(x);
  return std::exp2(q) * x + std::pow(1.0 - x, q) - std::pow(1.0 + x, q);
}

double aux_u_dx(double x, double q) {
  check_range(x);
  return std::exp2(q) -
         q * (std::pow(1.0 - x, q - 1.0) + std::pow(1.0 + x, q - 1.0));
}

double aux_g(double x, double alpha) {
  check_range(x);
  double pm = std::pow(1.0 - x, alpha);
  double pp = std::pow(1.0 + x, alpha);
  double dm = std::pow(1.0 - x, alpha - 1.0);
  double dp = std::pow(1.0 + x, alpha - 1.0);
  return x * (pm + pp) - (dp - dm) * (1.0 + x * x);
}

}  // namespace entrolab
