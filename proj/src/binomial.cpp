#include "entrolab/binomial.hpp"

#include <cmath>
#include <limits>

namespace entrolab {

double gen_binom(double a, int k) {
  if (k < 0) throw Error("gen_binom requires k >= 0");
  double r = 1.0;
  for (int i = 0; i < k; ++i) {
    r *= (a - i);
    r /= (i + 1);
  }
  return r;
}

CoeffSign gen_binom_even_sign(double a, int k) {
  if (!(a > 0.0) || k < 1) {
    throw Error("gen_binom_even_sign requires a > 0, k >= 1");
  }
  // Integer a with 2k > a hits the zero factor in the product form.
  if (std::floor(a) == a && 2.0 * k > a) return CoeffSign::Zero;
  long long c = static_cast<long long>(std::ceil(a));
  long long count = std::max(0LL, 2LL * k - c);
  return (count % 2 == 0) ? CoeffSign::Positive : CoeffSign::Negative;
}

double hurwitz_tail(double s, double K) {
  if (!(s > 1.0)) return std::numeric_limits<double>::infinity();
  double M = K + 1.0;
  double t1 = std::pow(M, 1.0 - s) / (s - 1.0);
  double t2 = 0.5 * std::pow(M, -s);
  double t3 = s * std::pow(M, -s - 1.0) / 12.0;
  double t4 = -s * (s + 1.0) * (s + 2.0) * std::pow(M, -s - 3.0) / 720.0;
  return t1 + t2 + t3 + t4;
}

namespace {

struct Kahan {
  double sum = 0.0, c = 0.0;
  void add(double v) {
    double y = v - c;
    double t = sum + y;
    c = (t - sum) - y;
    sum = t;
  }
};

}  // namespace

BinomSums binom_identity_sums(double a, const BinomSeriesConfig& cfg) {
  if (!(a > 0.0)) throw Error("binom_identity_sums requires a > 0");
  if (cfg.max_terms < 8) throw Error("max_terms must be at least 8");
  if (!(cfg.tail_tolerance > 0.0)) throw Error("tail_tolerance must be positive");

  BinomSums out;
  Kahan s_even, s_weighted;
  const double inf = std::numeric_limits<double>::infinity();

  double coef = a * (a - 1.0) / 2.0;  // binom(a, 2)
  double last_coef = 0.0;
  long long last_k = 0;

  for (long long k = 1; k <= cfg.max_terms; ++k) {
    if (coef == 0.0) {  // integer a: the series terminates exactly
      out.exact = true;
      break;
    }
    s_even.add(coef);
    s_weighted.add(coef * static_cast<double>(k));
    last_coef = coef;
    last_k = k;

    double m = 2.0 * static_cast<double>(k);
    if (m > a + 2.0 && k >= 64) {
      // Deep in the single-signed power-law regime; stop once the raw tail
      // is far below tolerance so the frozen-coefficient estimate cannot
      // matter.
      double kk = static_cast<double>(k);
      double scale = std::abs(coef) * std::pow(kk, a + 1.0);
      double te = scale * hurwitz_tail(a + 1.0, kk);
      double tw = (a > 1.0) ? scale * hurwitz_tail(a, kk) : inf;
      if (te <= cfg.tail_tolerance * 1e-3 &&
          (!(a > 1.0) || tw <= cfg.tail_tolerance * 1e-3)) {
        break;
      }
    }
    coef *= (a - m) * (a - m - 1.0) / ((m + 1.0) * (m + 2.0));
  }

  out.terms = last_k;
  out.sum_even = s_even.sum;
  out.sum_weighted = s_weighted.sum;
  if (out.exact || last_k == 0) return out;

  /*
   * Past 2j > ceil(a) the terms are single-signed with the exact asymptotic
   *   binom(a,2j) = C_a (2j)^-(a+1) (1 + a(a+1)/(4j) + O(j^-2)),
   *   C_a = sin(pi(a+1)) Gamma(a+1) / pi,
   * from the reflection form of the Gamma-ratio representation. Summing the
   * model against Hurwitz tails, anchored to the last exactly computed
   * coefficient (the anchor ratio is 1 + O(K^-2)), leaves an estimate error
   * of order tail/K^2, which stays far below tolerance even as a -> 1+
   * where the weighted tail itself becomes large. The weighted series only
   * converges for a > 1.
   */
  double kk = static_cast<double>(last_k);
  double sgn = (last_coef >= 0.0) ? 1.0 : -1.0;
  double c1 = a * (a + 1.0) / 4.0;
  double lead = std::abs(std::sin(M_PI * (a + 1.0))) *
                std::exp(std::lgamma(a + 1.0)) / M_PI;
  double model =
      lead * std::pow(2.0 * kk, -(a + 1.0)) * (1.0 + c1 / kk);
  double anchor =
      (model > 0.0 && std::isfinite(std::abs(last_coef) / model))
          ? std::abs(last_coef) / model
          : 1.0;
  double base = lead * std::pow(2.0, -(a + 1.0)) * anchor;
  out.tail_even =
      sgn * base * (hurwitz_tail(a + 1.0, kk) + c1 * hurwitz_tail(a + 2.0, kk));
  out.tail_weighted =
      (a > 1.0)
          ? sgn * base * (hurwitz_tail(a, kk) + c1 * hurwitz_tail(a + 1.0, kk))
          : sgn * inf;
  return out;
}

}  // namespace entrolab
