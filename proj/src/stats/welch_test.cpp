#include "mrispeech/stats/welch_test.hpp"

#include <cmath>
#include <limits>

#include "mrispeech/core/error.hpp"

namespace mrispeech::stats {
namespace {

// Modified Lentz evaluation of the continued fraction for I_x(a, b).
double beta_fraction(double a, double b, double x) {
  constexpr double tiny = 1e-300;
  constexpr double eps = 1e-15;
  double c = 1.0;
  double d = 1.0 - (a + b) * x / (a + 1.0);
  if (std::abs(d) < tiny) d = tiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= 10000; ++m) {
    const double m2 = 2.0 * m;
    double num = m * (b - m) * x / ((a + m2 - 1.0) * (a + m2));
    d = 1.0 + num * d;
    if (std::abs(d) < tiny) d = tiny;
    c = 1.0 + num / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    h *= d * c;
    num = -(a + m) * (a + b + m) * x / ((a + m2) * (a + m2 + 1.0));
    d = 1.0 + num * d;
    if (std::abs(d) < tiny) d = tiny;
    c = 1.0 + num / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < eps) return h;
  }
  throw Error("incomplete beta: continued fraction did not converge");
}

struct Moments {
  double mean = 0.0;
  double var = 0.0;
};

Moments moments(std::span<const double> x) {
  long double s = 0.0L;
  for (double v : x) s += v;
  const double mean = static_cast<double>(s / static_cast<long double>(x.size()));
  long double ss = 0.0L;
  for (double v : x) ss += (v - mean) * (v - mean);
  return {mean, static_cast<double>(ss / static_cast<long double>(x.size() - 1))};
}

}  // namespace

double incomplete_beta(double a, double b, double x) {
  if (!(a > 0.0) || !(b > 0.0)) throw DomainError("incomplete beta: a and b must be positive");
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("incomplete beta: x outside [0, 1]");
  if (x == 0.0 || x == 1.0) return x;
  const double log_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) + a * std::log(x) + b * std::log1p(-x);
  const double front = std::exp(log_front);
  if (x < (a + 1.0) / (a + b + 2.0)) return front * beta_fraction(a, b, x) / a;
  return 1.0 - front * beta_fraction(b, a, 1.0 - x) / b;
}

double student_t_cdf(double t, double df) {
  if (!(df > 0.0)) throw DomainError("student t: df must be positive");
  if (std::isnan(t)) throw DomainError("student t: t is NaN");
  if (std::isinf(t)) return t > 0 ? 1.0 : 0.0;
  const double tail = 0.5 * incomplete_beta(0.5 * df, 0.5, df / (df + t * t));
  return t > 0 ? 1.0 - tail : tail;
}

WelchTestResult welch_t_test(std::span<const double> a, std::span<const double> b) {
  if (a.size() < 2 || b.size() < 2) throw InsufficientDataError("welch test: each sample needs at least 2 values");
  for (double v : a) {
    if (!std::isfinite(v)) throw DomainError("welch test: non-finite value in sample a");
  }
  for (double v : b) {
    if (!std::isfinite(v)) throw DomainError("welch test: non-finite value in sample b");
  }
  const Moments ma = moments(a), mb = moments(b);
  WelchTestResult r;
  r.mean_a = ma.mean;
  r.mean_b = mb.mean;
  r.n_a = a.size();
  r.n_b = b.size();
  const double na = static_cast<double>(a.size()), nb = static_cast<double>(b.size());
  const double va = ma.var / na, vb = mb.var / nb;
  const double se2 = va + vb;

  if (se2 == 0.0) {
    r.degenerate = true;
    r.df = na + nb - 2.0;
    if (ma.mean == mb.mean) {
      r.t_stat = 0.0;
      r.p_two_sided = 1.0;
      r.p_one_sided = 0.5;
    } else {
      r.t_stat = ma.mean > mb.mean ? kDegenerateT : -kDegenerateT;
      r.p_two_sided = 0.0;
      r.p_one_sided = ma.mean > mb.mean ? 0.0 : 1.0;
    }
    return r;
  }

  r.t_stat = (ma.mean - mb.mean) / std::sqrt(se2);
  double denom = 0.0;
  if (va > 0.0) denom += va * va / (na - 1.0);
  if (vb > 0.0) denom += vb * vb / (nb - 1.0);
  r.df = se2 * se2 / denom;
  const double lower = student_t_cdf(-std::abs(r.t_stat), r.df);
  r.p_two_sided = std::min(1.0, 2.0 * lower);
  r.p_one_sided = 1.0 - student_t_cdf(r.t_stat, r.df);
  return r;
}

bool reject_h0(const WelchTestResult& result, double p_threshold) {
  return result.confidence() > p_threshold;
}

}  // namespace mrispeech::stats
