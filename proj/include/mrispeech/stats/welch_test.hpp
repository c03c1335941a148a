#pragma once

#include <span>

namespace mrispeech::stats {

/// Largest |t| reported when both samples are constant but differ.
inline constexpr double kDegenerateT = 1e12;

struct WelchTestResult {
  double t_stat = 0.0;
  double df = 0.0;
  double p_two_sided = 1.0;
  double p_one_sided = 0.5;  // P(T >= t), for H1: mean_a > mean_b
  double mean_a = 0.0;
  double mean_b = 0.0;
  std::size_t n_a = 0;
  std::size_t n_b = 0;
  bool degenerate = false;

  double confidence() const { return 1.0 - p_two_sided; }
};

/// Unequal-variance two-sample t-test with fractional degrees of freedom.
WelchTestResult welch_t_test(std::span<const double> a, std::span<const double> b);

/// True iff 1 - p_two_sided is strictly greater than p_threshold.
bool reject_h0(const WelchTestResult& result, double p_threshold = 0.95);

/// Regularized incomplete beta I_x(a, b).
double incomplete_beta(double a, double b, double x);

/// CDF of Student's t with (possibly fractional) df.
double student_t_cdf(double t, double df);

}  // namespace mrispeech::stats
