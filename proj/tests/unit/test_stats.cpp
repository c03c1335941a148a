#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "mrispeech/core/error.hpp"
#include "mrispeech/stats/kmeans.hpp"
#include "mrispeech/stats/welch_test.hpp"
#include "support.hpp"

using namespace mrispeech;
using namespace mrispeech::stats;
using testsupport::kPi;

namespace {

double t_density(double x, double df) {
  const double c = std::lgamma((df + 1.0) / 2.0) - std::lgamma(df / 2.0) - 0.5 * std::log(df * kPi);
  return std::exp(c - (df + 1.0) / 2.0 * std::log1p(x * x / df));
}

// 0.5 + integral of the density from 0 to t, midpoint rule.
double t_cdf_numeric(double t, double df) {
  const int steps = 200000;
  const double h = t / steps;
  double acc = 0.0;
  for (int i = 0; i < steps; ++i) acc += t_density((i + 0.5) * h, df);
  return 0.5 + acc * h;
}

}  // namespace

TEST_CASE("incomplete beta identities") {
  for (double x : {0.0, 0.1, 0.37, 0.5, 0.9, 1.0}) {
    CHECK(incomplete_beta(1.0, 1.0, x) == doctest::Approx(x).epsilon(1e-12));
    CHECK(incomplete_beta(3.0, 1.0, x) == doctest::Approx(x * x * x).epsilon(1e-12));
    CHECK(incomplete_beta(2.5, 4.0, x) == doctest::Approx(1.0 - incomplete_beta(4.0, 2.5, 1.0 - x)).epsilon(1e-12));
  }
}

TEST_CASE("Student t CDF matches numerical integration") {
  for (double df : {1.0, 2.5, 8.0, 30.0}) {
    for (double t = -8.0; t <= 8.0; t += 0.5) {
      CAPTURE(df);
      CAPTURE(t);
      CHECK(std::abs(student_t_cdf(t, df) - t_cdf_numeric(t, df)) < 1e-6);
    }
  }
}

TEST_CASE("Welch test, worked example") {
  const std::vector<double> a{1, 2, 3, 4, 5}, b{2, 3, 4, 5, 6};
  const auto r = welch_t_test(a, b);
  CHECK(r.t_stat == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(r.df == doctest::Approx(8.0).epsilon(1e-12));
  const double p_ref = 2.0 * t_cdf_numeric(-1.0, 8.0);
  CHECK(p_ref == doctest::Approx(0.3466).epsilon(1e-4 / 0.3466));
  CHECK(std::abs(r.p_two_sided - p_ref) < 1e-6);
  CHECK(r.p_one_sided == doctest::Approx(1.0 - t_cdf_numeric(-1.0, 8.0)).epsilon(1e-6));
  CHECK(r.mean_a == 3.0);
  CHECK(r.mean_b == 4.0);
  CHECK(r.n_a == 5);
  CHECK_FALSE(reject_h0(r));
}

TEST_CASE("Welch test edge cases") {
  const std::vector<double> a{1, 1, 1}, b{2, 2, 2}, c{4.0, 5.0};
  CHECK_THROWS_AS(welch_t_test(std::vector<double>{1.0}, a), InsufficientDataError);
  CHECK_THROWS_AS(welch_t_test(std::vector<double>{1.0, NAN}, a), DomainError);

  const auto same = welch_t_test(a, a);
  CHECK(same.degenerate);
  CHECK(same.p_two_sided == 1.0);

  const auto apart = welch_t_test(a, b);
  CHECK(apart.degenerate);
  CHECK(apart.t_stat == -kDegenerateT);
  CHECK(apart.p_two_sided == 0.0);

  const auto one_const = welch_t_test(a, c);
  CHECK_FALSE(one_const.degenerate);
  CHECK(one_const.df == doctest::Approx(1.0));
}

TEST_CASE("reject_h0 uses a strict threshold") {
  WelchTestResult r;
  r.p_two_sided = 0.5;
  CHECK_FALSE(reject_h0(r, 0.95));
  r.p_two_sided = 0.05;
  CHECK_FALSE(reject_h0(r, 0.95));
  r.p_two_sided = 0.01;
  CHECK(reject_h0(r, 0.95));
}

TEST_CASE("Welch df bounds and invariances over random samples") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> size(2, 30);
  std::normal_distribution<double> g(0.0, 1.0);
  std::uniform_real_distribution<double> spread(0.1, 10.0);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<double> a(size(rng)), b(size(rng));
    const double sa = spread(rng), sb = spread(rng), shift = g(rng);
    for (auto& v : a) v = sa * g(rng);
    for (auto& v : b) v = shift + sb * g(rng);
    const auto r = welch_t_test(a, b);
    const double lo = std::min(a.size(), b.size()) - 1.0, hi = a.size() + b.size() - 2.0;
    REQUIRE(r.df >= lo - 1e-9);
    REQUIRE(r.df <= hi + 1e-9);

    if (trial % 10 == 0) {
      auto a2 = a, b2 = b;
      for (auto& v : a2) v = -3.5 * v + 100.0;
      for (auto& v : b2) v = -3.5 * v + 100.0;
      const auto r2 = welch_t_test(a2, b2);
      CHECK(std::abs(r2.t_stat) == doctest::Approx(std::abs(r.t_stat)).epsilon(1e-9));
      CHECK(r2.df == doctest::Approx(r.df).epsilon(1e-9));
      CHECK(r2.p_two_sided == doctest::Approx(r.p_two_sided).epsilon(1e-7));
    }
  }
}

TEST_CASE("kmeans_1d small cases") {
  const std::vector<double> pairs{100, 100, 900, 900};
  const auto r = kmeans_1d(pairs, 2, 1);
  REQUIRE(r.centroids.size() == 2);
  CHECK(r.centroids[0] == 100.0);
  CHECK(r.centroids[1] == 900.0);
  CHECK(r.inertia == 0.0);
  CHECK(r.assignments == std::vector<std::size_t>{0, 0, 1, 1});

  const std::vector<double> pts{5, 1, 9, 1, 3};
  CHECK(kmeans_1d(pts, 4, 3).inertia == 0.0);
  CHECK_THROWS_AS(kmeans_1d(pts, 5, 3), ParameterError);
  CHECK_THROWS_AS(kmeans_1d(pts, 0, 3), ParameterError);
  CHECK_THROWS_AS(kmeans_1d(std::vector<double>{1.0, INFINITY}, 1, 3), DomainError);
}

TEST_CASE("kmeans_1d recovers planted blobs") {
  const std::vector<double> centres{380, 955, 1750, 2070, 3230, 3970, 5090, 6200};
  std::mt19937_64 rng(17);
  std::normal_distribution<double> g(0.0, 15.0);
  std::vector<double> pts;
  std::vector<double> means;
  for (double c : centres) {
    double sum = 0.0;
    for (int i = 0; i < 100; ++i) {
      pts.push_back(c + g(rng));
      sum += pts.back();
    }
    means.push_back(sum / 100.0);
  }
  std::shuffle(pts.begin(), pts.end(), rng);

  const auto r = kmeans_1d(pts, 8, 1);
  REQUIRE(r.centroids.size() == 8);
  for (std::size_t i = 0; i < 8; ++i) CHECK(std::abs(r.centroids[i] - means[i]) < 10.0);
  CHECK(std::is_sorted(r.centroids.begin(), r.centroids.end()));
  for (std::size_t i = 1; i < r.inertia_history.size(); ++i) CHECK(r.inertia_history[i] <= r.inertia_history[i - 1]);
  CHECK(r.inertia == doctest::Approx(r.inertia_history.back()));

  double inertia = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const double d = pts[i] - r.centroids[r.assignments[i]];
    inertia += d * d;
  }
  CHECK(inertia == doctest::Approx(r.inertia));

  const auto again = kmeans_1d(pts, 8, 1);
  CHECK(again.centroids == r.centroids);
  CHECK(again.assignments == r.assignments);
}

TEST_CASE("kmeans inertia never rises within a restart") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1000.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> pts(200);
    for (auto& v : pts) v = u(rng);
    const auto r = kmeans_1d(pts, 2 + trial % 9, trial, {3, 200});
    for (std::size_t i = 1; i < r.inertia_history.size(); ++i) {
      REQUIRE(r.inertia_history[i] <= r.inertia_history[i - 1] * (1.0 + 1e-12));
    }
  }
}
