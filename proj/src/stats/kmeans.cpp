#include "mrispeech/stats/kmeans.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <set>

#include "mrispeech/core/error.hpp"

namespace mrispeech::stats {
namespace {

std::size_t nearest(const std::vector<double>& centroids, double x) {
  std::size_t best = 0;
  double bd = std::numeric_limits<double>::infinity();
  for (std::size_t c = 0; c < centroids.size(); ++c) {
    const double d = std::abs(x - centroids[c]);
    if (d < bd) {
      bd = d;
      best = c;
    }
  }
  return best;
}

double inertia_of(std::span<const double> pts, const std::vector<double>& centroids,
                  const std::vector<std::size_t>& assign) {
  double s = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const double d = pts[i] - centroids[assign[i]];
    s += d * d;
  }
  return s;
}

std::vector<double> seed_plus_plus(std::span<const double> pts, std::size_t k, std::mt19937_64& rng) {
  std::vector<double> centroids;
  std::uniform_int_distribution<std::size_t> pick(0, pts.size() - 1);
  centroids.push_back(pts[pick(rng)]);
  std::vector<double> d2(pts.size());
  while (centroids.size() < k) {
    double total = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const double d = pts[i] - centroids[nearest(centroids, pts[i])];
      d2[i] = d * d;
      total += d2[i];
    }
    if (total == 0.0) {
      centroids.push_back(pts[pick(rng)]);
      continue;
    }
    std::discrete_distribution<std::size_t> weighted(d2.begin(), d2.end());
    centroids.push_back(pts[weighted(rng)]);
  }
  return centroids;
}

KMeansResult lloyd(std::span<const double> pts, std::vector<double> centroids, std::size_t iters) {
  const std::size_t k = centroids.size();
  KMeansResult r;
  std::vector<std::size_t> assign(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) assign[i] = nearest(centroids, pts[i]);
  for (std::size_t it = 0; it < iters; ++it) {
    std::vector<double> sum(k, 0.0);
    std::vector<std::size_t> count(k, 0);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      sum[assign[i]] += pts[i];
      ++count[assign[i]];
    }
    for (std::size_t c = 0; c < k; ++c) {
      if (count[c] > 0) centroids[c] = sum[c] / static_cast<double>(count[c]);
    }
    // Empty clusters move to the point farthest from its centroid.
    for (std::size_t c = 0; c < k; ++c) {
      if (count[c] > 0) continue;
      std::size_t far = 0;
      double fd = -1.0;
      for (std::size_t i = 0; i < pts.size(); ++i) {
        const double d = std::abs(pts[i] - centroids[assign[i]]);
        if (d > fd && count[assign[i]] > 1) {
          fd = d;
          far = i;
        }
      }
      --count[assign[far]];
      centroids[c] = pts[far];
      assign[far] = c;
      count[c] = 1;
    }
    bool changed = false;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const std::size_t c = nearest(centroids, pts[i]);
      if (c != assign[i]) {
        assign[i] = c;
        changed = true;
      }
    }
    r.inertia_history.push_back(inertia_of(pts, centroids, assign));
    r.iterations = it + 1;
    if (!changed) break;
  }
  r.centroids = std::move(centroids);
  r.assignments = std::move(assign);
  r.inertia = inertia_of(pts, r.centroids, r.assignments);
  return r;
}

}  // namespace

KMeansResult kmeans_1d(std::span<const double> points, std::size_t k, std::uint64_t seed, const KMeansOptions& opts) {
  if (k == 0) throw ParameterError("kmeans: k must be at least 1");
  if (opts.restarts == 0 || opts.iters == 0) throw ParameterError("kmeans: restarts and iters must be positive");
  for (double p : points) {
    if (!std::isfinite(p)) throw DomainError("kmeans: non-finite point");
  }
  const std::set<double> distinct(points.begin(), points.end());
  if (k > distinct.size()) {
    throw ParameterError("kmeans: k = " + std::to_string(k) + " exceeds " + std::to_string(distinct.size()) +
                         " distinct points");
  }

  KMeansResult best;
  best.inertia = std::numeric_limits<double>::infinity();
  for (std::size_t r = 0; r < opts.restarts; ++r) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(r)};
    std::mt19937_64 rng(seq);
    KMeansResult cand = lloyd(points, seed_plus_plus(points, k, rng), opts.iters);
    if (cand.inertia < best.inertia) best = std::move(cand);
  }

  // Relabel so centroids ascend.
  std::vector<std::size_t> order(k);
  for (std::size_t i = 0; i < k; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return best.centroids[a] < best.centroids[b]; });
  std::vector<std::size_t> rank(k);
  std::vector<double> sorted(k);
  for (std::size_t i = 0; i < k; ++i) {
    rank[order[i]] = i;
    sorted[i] = best.centroids[order[i]];
  }
  best.centroids = std::move(sorted);
  for (auto& a : best.assignments) a = rank[a];
  return best;
}

}  // namespace mrispeech::stats
