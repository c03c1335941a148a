#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace mrispeech::stats {

struct KMeansResult {
  std::vector<double> centroids;       // ascending
  std::vector<std::size_t> assignments;  // index into centroids, per point
  double inertia = 0.0;
  /// Inertia after each Lloyd iteration of the winning restart.
  std::vector<double> inertia_history;
  std::size_t iterations = 0;
};

struct KMeansOptions {
  std::size_t restarts = 20;
  std::size_t iters = 200;
};

/// Lloyd's algorithm on the line with k-means++ seeding; best of
/// `restarts` by inertia. Restart r draws from its own generator seeded
/// from (seed, r), so the result does not depend on evaluation order.
KMeansResult kmeans_1d(std::span<const double> points, std::size_t k, std::uint64_t seed,
                       const KMeansOptions& opts = {});

}  // namespace mrispeech::stats
