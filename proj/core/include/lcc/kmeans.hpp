#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace lcc {

struct KMeansOptions {
  int max_iterations = 300;
  double tolerance = 1e-9;  // stop when no centroid moves farther than this
};

struct KMeansResult {
  std::size_t dim = 0;
  std::vector<int> assignments;
  std::vector<double> centroids;        // k x dim, row-major
  std::vector<double> inertia_history;  // after each assignment step
  double inertia = 0.0;
  int iterations = 0;

  std::span<const double> centroid(std::size_t j) const {
    return std::span<const double>(centroids).subspan(j * dim, dim);
  }
  std::size_t k() const { return dim == 0 ? 0 : centroids.size() / dim; }
};

/// Lloyd's algorithm with k-means++ seeding over `points` (n x dim, row-major).
/// Deterministic for a given seed. Throws std::invalid_argument when
/// k < 1, dim < 1, the point set is empty, or k exceeds the number of points.
KMeansResult kmeans(std::span<const double> points, std::size_t dim, std::size_t k,
                    std::uint64_t seed, const KMeansOptions& options = {});

/// Sum of squared distances from each point to its assigned centroid.
double kmeans_inertia(std::span<const double> points, std::size_t dim,
                      std::span<const int> assignments, std::span<const double> centroids);

}  // namespace lcc
