#include "lcc/kmeans.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

namespace lcc {

namespace {

double squared_distance(const double* a, const double* b, std::size_t dim) {
  double s = 0.0;
  for (std::size_t d = 0; d < dim; ++d) {
    const double t = a[d] - b[d];
    s += t * t;
  }
  return s;
}

// Uniform in [0, 1) from the top 53 bits; avoids implementation-defined
// distribution objects so results match across standard libraries.
double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::vector<double> seed_plus_plus(std::span<const double> points, std::size_t n, std::size_t dim,
                                   std::size_t k, std::mt19937_64& rng) {
  std::vector<double> centroids;
  centroids.reserve(k * dim);
  const std::size_t first = static_cast<std::size_t>(rng() % n);
  centroids.insert(centroids.end(), points.begin() + first * dim, points.begin() + (first + 1) * dim);

  std::vector<double> d2(n);
  for (std::size_t i = 0; i < n; ++i)
    d2[i] = squared_distance(&points[i * dim], centroids.data(), dim);

  for (std::size_t c = 1; c < k; ++c) {
    double total = 0.0;
    for (double v : d2) total += v;
    std::size_t pick = n - 1;
    if (total > 0.0) {
      const double target = uniform01(rng) * total;
      double acc = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        acc += d2[i];
        if (d2[i] > 0.0 && acc > target) {
          pick = i;
          break;
        }
      }
      // Rounding can leave target >= acc; fall back to the last candidate.
      if (d2[pick] == 0.0) {
        for (std::size_t i = n; i-- > 0;) {
          if (d2[i] > 0.0) {
            pick = i;
            break;
          }
        }
      }
    } else {
      pick = static_cast<std::size_t>(rng() % n);
    }
    const double* chosen = &points[pick * dim];
    centroids.insert(centroids.end(), chosen, chosen + dim);
    for (std::size_t i = 0; i < n; ++i)
      d2[i] = std::min(d2[i], squared_distance(&points[i * dim], chosen, dim));
  }
  return centroids;
}

}  // namespace

double kmeans_inertia(std::span<const double> points, std::size_t dim,
                      std::span<const int> assignments, std::span<const double> centroids) {
  double total = 0.0;
  for (std::size_t i = 0; i < assignments.size(); ++i) {
    total += squared_distance(&points[i * dim],
                              &centroids[static_cast<std::size_t>(assignments[i]) * dim], dim);
  }
  return total;
}

KMeansResult kmeans(std::span<const double> points, std::size_t dim, std::size_t k,
                    std::uint64_t seed, const KMeansOptions& options) {
  if (dim == 0) throw std::invalid_argument("kmeans: dimension must be >= 1");
  if (points.empty() || points.size() % dim != 0)
    throw std::invalid_argument("kmeans: point buffer empty or not a multiple of dim");
  const std::size_t n = points.size() / dim;
  if (k < 1) throw std::invalid_argument("kmeans: k must be >= 1");
  if (k > n)
    throw std::invalid_argument("kmeans: k = " + std::to_string(k) + " exceeds point count " +
                                std::to_string(n));

  std::mt19937_64 rng(seed);
  KMeansResult result;
  result.dim = dim;
  result.centroids = seed_plus_plus(points, n, dim, k, rng);
  result.assignments.assign(n, -1);

  std::vector<double> sums(k * dim);
  std::vector<std::size_t> counts(k);
  for (int iter = 0; iter < options.max_iterations; ++iter) {
    // Assignment: a point moves only to a strictly closer centroid.
    double inertia = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double* p = &points[i * dim];
      int best = result.assignments[i];
      double best_d = best >= 0 ? squared_distance(p, &result.centroids[best * dim], dim)
                                : std::numeric_limits<double>::infinity();
      for (std::size_t j = 0; j < k; ++j) {
        const double d = squared_distance(p, &result.centroids[j * dim], dim);
        if (d < best_d) {
          best_d = d;
          best = static_cast<int>(j);
        }
      }
      result.assignments[i] = best;
      inertia += best_d;
    }
    result.inertia_history.push_back(inertia);

    std::fill(sums.begin(), sums.end(), 0.0);
    std::fill(counts.begin(), counts.end(), 0);
    for (std::size_t i = 0; i < n; ++i) {
      const auto j = static_cast<std::size_t>(result.assignments[i]);
      ++counts[j];
      for (std::size_t d = 0; d < dim; ++d) sums[j * dim + d] += points[i * dim + d];
    }
    double max_shift = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
      if (counts[j] == 0) continue;  // empty cluster keeps its centroid
      double shift = 0.0;
      for (std::size_t d = 0; d < dim; ++d) {
        const double updated = sums[j * dim + d] / static_cast<double>(counts[j]);
        const double delta = updated - result.centroids[j * dim + d];
        shift += delta * delta;
        result.centroids[j * dim + d] = updated;
      }
      max_shift = std::max(max_shift, std::sqrt(shift));
    }
    result.iterations = iter + 1;
    if (max_shift < options.tolerance) break;
  }
  result.inertia = kmeans_inertia(points, dim, result.assignments, result.centroids);
  result.inertia_history.push_back(result.inertia);
  return result;
}

}  // namespace lcc
