#include "stabrank/mds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "stabrank/divergence.hpp"
#include "stabrank/errors.hpp"
#include "stabrank/prob_map.hpp"

namespace stabrank::mds {

DistanceMatrix::DistanceMatrix(std::size_t n, std::vector<double> values,
                               std::vector<PointLabel> labels)
    : n_(n), values_(std::move(values)), labels_(std::move(labels)) {
  if (values_.size() != n_ * n_) throw ValidationError("distance matrix is not n x n");
  if (labels_.size() != n_) throw ValidationError("distance matrix needs one label per point");
  for (std::size_t i = 0; i < n_; ++i) {
    if (values_[i * n_ + i] != 0.0) {
      throw ValidationError("nonzero diagonal at point " + std::to_string(i + 1));
    }
    for (std::size_t j = 0; j < n_; ++j) {
      const double d = values_[i * n_ + j];
      if (!(d >= 0.0) || !std::isfinite(d)) {
        throw ValidationError("negative or non-finite distance at (" + std::to_string(i + 1) +
                              ", " + std::to_string(j + 1) + ")");
      }
      if (d != values_[j * n_ + i]) {
        throw ValidationError("asymmetric distance at (" + std::to_string(i + 1) + ", " +
                              std::to_string(j + 1) + ")");
      }
    }
  }
}

DistanceMatrix distance_matrix(const std::vector<LabeledRunSet>& run_sets, DistanceSpec spec) {
  if (run_sets.empty()) throw ContractError("no run sets given");
  const RunSet& first = run_sets.front().runs;
  for (const auto& rs : run_sets) {
    if (rs.runs.kind() != first.kind() || rs.runs.t() != first.t() || rs.runs.k() != first.k()) {
      throw ContractError("run set '" + rs.algorithm + "' (kind=" +
                          std::string(to_string(rs.runs.kind())) + ", t=" +
                          std::to_string(rs.runs.t()) + ", k=" + std::to_string(rs.runs.k()) +
                          ") does not match '" + run_sets.front().algorithm + "'");
    }
  }
  if (spec.kind == DistanceSpec::Kind::one_minus_similarity &&
      !is_compatible(spec.similarity, first.kind())) {
    throw ContractError(std::string(to_string(spec.similarity)) + " does not apply to " +
                        std::string(to_string(first.kind())) + " lists");
  }

  // Flatten every list into one point sequence.
  struct Point {
    const RunSet* owner;
    std::size_t index;
  };
  std::vector<Point> points;
  std::vector<PointLabel> labels;
  for (const auto& rs : run_sets) {
    for (std::size_t j = 0; j < rs.runs.runs(); ++j) {
      points.push_back({&rs.runs, j});
      labels.push_back({rs.algorithm, j + 1});
    }
  }

  const std::size_t n = points.size();
  std::vector<ProbVector> mapped;
  if (spec.kind == DistanceSpec::Kind::sqrt_js) {
    mapped.reserve(n);
    for (const auto& p : points) mapped.push_back(map_list(*p.owner, p.index));
  }

  std::vector<double> values(n * n, 0.0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      double d = 0.0;
      if (spec.kind == DistanceSpec::Kind::sqrt_js) {
        d = std::sqrt(js_pair(mapped[a], mapped[b]));
      } else {
        // Lists from different run sets: compare through a temporary pair.
        const RunSet pair(first.kind(), first.t(), first.k(),
                          {std::vector<Rank>(points[a].owner->list(points[a].index).begin(),
                                             points[a].owner->list(points[a].index).end()),
                           std::vector<Rank>(points[b].owner->list(points[b].index).begin(),
                                             points[b].owner->list(points[b].index).end())});
        d = std::max(0.0, 1.0 - pair_similarity(pair, spec.similarity, 0, 1));
      }
      values[a * n + b] = d;
      values[b * n + a] = d;
    }
  }
  return DistanceMatrix(n, std::move(values), std::move(labels));
}

namespace {

using Matrix = std::vector<double>;  // row-major n x n

// Cyclic Jacobi on a symmetric matrix. Returns eigenvalues and column eigenvectors.
void jacobi(Matrix& a, std::size_t n, Matrix& v, const SolverOptions& options) {
  v.assign(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;
  double total = 0.0;
  for (double x : a) total += x * x;
  const double threshold = options.tolerance * options.tolerance * total;
  for (std::size_t sweep = 0; sweep < options.max_iterations; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += a[p * n + q] * a[p * n + q];
    if (off <= threshold) return;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const double theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k * n + p];
          const double akq = a[k * n + q];
          a[k * n + p] = c * akp - s * akq;
          a[k * n + q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p * n + k];
          const double aqk = a[q * n + k];
          a[p * n + k] = c * apk - s * aqk;
          a[q * n + k] = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v[k * n + p];
          const double vkq = v[k * n + q];
          v[k * n + p] = c * vkp - s * vkq;
          v[k * n + q] = s * vkp + c * vkq;
        }
      }
    }
  }
  throw NumericError("eigensolver did not converge within " +
                     std::to_string(options.max_iterations) + " sweeps");
}

}  // namespace

Embedding classical_mds(const DistanceMatrix& dm, SolverOptions options) {
  const std::size_t n = dm.size();
  if (n < 3) throw ContractError("classical MDS needs at least 3 points");

  // B = -1/2 J D^2 J
  Matrix sq(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) sq[i * n + j] = dm(i, j) * dm(i, j);
  std::vector<double> row_mean(n, 0.0);
  double grand = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) row_mean[i] += sq[i * n + j];
    grand += row_mean[i];
    row_mean[i] /= static_cast<double>(n);
  }
  grand /= static_cast<double>(n * n);
  Matrix b(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      b[i * n + j] = -0.5 * (sq[i * n + j] - row_mean[i] - row_mean[j] + grand);

  double scale = 0.0;
  for (double x : b) scale = std::max(scale, std::abs(x));

  Embedding out;
  out.coords.assign(n, {0.0, 0.0});
  if (scale == 0.0) return out;

  Matrix a = b;
  Matrix v;
  jacobi(a, n, v, options);
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a[x * n + x] > a[y * n + y]; });

  std::array<std::vector<double>, 2> vecs;
  for (std::size_t c = 0; c < 2; ++c) {
    const std::size_t col = order[c];
    std::vector<double> vec(n);
    for (std::size_t i = 0; i < n; ++i) vec[i] = v[i * n + col];
    // Deterministic sign: largest-magnitude component positive.
    const auto big = std::max_element(vec.begin(), vec.end(),
                                      [](double x, double y) { return std::abs(x) < std::abs(y); });
    if (*big < 0) {
      for (auto& x : vec) x = -x;
    }
    out.raw_eigvals[c] = a[col * n + col];
    out.eigvals[c] = std::max(0.0, out.raw_eigvals[c]);
    vecs[c] = std::move(vec);
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < 2; ++c) out.coords[i][c] = vecs[c][i] * std::sqrt(out.eigvals[c]);
  }

  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double e = std::hypot(out.coords[i][0] - out.coords[j][0],
                                  out.coords[i][1] - out.coords[j][1]);
      num += (dm(i, j) - e) * (dm(i, j) - e);
      den += dm(i, j) * dm(i, j);
    }
  }
  out.stress = den > 0.0 ? std::sqrt(num / den) : 0.0;
  return out;
}

}  // namespace stabrank::mds
