#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "stabrank/baselines.hpp"
#include "stabrank/rank_model.hpp"

namespace stabrank::mds {

struct PointLabel {
  std::string algorithm;
  std::size_t run;  // 1-based index within the algorithm's run set
};

/// Symmetric, non-negative, zero-diagonal n x n matrix of distances between
/// lists, stored row-major.
class DistanceMatrix {
 public:
  /// Throws ValidationError if the invariants do not hold or the sizes
  /// disagree.
  DistanceMatrix(std::size_t n, std::vector<double> values, std::vector<PointLabel> labels);

  std::size_t size() const noexcept { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return values_[i * n_ + j]; }
  const std::vector<PointLabel>& labels() const noexcept { return labels_; }

 private:
  std::size_t n_;
  std::vector<double> values_;
  std::vector<PointLabel> labels_;
};

struct LabeledRunSet {
  std::string algorithm;
  RunSet runs;
};

/// How two lists are compared.
struct DistanceSpec {
  enum class Kind { sqrt_js, one_minus_similarity };
  Kind kind = Kind::sqrt_js;
  /// Used only by one_minus_similarity; the result may not be a metric.
  Similarity similarity = Similarity::kuncheva;
};

/// Distances between every pair of lists across all run sets. Throws
/// ContractError when the run sets differ in kind, t or k.
DistanceMatrix distance_matrix(const std::vector<LabeledRunSet>& run_sets,
                               DistanceSpec spec = {});

struct Embedding {
  /// n points in the plane.
  std::vector<std::array<double, 2>> coords;
  /// The two retained eigenvalues of the double-centred matrix, descending,
  /// after clamping negatives to 0.
  std::array<double, 2> eigvals{};
  /// Raw eigenvalues before clamping (negative for non-Euclidean input).
  std::array<double, 2> raw_eigvals{};
  /// Kruskal stress-1 of the embedded distances against the input.
  double stress = 0.0;
};

struct SolverOptions {
  double tolerance = 1e-14;  // off-diagonal norm relative to the matrix norm
  std::size_t max_iterations = 100;  // Jacobi sweeps
};

/// Classical (Torgerson) scaling to two dimensions. Needs n >= 3; throws
/// NumericError if the eigensolver does not converge.
Embedding classical_mds(const DistanceMatrix& dm, SolverOptions options = {});

}  // namespace stabrank::mds
