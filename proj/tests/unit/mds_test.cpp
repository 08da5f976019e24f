#include "stabrank/mds.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "random_runs.hpp"
#include "stabrank/errors.hpp"
#include "stabrank/synth.hpp"

using namespace stabrank;
using namespace stabrank::mds;

namespace {

std::vector<PointLabel> labels(std::size_t n) {
  std::vector<PointLabel> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back({"a", i + 1});
  return out;
}

DistanceMatrix from_points(const std::vector<std::array<double, 2>>& pts) {
  const std::size_t n = pts.size();
  std::vector<double> d(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      d[i * n + j] = std::hypot(pts[i][0] - pts[j][0], pts[i][1] - pts[j][1]);
  return DistanceMatrix(n, d, labels(n));
}

double embedded(const Embedding& e, std::size_t i, std::size_t j) {
  return std::hypot(e.coords[i][0] - e.coords[j][0], e.coords[i][1] - e.coords[j][1]);
}

}  // namespace

TEST(Mds, DistanceMatrixInvariants) {
  EXPECT_THROW(DistanceMatrix(2, {0, 1, 2, 0}, labels(2)), ValidationError);
  EXPECT_THROW(DistanceMatrix(2, {1, 1, 1, 0}, labels(2)), ValidationError);
  EXPECT_THROW(DistanceMatrix(2, {0, -1, -1, 0}, labels(2)), ValidationError);
  EXPECT_THROW(DistanceMatrix(2, {0, 1, 1, 0}, labels(1)), ValidationError);
}

TEST(Mds, EquilateralTriangle) {
  const DistanceMatrix dm(3, {0, 1, 1, 1, 0, 1, 1, 1, 0}, labels(3));
  const auto e = classical_mds(dm);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) EXPECT_NEAR(embedded(e, i, j), 1.0, 1e-6);
  EXPECT_NEAR(e.eigvals[0], 0.5, 1e-9);
  EXPECT_NEAR(e.eigvals[1], 0.5, 1e-9);
  EXPECT_NEAR(e.stress, 0.0, 1e-6);
}

TEST(Mds, AllPointsIdentical) {
  const DistanceMatrix dm(4, std::vector<double>(16, 0.0), labels(4));
  const auto e = classical_mds(dm);
  for (const auto& c : e.coords) {
    EXPECT_EQ(c[0], 0.0);
    EXPECT_EQ(c[1], 0.0);
  }
  EXPECT_EQ(e.eigvals[0], 0.0);
  EXPECT_EQ(e.eigvals[1], 0.0);
}

TEST(Mds, DuplicatedPointsCoincide) {
  const auto e = classical_mds(from_points({{0, 0}, {0, 0}, {3, 0}}));
  EXPECT_NEAR(embedded(e, 0, 1), 0.0, 1e-9);
  EXPECT_NEAR(embedded(e, 0, 2), 3.0, 1e-6);
}

TEST(Mds, PlanarConfigurationsReconstruct) {
  Rng rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 3 + rng.below(15);
    std::vector<std::array<double, 2>> pts(n);
    for (auto& p : pts) {
      p = {static_cast<double>(rng.below(2001)) / 100.0 - 10.0,
           static_cast<double>(rng.below(2001)) / 100.0 - 10.0};
    }
    const auto dm = from_points(pts);
    const auto e = classical_mds(dm);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) ASSERT_NEAR(embedded(e, i, j), dm(i, j), 1e-6);
    EXPECT_GE(e.eigvals[0], e.eigvals[1]);
  }
}

TEST(Mds, RelabelingPreservesEmbeddedDistances) {
  Rng rng(32);
  std::vector<std::array<double, 2>> pts(8);
  for (auto& p : pts) p = {static_cast<double>(rng.below(100)), static_cast<double>(rng.below(100))};
  std::vector<std::array<double, 2>> rev(pts.rbegin(), pts.rend());
  const auto a = classical_mds(from_points(pts));
  const auto b = classical_mds(from_points(rev));
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      EXPECT_NEAR(embedded(a, i, j), embedded(b, n - 1 - i, n - 1 - j), 1e-6);
}

TEST(Mds, NonEuclideanInputClampsNegativeEigenvalues) {
  // Triangle-inequality violation forces a negative eigenvalue.
  const DistanceMatrix dm(3, {0, 1, 5, 1, 0, 1, 5, 1, 0}, labels(3));
  const auto e = classical_mds(dm);
  EXPECT_GE(e.eigvals[0], 0.0);
  EXPECT_GE(e.eigvals[1], 0.0);
  EXPECT_LT(e.raw_eigvals[1], 0.0);
  EXPECT_EQ(e.eigvals[1], 0.0);
}

TEST(Mds, TooFewPoints) {
  const DistanceMatrix dm(2, {0, 1, 1, 0}, labels(2));
  EXPECT_THROW(classical_mds(dm), ContractError);
}

TEST(Mds, NonConvergenceIsReported) {
  const DistanceMatrix dm(4, {0, 1, 2, 3, 1, 0, 1, 2, 2, 1, 0, 1, 3, 2, 1, 0}, labels(4));
  EXPECT_THROW(classical_mds(dm, SolverOptions{1e-300, 2}), NumericError);
}

TEST(Mds, SqrtJsDistances) {
  const RunSet masks(ListKind::topk, 4, 2, {{1, 1, 0, 0}, {0, 0, 1, 1}, {1, 1, 0, 0}});
  const auto dm = distance_matrix({{"alg", masks}});
  EXPECT_NEAR(dm(0, 1), std::sqrt(std::log(2.0)), 1e-12);
  EXPECT_EQ(dm(0, 2), 0.0);
  EXPECT_EQ(dm.labels()[2].run, 3u);
}

TEST(Mds, SqrtJsIsAMetric) {
  Rng rng(33);
  for (auto kind : {ListKind::full, ListKind::partial, ListKind::topk}) {
    const RunSet runs = stabrank::testing::random_run_set(rng, kind, 12, 4, 15);
    const auto dm = distance_matrix({{"x", runs}});
    for (std::size_t a = 0; a < dm.size(); ++a)
      for (std::size_t b = 0; b < dm.size(); ++b)
        for (std::size_t c = 0; c < dm.size(); ++c)
          ASSERT_LE(dm(a, c), dm(a, b) + dm(b, c) + 1e-12);
  }
}

TEST(Mds, OneMinusSimilarity) {
  const RunSet masks(ListKind::topk, 10, 4,
                     {{1, 1, 1, 0, 0, 0, 0, 0, 1, 0}, {0, 1, 0, 0, 1, 0, 0, 1, 1, 0}});
  const auto dm = distance_matrix({{"a", masks}}, {DistanceSpec::Kind::one_minus_similarity,
                                                   Similarity::jaccard});
  EXPECT_NEAR(dm(0, 1), 2.0 / 3.0, 1e-12);
  EXPECT_THROW(distance_matrix({{"a", masks}}, {DistanceSpec::Kind::one_minus_similarity,
                                                Similarity::spearman}),
               ContractError);
}

TEST(Mds, MixedKindsRejected) {
  Rng rng(34);
  const RunSet a = stabrank::testing::random_run_set(rng, ListKind::topk, 10, 4, 3);
  const RunSet b = stabrank::testing::random_run_set(rng, ListKind::partial, 10, 4, 3);
  const RunSet c = stabrank::testing::random_run_set(rng, ListKind::topk, 10, 5, 3);
  EXPECT_THROW(distance_matrix({{"a", a}, {"b", b}}), ContractError);
  EXPECT_THROW(distance_matrix({{"a", a}, {"c", c}}), ContractError);
}

TEST(Mds, StableRunsCollapseRandomRunsScatter) {
  synth::ExperimentConfig cfg;
  cfg.t = 200;
  cfg.k = 60;
  cfg.runs = 15;
  cfg.seed = 35;
  cfg.fixed_runs = cfg.runs;
  const RunSet stable = synth::gen_fr_family(cfg);
  cfg.fixed_runs = 0;
  cfg.seed = 36;
  const RunSet random = synth::gen_fr_family(cfg);
  const auto dm = distance_matrix({{"stable", stable}, {"random", random}});
  const auto e = classical_mds(dm);
  double within_stable = 0.0, within_random = 0.0;
  for (std::size_t i = 0; i < 15; ++i) {
    for (std::size_t j = i + 1; j < 15; ++j) {
      within_stable += embedded(e, i, j);
      within_random += embedded(e, 15 + i, 15 + j);
    }
  }
  EXPECT_LT(within_stable, 1e-9);
  EXPECT_GT(within_random, 0.0);
}
