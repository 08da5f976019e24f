#include "stabrank/divergence.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "random_runs.hpp"
#include "stabrank/errors.hpp"

using namespace stabrank;
using stabrank::testing::random_full;
using stabrank::testing::random_list;
using stabrank::testing::random_run_set;

namespace {

ProbVector random_distribution(Rng& rng, std::size_t n, bool with_zeros) {
  std::vector<double> v(n);
  double sum = 0.0;
  for (auto& x : v) {
    x = static_cast<double>(rng.below(1000)) + (with_zeros ? 0.0 : 1.0);
    sum += x;
  }
  if (sum == 0.0) {
    v[0] = 1.0;
    sum = 1.0;
  }
  for (auto& x : v) x /= sum;
  // renormalize the last entry so the sum is 1 to rounding
  double rest = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) rest += v[i];
  v[n - 1] = std::max(0.0, 1.0 - rest);
  return ProbVector(v);
}

// Eq. 11 summed naively, run by run.
double naive_js(std::span<const ProbVector> ps) {
  const std::size_t t = ps.front().size();
  std::vector<long double> mean(t, 0.0L);
  for (const auto& p : ps)
    for (std::size_t i = 0; i < t; ++i) mean[i] += p[i];
  for (auto& m : mean) m /= static_cast<long double>(ps.size());
  long double acc = 0.0L;
  for (const auto& p : ps)
    for (std::size_t i = 0; i < t; ++i)
      if (p[i] > 0) acc += p[i] * std::log(static_cast<long double>(p[i]) / mean[i]);
  return static_cast<double>(acc / static_cast<long double>(ps.size()));
}

}  // namespace

TEST(Divergence, KlExamples) {
  const ProbVector p({1.0, 0.0});
  const ProbVector u({0.5, 0.5});
  EXPECT_EQ(kl(u, u), 0.0);
  EXPECT_NEAR(kl(p, u), std::log(2.0), 1e-15);
  EXPECT_THROW(kl(u, p), NumericError);
  EXPECT_THROW(kl(u, ProbVector({1.0})), ContractError);
}

TEST(Divergence, JsPairExamples) {
  const ProbVector a({1.0, 0.0});
  const ProbVector b({0.0, 1.0});
  EXPECT_EQ(js_pair(a, a), 0.0);
  EXPECT_NEAR(js_pair(a, b), std::log(2.0), 1e-15);
}

TEST(Divergence, JsPairSymmetricAndBounded) {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng.below(12);
    const auto p = random_distribution(rng, n, true);
    const auto q = random_distribution(rng, n, true);
    const double d = js_pair(p, q);
    EXPECT_DOUBLE_EQ(d, js_pair(q, p));
    EXPECT_GE(d, 0.0);
    EXPECT_LE(d, std::log(2.0));
  }
}

TEST(Divergence, JsMultiMatchesPairAndNaiveSum) {
  Rng rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng.below(15);
    const std::vector<ProbVector> two{random_distribution(rng, n, true),
                                      random_distribution(rng, n, true)};
    EXPECT_NEAR(js_multi(two), js_pair(two[0], two[1]), 1e-12);

    std::vector<ProbVector> many;
    const std::size_t runs = 2 + rng.below(10);
    for (std::size_t j = 0; j < runs; ++j) many.push_back(random_distribution(rng, n, true));
    EXPECT_NEAR(js_multi(many), naive_js(many), 1e-12);

    // ordering of the inputs does not matter
    std::vector<ProbVector> reversed(many.rbegin(), many.rend());
    EXPECT_NEAR(js_multi(reversed), js_multi(many), 1e-14);
  }
}

TEST(Divergence, JsMultiIdenticalIsZero) {
  const ProbVector p({0.2, 0.3, 0.5});
  const std::vector<ProbVector> same(7, p);
  EXPECT_EQ(js_multi(same), 0.0);
  EXPECT_THROW(js_multi(std::vector<ProbVector>{p}), ContractError);
}

TEST(Divergence, RunSetPathMatchesMappedVectors) {
  Rng rng(13);
  for (auto kind : {ListKind::full, ListKind::partial, ListKind::topk}) {
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t t = 3 + rng.below(30);
      const std::size_t k = 1 + rng.below(t - 1);
      const RunSet runs = random_run_set(rng, kind, t, k, 2 + rng.below(8));
      std::vector<ProbVector> mapped;
      for (std::size_t j = 0; j < runs.runs(); ++j) mapped.push_back(map_list(runs, j));
      EXPECT_NEAR(js_divergence(runs), js_multi(mapped), 1e-13);
    }
  }
}

TEST(Divergence, IdenticalRunsAreFullyStable) {
  Rng rng(14);
  for (std::size_t t : {2u, 10u, 2000u}) {
    const auto r = random_full(rng, t);
    const RunSet runs(ListKind::full, t, t, std::vector<std::vector<Rank>>(100, r));
    const auto rep = s_js(runs);
    EXPECT_EQ(rep.s_js, 1.0);
    EXPECT_EQ(rep.d_js, 0.0);
  }
  const auto mask = random_list(rng, ListKind::topk, 2000, 600);
  const RunSet masks(ListKind::topk, 2000, 600, std::vector<std::vector<Rank>>(100, mask));
  EXPECT_EQ(s_js(masks).s_js, 1.0);
}

TEST(Divergence, RandomRankingsAreNearZero) {
  Rng rng(15);
  const RunSet runs = random_run_set(rng, ListKind::full, 2000, 2000, 100);
  const auto rep = s_js(runs);
  EXPECT_GE(rep.s_js, 0.0);
  EXPECT_LE(rep.s_js, 0.05);
}

TEST(Divergence, ReportInvariants) {
  Rng rng(16);
  for (int trial = 0; trial < 200; ++trial) {
    const auto kind = static_cast<ListKind>(rng.below(3));
    const std::size_t t = 2 + rng.below(20);
    const std::size_t k = 1 + rng.below(t - 1);
    const RunSet runs = random_run_set(rng, kind, t, k, 2 + rng.below(6));
    const auto rep = s_js(runs);
    EXPECT_NEAR(rep.s_js, 1.0 - rep.d_js / rep.d_star, 1e-12);
    EXPECT_GE(rep.s_js, 0.0);
    EXPECT_LE(rep.s_js, 1.0);
    EXPECT_LE(rep.d_js, rep.d_star);
  }
}

TEST(Divergence, EntropyIdentity) {
  Rng rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const auto kind = static_cast<ListKind>(trial % 3);
    const std::size_t t = 2 + rng.below(49);
    const std::size_t k = 1 + rng.below(std::min<std::size_t>(20, t - 1));
    const RunSet runs = random_run_set(rng, kind, t, k, 2 + rng.below(19));
    EXPECT_NEAR(s_js(runs).s_js, stabrank::testing::entropy_identity_sjs(runs), 1e-10);
  }
}

TEST(Divergence, FeaturePermutationInvariance) {
  Rng rng(18);
  for (auto kind : {ListKind::full, ListKind::partial, ListKind::topk}) {
    const RunSet runs = random_run_set(rng, kind, 25, 8, 6);
    std::vector<std::size_t> sigma(25);
    std::iota(sigma.begin(), sigma.end(), std::size_t{0});
    rng.shuffle(std::span<std::size_t>(sigma));
    std::vector<std::vector<Rank>> permuted;
    for (const auto& l : runs.lists()) {
      std::vector<Rank> p(l.size());
      for (std::size_t i = 0; i < l.size(); ++i) p[i] = l[sigma[i]];
      permuted.push_back(p);
    }
    const RunSet other(kind, runs.t(), runs.k(), permuted);
    EXPECT_NEAR(s_js(other).s_js, s_js(runs).s_js, 1e-12);

    std::vector<std::vector<Rank>> reordered(runs.lists().rbegin(), runs.lists().rend());
    EXPECT_NEAR(s_js(RunSet(kind, runs.t(), runs.k(), reordered)).s_js, s_js(runs).s_js, 1e-12);
  }
}

TEST(Divergence, DegenerateNormalizerPropagates) {
  const RunSet all(ListKind::topk, 3, 3, {{1, 1, 1}, {1, 1, 1}});
  EXPECT_THROW(s_js(all), NumericError);
}

// One changed list is always detected: s_js < 1 unless all lists agree.
TEST(Divergence, MaximumOnlyForIdenticalLists) {
  std::vector<Rank> perm{1, 2, 3, 4};
  std::vector<std::vector<Rank>> perms;
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));
  for (const auto& a : perms) {
    for (const auto& b : perms) {
      const RunSet runs(ListKind::full, 4, 4, {a, a, b});
      const double s = s_js(runs).s_js;
      if (a == b) {
        EXPECT_EQ(s, 1.0);
      } else {
        EXPECT_LT(s, 1.0);
      }
    }
  }
}
