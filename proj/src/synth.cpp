#include "stabrank/synth.hpp"

#include <cmath>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "stabrank/errors.hpp"
#include "stabrank/random.hpp"

namespace stabrank::synth {

namespace {

std::vector<Rank> identity_ranks(std::size_t n) {
  std::vector<Rank> v(n);
  std::iota(v.begin(), v.end(), Rank{1});
  return v;
}

std::vector<Rank> random_permutation(Rng& rng, std::size_t n) {
  auto v = identity_ranks(n);
  rng.shuffle(std::span<Rank>(v));
  return v;
}

std::size_t rounded(double x) { return static_cast<std::size_t>(std::llround(x)); }

}  // namespace

void validate(const ExperimentConfig& cfg) {
  auto fail = [](const std::string& msg) { throw ContractError("experiment config: " + msg); };
  if (cfg.t < 2) fail("t must be at least 2");
  if (cfg.k < 1 || cfg.k > cfg.t) fail("k must lie in 1..t");
  if (cfg.runs < 2) fail("runs must be at least 2");
  if (cfg.fixed_runs > cfg.runs) fail("fixed_runs must not exceed runs");
  if (!(cfg.lambda >= 0.0 && cfg.lambda <= 1.0)) fail("lambda must lie in [0, 1]");
  if (!(cfg.q >= 0.0 && cfg.q <= 1.0)) fail("q must lie in [0, 1]");
}

RunSet gen_fr_family(const ExperimentConfig& cfg) {
  validate(cfg);
  Rng shared(derive_seed(cfg.seed, 0));
  const auto fixed = random_permutation(shared, cfg.t);

  std::vector<std::vector<Rank>> lists;
  lists.reserve(cfg.runs);
  for (std::size_t j = 0; j < cfg.runs; ++j) {
    if (j < cfg.fixed_runs) {
      lists.push_back(fixed);
    } else {
      Rng own(derive_seed(cfg.seed, j + 1));
      lists.push_back(random_permutation(own, cfg.t));
    }
  }
  return RunSet(ListKind::full, cfg.t, cfg.t, std::move(lists));
}

RunSet gen_fs_family(const ExperimentConfig& cfg) {
  return gen_fr_family(cfg).truncate(ListKind::topk, cfg.k);
}

std::size_t overlap_core_size(std::size_t t, std::size_t k, std::size_t target_overlap) {
  std::size_t best = 0;
  double best_err = INFINITY;
  for (std::size_t c = 0; c <= target_overlap && c < k; ++c) {
    const double rest = static_cast<double>(k - c);
    const double expected = static_cast<double>(c) + rest * rest / static_cast<double>(t - c);
    const double err = std::abs(expected - static_cast<double>(target_overlap));
    if (err < best_err) {
      best_err = err;
      best = c;
    }
  }
  return best;
}

RunSet gen_overlap_scenarios(const ExperimentConfig& cfg) {
  validate(cfg);
  if (cfg.target_overlap < 1 || cfg.target_overlap >= cfg.k) {
    throw ContractError("target_overlap must lie in 1..k-1");
  }
  if (cfg.t - cfg.k < cfg.k - cfg.target_overlap) {
    throw ContractError("feature pool exhausted: t - k = " + std::to_string(cfg.t - cfg.k) +
                        " < k - target_overlap = " + std::to_string(cfg.k - cfg.target_overlap));
  }

  const std::size_t core = overlap_core_size(cfg.t, cfg.k, cfg.target_overlap);
  const std::size_t own_count = cfg.k - core;

  // Stream 0: which features form the core, and the core's shared order.
  Rng shared(derive_seed(cfg.seed, 0));
  std::vector<std::size_t> features(cfg.t);
  std::iota(features.begin(), features.end(), std::size_t{0});
  shared.shuffle(std::span<std::size_t>(features));
  const std::span<const std::size_t> core_features(features.data(), core);
  const std::vector<std::size_t> pool(features.begin() + static_cast<std::ptrdiff_t>(core),
                                      features.end());

  // Ranks offset+1 .. offset+own_count hold the run-specific block.
  const std::size_t offset = rounded((1.0 - cfg.lambda) * static_cast<double>(core));
  std::vector<Rank> core_ranks;
  core_ranks.reserve(core);
  for (std::size_t r = 1; r <= cfg.k; ++r) {
    if (r <= offset || r > offset + own_count) core_ranks.push_back(static_cast<Rank>(r));
  }

  std::vector<std::vector<Rank>> lists;
  lists.reserve(cfg.runs);
  std::vector<std::size_t> draw(pool.size());
  for (std::size_t j = 0; j < cfg.runs; ++j) {
    Rng own(derive_seed(cfg.seed, j + 1));
    std::copy(pool.begin(), pool.end(), draw.begin());
    own.choose_front(std::span<std::size_t>(draw), own_count);

    std::vector<Rank> ranks(cfg.t, 0);
    for (std::size_t c = 0; c < core; ++c) ranks[core_features[c]] = core_ranks[c];
    for (std::size_t m = 0; m < own_count; ++m) {
      ranks[draw[m]] = static_cast<Rank>(offset + 1 + m);
    }
    lists.push_back(std::move(ranks));
  }
  return RunSet(ListKind::partial, cfg.t, cfg.k, std::move(lists));
}

RunSet gen_rank_shuffle_scenarios(const ExperimentConfig& cfg) {
  validate(cfg);
  Rng shared(derive_seed(cfg.seed, 0));
  std::vector<std::size_t> features(cfg.t);
  std::iota(features.begin(), features.end(), std::size_t{0});
  shared.choose_front(std::span<std::size_t>(features), cfg.k);
  const auto reference = random_permutation(shared, cfg.k);

  const std::size_t redrawn = rounded(cfg.q * static_cast<double>(cfg.k));
  std::vector<std::vector<Rank>> lists;
  lists.reserve(cfg.runs);
  std::vector<std::size_t> positions(cfg.k);
  std::vector<Rank> picked(redrawn);
  for (std::size_t j = 0; j < cfg.runs; ++j) {
    Rng own(derive_seed(cfg.seed, j + 1));
    std::iota(positions.begin(), positions.end(), std::size_t{0});
    own.choose_front(std::span<std::size_t>(positions), redrawn);
    for (std::size_t m = 0; m < redrawn; ++m) picked[m] = reference[positions[m]];
    own.shuffle(std::span<Rank>(picked));

    std::vector<Rank> sub = reference;
    for (std::size_t m = 0; m < redrawn; ++m) sub[positions[m]] = picked[m];

    std::vector<Rank> ranks(cfg.t, 0);
    for (std::size_t m = 0; m < cfg.k; ++m) ranks[features[m]] = sub[m];
    lists.push_back(std::move(ranks));
  }
  return RunSet(ListKind::partial, cfg.t, cfg.k, std::move(lists));
}

double mean_pairwise_overlap(const RunSet& runs) {
  const std::size_t n = runs.runs();
  std::size_t total = 0;
  for (std::size_t a = 0; a + 1 < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const auto x = runs.list(a);
      const auto y = runs.list(b);
      for (std::size_t i = 0; i < runs.t(); ++i) total += (x[i] != 0 && y[i] != 0) ? 1 : 0;
    }
  }
  return static_cast<double>(total) / static_cast<double>(n * (n - 1) / 2);
}

}  // namespace stabrank::synth
