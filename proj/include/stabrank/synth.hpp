#pragma once

#include <cstddef>
#include <cstdint>

#include "stabrank/rank_model.hpp"

namespace stabrank::synth {

/// Parameters of one synthetic run set.
///
/// Every generator is a pure function of the config: stream 0 (derived from
/// `seed`) draws what all runs share, and stream j+1 draws what is specific to
/// run j (see derive_seed in random.hpp).
struct ExperimentConfig {
  std::size_t t = 2000;
  std::size_t k = 600;
  std::size_t runs = 100;
  std::uint64_t seed = 0;
  /// Number of runs that repeat the fixed output (FR-i / FS-i families).
  std::size_t fixed_runs = 0;
  /// Location of the disagreement in the overlap scenario: 0 = bottom ranks,
  /// 1 = top ranks.
  double lambda = 0.0;
  /// Fraction of rank positions re-drawn per run in the rank-shuffle scenario.
  double q = 0.0;
  /// Expected number of features shared by two runs in the overlap scenario.
  std::size_t target_overlap = 350;
};

/// Throws ContractError if the config breaks its range invariants.
void validate(const ExperimentConfig& cfg);

/// `fixed_runs` copies of one random permutation followed by
/// runs - fixed_runs independent uniform permutations.
RunSet gen_fr_family(const ExperimentConfig& cfg);

/// gen_fr_family truncated to top-k masks.
RunSet gen_fs_family(const ExperimentConfig& cfg);

/// Number of features every run of the overlap scenario shares. Chosen so
/// that core + E[pool collisions] = core + (k - core)^2 / (t - core) is as
/// close as possible to `target_overlap`.
std::size_t overlap_core_size(std::size_t t, std::size_t k, std::size_t target_overlap);

/// Partial lists with a shared core plus run-specific features drawn from the
/// remaining pool. The core keeps one shared internal order; the
/// run-specific block occupies the bottom ranks at lambda = 0 and the top
/// ranks at lambda = 1. Feature choices do not depend on lambda.
/// Throws ContractError when target_overlap >= k or the pool is too small
/// (t - k < k - target_overlap).
RunSet gen_overlap_scenarios(const ExperimentConfig& cfg);

/// Partial lists that all select the same k features. Each run starts from a
/// shared reference ranking and re-draws round(q k) rank positions uniformly:
/// q = 0 gives identical lists, q = 1 independent uniform rankings of the k.
RunSet gen_rank_shuffle_scenarios(const ExperimentConfig& cfg);

/// Mean number of selected features shared by two distinct runs.
double mean_pairwise_overlap(const RunSet& runs);

}  // namespace stabrank::synth
