#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stabrank/rank_model.hpp"

namespace stabrank {

/// Pairwise similarity measures usable inside the pairwise-average framework.
enum class Similarity { spearman, kuncheva, jaccard };

std::string_view to_string(Similarity metric);
std::optional<Similarity> parse_similarity(std::string_view text);

/// Whether `metric` can be evaluated on lists of `kind`. Spearman needs full
/// rankings; Kuncheva and Jaccard need masks (partial lists are reduced to
/// their masks).
bool is_compatible(Similarity metric, ListKind kind);

/// 1 - 6 sum (r_i - r2_i)^2 / (t (t^2 - 1)). Ranges over [-1, 1]; reversed
/// rankings give -1. Throws ContractError for t < 2 or length mismatch.
double spearman(const FullRanking& r, const FullRanking& r2);

/// Chance-corrected overlap (o t - k^2) / (k (t - k)), o = |s & s2|.
/// Negative when the overlap is below its chance level k^2/t.
/// Throws ContractError on size mismatch and NumericError when k = t.
double kuncheva(const TopKMask& s, const TopKMask& s2);

/// |s & s2| / |s | s2|, in [0, 1].
double jaccard(const TopKMask& s, const TopKMask& s2);

/// Similarity of lists j1 and j2 of a run set. Throws ContractError when the
/// metric does not apply to the run set's kind.
double pair_similarity(const RunSet& runs, Similarity metric, std::size_t j1, std::size_t j2);

struct PairwiseStability {
  Similarity metric;
  double phi;
  /// Row-major upper triangle: (0,1), (0,2), ..., (K-2,K-1).
  std::vector<double> pair_values;
};

/// Mean similarity over all K(K-1)/2 unordered pairs of lists.
PairwiseStability phi(const RunSet& runs, Similarity metric);

}  // namespace stabrank
