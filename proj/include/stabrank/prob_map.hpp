#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "stabrank/rank_model.hpp"

namespace stabrank {

/// Probability distribution over t features induced by one list.
class ProbVector {
 public:
  ProbVector() = default;
  /// Throws ValidationError if an entry is negative or the sum is not 1
  /// within 1e-12.
  explicit ProbVector(std::vector<double> probs);

  std::size_t size() const noexcept { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }
  std::span<const double> values() const noexcept { return probs_; }

 private:
  std::vector<double> probs_;
};

/// Probability of the feature holding `rank` among `n` ranked features:
/// (1 / 2n) * (1 + sum_{m=rank}^{n} 1/m). Throws ContractError unless
/// 1 <= rank <= n.
double prob_of_rank_full(Rank rank, std::size_t n);

/// Table of prob_of_rank_full(r, n) for r = 1..n (index r-1). Entries are
/// strictly decreasing and sum to 1.
std::vector<double> rank_probabilities(std::size_t n);

ProbVector map_full(const FullRanking& r);
/// Same mapping with n = k applied to the ranked features; 0 elsewhere.
ProbVector map_partial(const PartialRanking& p);
/// 1/k on selected features, 0 elsewhere.
ProbVector map_topk(const TopKMask& s);

/// Mapping of the j-th list of a run set, dispatching on its kind.
ProbVector map_list(const RunSet& runs, std::size_t j);

/// Per-kind probability table indexed by list value: for full/partial,
/// entry v is the probability of rank v (entry 0 is 0); for topk, entry 1 is
/// 1/k and entry 0 is 0.
std::vector<double> value_probabilities(ListKind kind, std::size_t t, std::size_t k);

/// Divergence attained by a completely random generator,
/// sum_r p_r ln(p_r t) over the kind's probability table (ln(t/k) for topk).
/// Throws ContractError for invalid (t, k) and NumericError when the value is
/// 0, where stability is undefined.
double normalizer(ListKind kind, std::size_t t, std::size_t k);

}  // namespace stabrank
