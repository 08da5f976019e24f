#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "stabrank/prob_map.hpp"
#include "stabrank/rank_model.hpp"

namespace stabrank {

/// Kullback-Leibler divergence sum_i p_i ln(p_i / q_i) in nats, with
/// 0 ln 0 = 0. Throws ContractError on length mismatch and NumericError when
/// p has mass where q has none.
double kl(const ProbVector& p, const ProbVector& q);

/// Jensen-Shannon divergence of two distributions (nats); bounded by ln 2.
double js_pair(const ProbVector& p, const ProbVector& q);

/// Generalized Jensen-Shannon divergence: mean KL of each distribution from
/// the entrywise mean. Needs at least two vectors of equal length.
double js_multi(std::span<const ProbVector> ps);

struct StabilityReport {
  ListKind kind;
  std::size_t t;
  std::size_t k;
  std::size_t runs;
  double d_js;    // nats
  double d_star;  // nats
  double s_js;
};

/// Generalized JS divergence of the mapped lists of a run set, evaluated
/// feature by feature without materializing the probability vectors.
double js_divergence(const RunSet& runs);

/// s_js = 1 - D_JS / D*_JS over the mapped lists. Propagates NumericError
/// from normalizer() when the random baseline is 0.
StabilityReport s_js(const RunSet& runs);

}  // namespace stabrank
