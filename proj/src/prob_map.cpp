#include "stabrank/prob_map.hpp"

#include <cmath>
#include <string>

#include "stabrank/detail/compensated_sum.hpp"
#include "stabrank/errors.hpp"

namespace stabrank {

ProbVector::ProbVector(std::vector<double> probs) : probs_(std::move(probs)) {
  detail::CompensatedSum total;
  for (std::size_t i = 0; i < probs_.size(); ++i) {
    if (!(probs_[i] >= 0.0)) {
      throw ValidationError("probability at feature " + std::to_string(i + 1) +
                            " is negative or NaN");
    }
    total += probs_[i];
  }
  if (std::abs(total.value() - 1.0) > 1e-12) {
    throw ValidationError("probabilities sum to " + std::to_string(total.value()) + ", not 1");
  }
}

double prob_of_rank_full(Rank rank, std::size_t n) {
  if (rank < 1 || rank > n) {
    throw ContractError("rank " + std::to_string(rank) + " is outside 1.." + std::to_string(n));
  }
  detail::CompensatedSum tail;
  // smallest terms first
  for (std::size_t m = n; m >= rank; --m) tail += 1.0 / static_cast<double>(m);
  return (1.0 + tail.value()) / (2.0 * static_cast<double>(n));
}

std::vector<double> rank_probabilities(std::size_t n) {
  std::vector<double> probs(n);
  detail::CompensatedSum tail;
  const double scale = 1.0 / (2.0 * static_cast<double>(n));
  for (std::size_t r = n; r >= 1; --r) {
    tail += 1.0 / static_cast<double>(r);
    probs[r - 1] = (1.0 + tail.value()) * scale;
  }
  return probs;
}

std::vector<double> value_probabilities(ListKind kind, std::size_t t, std::size_t k) {
  if (t < 1 || k < 1 || k > t) {
    throw ContractError("invalid sizes t = " + std::to_string(t) + ", k = " + std::to_string(k));
  }
  switch (kind) {
    case ListKind::full: {
      if (k != t) throw ContractError("full rankings require k = t");
      std::vector<double> table(t + 1, 0.0);
      const auto probs = rank_probabilities(t);
      std::copy(probs.begin(), probs.end(), table.begin() + 1);
      return table;
    }
    case ListKind::partial: {
      std::vector<double> table(k + 1, 0.0);
      const auto probs = rank_probabilities(k);
      std::copy(probs.begin(), probs.end(), table.begin() + 1);
      return table;
    }
    case ListKind::topk:
      return {0.0, 1.0 / static_cast<double>(k)};
  }
  throw ContractError("unknown list kind");
}

namespace {

std::vector<double> lookup(std::span<const Rank> values, const std::vector<double>& table) {
  std::vector<double> probs(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) probs[i] = table[values[i]];
  return probs;
}

}  // namespace

ProbVector map_full(const FullRanking& r) {
  return ProbVector(lookup(r.ranks(), value_probabilities(ListKind::full, r.size(), r.size())));
}

ProbVector map_partial(const PartialRanking& p) {
  return ProbVector(lookup(p.ranks(), value_probabilities(ListKind::partial, p.size(), p.k())));
}

ProbVector map_topk(const TopKMask& s) {
  return ProbVector(lookup(s.flags(), value_probabilities(ListKind::topk, s.size(), s.k())));
}

ProbVector map_list(const RunSet& runs, std::size_t j) {
  return ProbVector(lookup(runs.list(j), value_probabilities(runs.kind(), runs.t(), runs.k())));
}

double normalizer(ListKind kind, std::size_t t, std::size_t k) {
  double value = 0.0;
  if (kind == ListKind::topk) {
    if (t < 1 || k < 1 || k > t) {
      throw ContractError("invalid sizes t = " + std::to_string(t) + ", k = " + std::to_string(k));
    }
    value = std::log(static_cast<double>(t)) - std::log(static_cast<double>(k));
  } else {
    const auto table = value_probabilities(kind, t, k);
    const double td = static_cast<double>(t);
    detail::CompensatedSum acc;
    for (std::size_t r = 1; r < table.size(); ++r) acc += table[r] * std::log(table[r] * td);
    value = acc.value();
  }
  if (!(value > 0.0)) {
    throw NumericError("random-baseline divergence is 0 for kind=" + std::string(to_string(kind)) +
                       ", t=" + std::to_string(t) + ", k=" + std::to_string(k) +
                       "; stability is undefined");
  }
  return value;
}

}  // namespace stabrank
