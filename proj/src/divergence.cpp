#include "stabrank/divergence.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "stabrank/detail/compensated_sum.hpp"
#include "stabrank/errors.hpp"

namespace stabrank {

namespace {

void require_same_length(std::size_t a, std::size_t b) {
  if (a != b) {
    throw ContractError("distributions have different lengths " + std::to_string(a) + " and " +
                        std::to_string(b));
  }
}

// p ln(p / q) with the 0 ln 0 = 0 convention; caller guarantees q > 0 when p > 0.
double kl_term(double p, double q) { return p > 0.0 ? p * std::log(p / q) : 0.0; }

}  // namespace

double kl(const ProbVector& p, const ProbVector& q) {
  require_same_length(p.size(), q.size());
  detail::CompensatedSum acc;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] > 0.0 && q[i] <= 0.0) {
      throw NumericError("KL divergence is infinite: feature " + std::to_string(i + 1) +
                         " has mass in p but none in q");
    }
    acc += kl_term(p[i], q[i]);
  }
  return std::max(0.0, acc.value());
}

double js_pair(const ProbVector& p, const ProbVector& q) {
  require_same_length(p.size(), q.size());
  detail::CompensatedSum acc;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == q[i]) continue;
    const double m = 0.5 * (p[i] + q[i]);
    acc += kl_term(p[i], m) + kl_term(q[i], m);
  }
  return std::clamp(0.5 * acc.value(), 0.0, std::log(2.0));
}

double js_multi(std::span<const ProbVector> ps) {
  if (ps.size() < 2) throw ContractError("generalized JS divergence needs at least 2 distributions");
  const std::size_t t = ps.front().size();
  for (const auto& p : ps) require_same_length(t, p.size());

  const double inv_k = 1.0 / static_cast<double>(ps.size());
  detail::CompensatedSum acc;
  for (std::size_t i = 0; i < t; ++i) {
    const double first = ps.front()[i];
    bool all_equal = true;
    detail::CompensatedSum col;
    for (const auto& p : ps) {
      col += p[i];
      all_equal = all_equal && p[i] == first;
    }
    if (all_equal) continue;
    const double mean = col.value() * inv_k;
    for (const auto& p : ps) acc += kl_term(p[i], mean);
  }
  return std::max(0.0, acc.value() * inv_k);
}

double js_divergence(const RunSet& runs) {
  const auto table = value_probabilities(runs.kind(), runs.t(), runs.k());
  const std::size_t n = runs.runs();
  const double inv_k = 1.0 / static_cast<double>(n);

  detail::CompensatedSum acc;
  std::vector<double> column(n);
  for (std::size_t i = 0; i < runs.t(); ++i) {
    bool all_equal = true;
    detail::CompensatedSum col;
    for (std::size_t j = 0; j < n; ++j) {
      column[j] = table[runs.lists()[j][i]];
      col += column[j];
      all_equal = all_equal && column[j] == column[0];
    }
    if (all_equal) continue;
    const double mean = col.value() * inv_k;
    for (double p : column) acc += kl_term(p, mean);
  }
  return std::max(0.0, acc.value() * inv_k);
}

StabilityReport s_js(const RunSet& runs) {
  const double d_star = normalizer(runs.kind(), runs.t(), runs.k());
  const double d_js = std::min(js_divergence(runs), d_star);
  return StabilityReport{
      .kind = runs.kind(),
      .t = runs.t(),
      .k = runs.k(),
      .runs = runs.runs(),
      .d_js = d_js,
      .d_star = d_star,
      .s_js = 1.0 - d_js / d_star,
  };
}

}  // namespace stabrank
