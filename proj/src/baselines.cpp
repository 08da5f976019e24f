#include "stabrank/baselines.hpp"

#include <cstdint>
#include <span>
#include <string>

#include "stabrank/detail/compensated_sum.hpp"
#include "stabrank/errors.hpp"

namespace stabrank {

namespace {

double spearman_raw(std::span<const Rank> r, std::span<const Rank> r2) {
  if (r.size() != r2.size()) throw ContractError("rankings have different lengths");
  const auto t = static_cast<std::int64_t>(r.size());
  if (t < 2) throw ContractError("Spearman correlation needs t >= 2");
  std::int64_t sq = 0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    const std::int64_t d = static_cast<std::int64_t>(r[i]) - static_cast<std::int64_t>(r2[i]);
    sq += d * d;
  }
  const double denom = static_cast<double>(t) * (static_cast<double>(t) * t - 1.0);
  return 1.0 - 6.0 * static_cast<double>(sq) / denom;
}

struct Overlap {
  std::size_t both = 0;
  std::size_t either = 0;
};

// Works on topk flags and on partial ranks alike: nonzero means selected.
Overlap overlap(std::span<const Rank> a, std::span<const Rank> b) {
  if (a.size() != b.size()) throw ContractError("masks have different lengths");
  Overlap o;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const bool x = a[i] != 0;
    const bool y = b[i] != 0;
    o.both += (x && y) ? 1 : 0;
    o.either += (x || y) ? 1 : 0;
  }
  return o;
}

double kuncheva_raw(std::span<const Rank> a, std::size_t ka, std::span<const Rank> b,
                    std::size_t kb) {
  if (a.size() != b.size()) throw ContractError("masks have different lengths");
  if (ka != kb) throw ContractError("Kuncheva index needs subsets of equal size");
  const auto t = static_cast<std::int64_t>(a.size());
  const auto k = static_cast<std::int64_t>(ka);
  if (k == 0 || k == t) {
    throw NumericError("Kuncheva index is undefined for k = " + std::to_string(k) +
                       " with t = " + std::to_string(t));
  }
  const auto o = static_cast<std::int64_t>(overlap(a, b).both);
  return static_cast<double>(o * t - k * k) / static_cast<double>(k * (t - k));
}

double jaccard_raw(std::span<const Rank> a, std::span<const Rank> b) {
  const Overlap o = overlap(a, b);
  if (o.either == 0) throw ContractError("Jaccard index is undefined for two empty masks");
  return static_cast<double>(o.both) / static_cast<double>(o.either);
}

void require_compatible(Similarity metric, ListKind kind) {
  if (!is_compatible(metric, kind)) {
    throw ContractError(std::string(to_string(metric)) + " does not apply to " +
                        std::string(to_string(kind)) + " lists" +
                        (metric == Similarity::spearman ? " (needs full rankings)"
                                                        : " (needs top-k or partial lists)"));
  }
}

}  // namespace

std::string_view to_string(Similarity metric) {
  switch (metric) {
    case Similarity::spearman:
      return "spearman";
    case Similarity::kuncheva:
      return "kuncheva";
    case Similarity::jaccard:
      return "jaccard";
  }
  return "?";
}

std::optional<Similarity> parse_similarity(std::string_view text) {
  if (text == "spearman") return Similarity::spearman;
  if (text == "kuncheva") return Similarity::kuncheva;
  if (text == "jaccard") return Similarity::jaccard;
  return std::nullopt;
}

bool is_compatible(Similarity metric, ListKind kind) {
  if (metric == Similarity::spearman) return kind == ListKind::full;
  return kind == ListKind::topk || kind == ListKind::partial;
}

double spearman(const FullRanking& r, const FullRanking& r2) {
  return spearman_raw(r.ranks(), r2.ranks());
}

double kuncheva(const TopKMask& s, const TopKMask& s2) {
  return kuncheva_raw(s.flags(), s.k(), s2.flags(), s2.k());
}

double jaccard(const TopKMask& s, const TopKMask& s2) { return jaccard_raw(s.flags(), s2.flags()); }

double pair_similarity(const RunSet& runs, Similarity metric, std::size_t j1, std::size_t j2) {
  require_compatible(metric, runs.kind());
  const auto a = runs.list(j1);
  const auto b = runs.list(j2);
  switch (metric) {
    case Similarity::spearman:
      return spearman_raw(a, b);
    case Similarity::kuncheva:
      return kuncheva_raw(a, runs.k(), b, runs.k());
    case Similarity::jaccard:
      return jaccard_raw(a, b);
  }
  throw ContractError("unknown similarity");
}

PairwiseStability phi(const RunSet& runs, Similarity metric) {
  require_compatible(metric, runs.kind());
  const std::size_t n = runs.runs();
  PairwiseStability out{metric, 0.0, {}};
  out.pair_values.reserve(n * (n - 1) / 2);
  detail::CompensatedSum acc;
  for (std::size_t a = 0; a + 1 < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const double v = pair_similarity(runs, metric, a, b);
      out.pair_values.push_back(v);
      acc += v;
    }
  }
  out.phi = acc.value() / static_cast<double>(out.pair_values.size());
  return out;
}

}  // namespace stabrank
