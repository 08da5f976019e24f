#include "stabrank/rank_model.hpp"

#include <algorithm>
#include <string>

#include "stabrank/errors.hpp"

namespace stabrank {

namespace {

std::string position(std::size_t i) { return "feature " + std::to_string(i + 1); }

// Shared check: `values` restricted to nonzero entries is a permutation of 1..n.
std::optional<Violation> check_rank_permutation(std::span<const Rank> values, std::size_t n) {
  std::vector<std::size_t> seen_at(n + 1, 0);
  std::size_t nonzero = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const Rank r = values[i];
    if (r == 0) continue;
    if (r > n) {
      return Violation{"rank " + std::to_string(r) + " at " + position(i) + " is out of range 1.." +
                       std::to_string(n)};
    }
    if (seen_at[r] != 0) {
      return Violation{"duplicate rank " + std::to_string(r) + " at " + position(seen_at[r] - 1) +
                       " and " + position(i)};
    }
    seen_at[r] = i + 1;
    ++nonzero;
  }
  if (nonzero != n) {
    return Violation{std::to_string(nonzero) + " ranked features, expected " + std::to_string(n)};
  }
  return std::nullopt;
}

std::size_t count_nonzero(std::span<const Rank> values) {
  return static_cast<std::size_t>(
      std::count_if(values.begin(), values.end(), [](Rank v) { return v != 0; }));
}

void throw_if(const std::optional<Violation>& v) {
  if (v) throw ValidationError(v->message);
}

void check_k(std::size_t k, std::size_t t) {
  if (k < 1 || k > t) {
    throw ContractError("k = " + std::to_string(k) + " is outside 1.." + std::to_string(t));
  }
}

}  // namespace

std::string_view to_string(ListKind kind) {
  switch (kind) {
    case ListKind::full:
      return "full";
    case ListKind::partial:
      return "partial";
    case ListKind::topk:
      return "topk";
  }
  return "?";
}

std::optional<ListKind> parse_list_kind(std::string_view text) {
  if (text == "full") return ListKind::full;
  if (text == "partial") return ListKind::partial;
  if (text == "topk") return ListKind::topk;
  return std::nullopt;
}

std::optional<Violation> validate_full(std::span<const Rank> ranks) {
  if (ranks.empty()) return Violation{"empty ranking"};
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    if (ranks[i] == 0) return Violation{"rank 0 at " + position(i) + " in a full ranking"};
  }
  return check_rank_permutation(ranks, ranks.size());
}

std::optional<Violation> validate_partial(std::span<const Rank> ranks, std::size_t k) {
  if (ranks.empty()) return Violation{"empty ranking"};
  if (k < 1 || k > ranks.size()) {
    return Violation{"k = " + std::to_string(k) + " is outside 1.." + std::to_string(ranks.size())};
  }
  return check_rank_permutation(ranks, k);
}

std::optional<Violation> validate_topk(std::span<const Rank> flags, std::size_t k) {
  if (flags.empty()) return Violation{"empty mask"};
  if (k < 1 || k > flags.size()) {
    return Violation{"k = " + std::to_string(k) + " is outside 1.." + std::to_string(flags.size())};
  }
  for (std::size_t i = 0; i < flags.size(); ++i) {
    if (flags[i] > 1) {
      return Violation{"non-binary value " + std::to_string(flags[i]) + " at " + position(i)};
    }
  }
  const std::size_t ones = count_nonzero(flags);
  if (ones != k) {
    return Violation{std::to_string(ones) + " ones, expected " + std::to_string(k)};
  }
  return std::nullopt;
}

std::optional<Violation> validate(ListKind kind, std::span<const Rank> values, std::size_t k) {
  switch (kind) {
    case ListKind::full:
      if (auto v = validate_full(values)) return v;
      if (k != values.size()) {
        return Violation{"k = " + std::to_string(k) + " must equal t = " +
                         std::to_string(values.size()) + " for a full ranking"};
      }
      return std::nullopt;
    case ListKind::partial:
      return validate_partial(values, k);
    case ListKind::topk:
      return validate_topk(values, k);
  }
  return Violation{"unknown list kind"};
}

FullRanking::FullRanking(std::vector<Rank> ranks) : ranks_(std::move(ranks)) {
  throw_if(validate_full(ranks_));
}

PartialRanking::PartialRanking(std::vector<Rank> ranks)
    : ranks_(std::move(ranks)), k_(count_nonzero(ranks_)) {
  throw_if(validate_partial(ranks_, k_));
}

PartialRanking::PartialRanking(std::vector<Rank> ranks, std::size_t k)
    : ranks_(std::move(ranks)), k_(k) {
  throw_if(validate_partial(ranks_, k_));
}

TopKMask::TopKMask(std::vector<Rank> flags) : flags_(std::move(flags)), k_(count_nonzero(flags_)) {
  throw_if(validate_topk(flags_, k_));
}

TopKMask::TopKMask(std::vector<Rank> flags, std::size_t k) : flags_(std::move(flags)), k_(k) {
  throw_if(validate_topk(flags_, k_));
}

TopKMask full_to_topk(const FullRanking& r, std::size_t k) {
  check_k(k, r.size());
  std::vector<Rank> flags(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) flags[i] = r[i] <= k ? 1 : 0;
  return TopKMask(std::move(flags), k);
}

PartialRanking full_to_partial(const FullRanking& r, std::size_t k) {
  check_k(k, r.size());
  std::vector<Rank> ranks(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) ranks[i] = r[i] <= k ? r[i] : 0;
  return PartialRanking(std::move(ranks), k);
}

TopKMask partial_to_topk(const PartialRanking& p) {
  std::vector<Rank> flags(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) flags[i] = p[i] != 0 ? 1 : 0;
  return TopKMask(std::move(flags), p.k());
}

RunSet::RunSet(ListKind kind, std::size_t t, std::size_t k, std::vector<std::vector<Rank>> lists)
    : kind_(kind), t_(t), k_(k), lists_(std::move(lists)) {
  if (lists_.size() < 2) {
    throw ValidationError("a run set needs at least 2 lists, got " + std::to_string(lists_.size()));
  }
  if (kind_ == ListKind::full && k_ != t_) {
    throw ValidationError("full run sets require k = t");
  }
  for (std::size_t j = 0; j < lists_.size(); ++j) {
    if (lists_[j].size() != t_) {
      throw ValidationError("list " + std::to_string(j + 1) + " has length " +
                            std::to_string(lists_[j].size()) + ", expected t = " +
                            std::to_string(t_));
    }
    if (auto v = validate(kind_, lists_[j], k_)) {
      throw ValidationError("list " + std::to_string(j + 1) + ": " + v->message);
    }
  }
}

RunSet RunSet::from_full(const std::vector<FullRanking>& lists) {
  std::vector<std::vector<Rank>> raw;
  raw.reserve(lists.size());
  for (const auto& r : lists) raw.emplace_back(r.ranks().begin(), r.ranks().end());
  const std::size_t t = lists.empty() ? 0 : lists.front().size();
  return RunSet(ListKind::full, t, t, std::move(raw));
}

RunSet RunSet::from_partial(const std::vector<PartialRanking>& lists) {
  std::vector<std::vector<Rank>> raw;
  raw.reserve(lists.size());
  for (const auto& p : lists) raw.emplace_back(p.ranks().begin(), p.ranks().end());
  const std::size_t t = lists.empty() ? 0 : lists.front().size();
  const std::size_t k = lists.empty() ? 0 : lists.front().k();
  return RunSet(ListKind::partial, t, k, std::move(raw));
}

RunSet RunSet::from_topk(const std::vector<TopKMask>& lists) {
  std::vector<std::vector<Rank>> raw;
  raw.reserve(lists.size());
  for (const auto& s : lists) raw.emplace_back(s.flags().begin(), s.flags().end());
  const std::size_t t = lists.empty() ? 0 : lists.front().size();
  const std::size_t k = lists.empty() ? 0 : lists.front().k();
  return RunSet(ListKind::topk, t, k, std::move(raw));
}

FullRanking RunSet::full(std::size_t j) const {
  if (kind_ != ListKind::full) throw ContractError("run set does not hold full rankings");
  return FullRanking(lists_.at(j));
}

PartialRanking RunSet::partial(std::size_t j) const {
  if (kind_ != ListKind::partial) throw ContractError("run set does not hold partial rankings");
  return PartialRanking(lists_.at(j), k_);
}

TopKMask RunSet::topk(std::size_t j) const {
  switch (kind_) {
    case ListKind::topk:
      return TopKMask(lists_.at(j), k_);
    case ListKind::partial:
      return partial_to_topk(partial(j));
    case ListKind::full:
      break;
  }
  throw ContractError("full rankings have no implied top-k mask; truncate first");
}

RunSet RunSet::as_topk() const {
  if (kind_ == ListKind::topk) return *this;
  if (kind_ == ListKind::full) {
    throw ContractError("full rankings have no implied top-k mask; truncate first");
  }
  std::vector<std::vector<Rank>> masks(lists_.size(), std::vector<Rank>(t_));
  for (std::size_t j = 0; j < lists_.size(); ++j) {
    for (std::size_t i = 0; i < t_; ++i) masks[j][i] = lists_[j][i] != 0 ? 1 : 0;
  }
  return RunSet(ListKind::topk, t_, k_, std::move(masks));
}

RunSet RunSet::truncate(ListKind kind, std::size_t k) const {
  if (kind_ != ListKind::full) throw ContractError("only full run sets can be truncated");
  check_k(k, t_);
  if (kind == ListKind::full) {
    if (k != t_) throw ContractError("truncating to a full ranking requires k = t");
    return *this;
  }
  std::vector<std::vector<Rank>> out(lists_.size(), std::vector<Rank>(t_));
  for (std::size_t j = 0; j < lists_.size(); ++j) {
    for (std::size_t i = 0; i < t_; ++i) {
      const Rank r = lists_[j][i];
      const bool kept = r <= k;
      out[j][i] = !kept ? 0 : (kind == ListKind::topk ? 1 : r);
    }
  }
  return RunSet(kind, t_, k, std::move(out));
}

}  // namespace stabrank
