#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace stabrank {

using Rank = std::uint32_t;

/// The three output formats of a feature ranking / selection algorithm.
enum class ListKind { full, partial, topk };

std::string_view to_string(ListKind kind);
std::optional<ListKind> parse_list_kind(std::string_view text);

/// Describes the first invariant a list breaks.
struct Violation {
  std::string message;
};

/// Checks that `ranks` is a permutation of 1..t.
std::optional<Violation> validate_full(std::span<const Rank> ranks);
/// Checks that the nonzero entries of `ranks` are exactly a permutation of 1..k.
std::optional<Violation> validate_partial(std::span<const Rank> ranks, std::size_t k);
/// Checks that `flags` is binary with exactly k ones and 1 <= k <= t.
std::optional<Violation> validate_topk(std::span<const Rank> flags, std::size_t k);
std::optional<Violation> validate(ListKind kind, std::span<const Rank> values, std::size_t k);

/// A permutation of ranks 1..t; entry i is the rank of feature i (1 = best).
class FullRanking {
 public:
  /// Throws ValidationError if `ranks` is not a permutation of 1..t.
  explicit FullRanking(std::vector<Rank> ranks);

  std::size_t size() const noexcept { return ranks_.size(); }
  Rank operator[](std::size_t i) const { return ranks_[i]; }
  std::span<const Rank> ranks() const noexcept { return ranks_; }

  friend bool operator==(const FullRanking&, const FullRanking&) = default;

 private:
  std::vector<Rank> ranks_;
};

/// Ranks 1..k on exactly k features, 0 (unranked) elsewhere.
class PartialRanking {
 public:
  /// k is inferred from the number of nonzero entries.
  explicit PartialRanking(std::vector<Rank> ranks);
  PartialRanking(std::vector<Rank> ranks, std::size_t k);

  std::size_t size() const noexcept { return ranks_.size(); }
  std::size_t k() const noexcept { return k_; }
  Rank operator[](std::size_t i) const { return ranks_[i]; }
  std::span<const Rank> ranks() const noexcept { return ranks_; }

  friend bool operator==(const PartialRanking&, const PartialRanking&) = default;

 private:
  std::vector<Rank> ranks_;
  std::size_t k_;
};

/// Binary inclusion vector with exactly k selected features.
class TopKMask {
 public:
  explicit TopKMask(std::vector<Rank> flags);
  TopKMask(std::vector<Rank> flags, std::size_t k);

  std::size_t size() const noexcept { return flags_.size(); }
  std::size_t k() const noexcept { return k_; }
  bool selected(std::size_t i) const { return flags_[i] != 0; }
  std::span<const Rank> flags() const noexcept { return flags_; }

  friend bool operator==(const TopKMask&, const TopKMask&) = default;

 private:
  std::vector<Rank> flags_;
  std::size_t k_;
};

/// Keeps the k features with rank <= k. Throws ContractError unless 1 <= k <= t.
TopKMask full_to_topk(const FullRanking& r, std::size_t k);
/// Zeroes every rank greater than k. Throws ContractError unless 1 <= k <= t.
PartialRanking full_to_partial(const FullRanking& r, std::size_t k);
TopKMask partial_to_topk(const PartialRanking& p);

/// K >= 2 lists of one kind sharing t (and k). Lists are stored as raw value
/// vectors that have already passed validation for `kind`.
class RunSet {
 public:
  /// Validates every list; throws ValidationError naming the offending list.
  RunSet(ListKind kind, std::size_t t, std::size_t k, std::vector<std::vector<Rank>> lists);

  static RunSet from_full(const std::vector<FullRanking>& lists);
  static RunSet from_partial(const std::vector<PartialRanking>& lists);
  static RunSet from_topk(const std::vector<TopKMask>& lists);

  ListKind kind() const noexcept { return kind_; }
  std::size_t t() const noexcept { return t_; }
  /// Sublist length; equals t for full rankings.
  std::size_t k() const noexcept { return k_; }
  std::size_t runs() const noexcept { return lists_.size(); }

  std::span<const Rank> list(std::size_t j) const { return lists_[j]; }
  const std::vector<std::vector<Rank>>& lists() const noexcept { return lists_; }

  FullRanking full(std::size_t j) const;
  PartialRanking partial(std::size_t j) const;
  /// For partial run sets the mask of the ranked features.
  TopKMask topk(std::size_t j) const;

  /// The same lists viewed as top-k masks. Partial run sets drop their ranks;
  /// full run sets need an explicit k (see truncate).
  RunSet as_topk() const;
  /// Full run sets only: every ranking cut to its top k as `kind`
  /// (partial or topk).
  RunSet truncate(ListKind kind, std::size_t k) const;

  friend bool operator==(const RunSet&, const RunSet&) = default;

 private:
  ListKind kind_;
  std::size_t t_;
  std::size_t k_;
  std::vector<std::vector<Rank>> lists_;
};

}  // namespace stabrank
