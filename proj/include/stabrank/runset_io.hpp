#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stabrank/mds.hpp"
#include "stabrank/rank_model.hpp"

namespace stabrank::io {

/// Header line of the run set file format:
///   #stabrank v1 kind=<full|partial|topk> t=<int> k=<int> K=<int>
/// followed by t rows of K comma-separated non-negative integers (one column
/// per run, '\n' line endings, no quoting).
struct RunSetFile {
  ListKind kind = ListKind::full;
  std::size_t t = 0;
  std::size_t k = 0;
  std::size_t runs = 0;
  /// columns[j] is run j.
  std::vector<std::vector<Rank>> columns;
};

/// Structural parse only: header syntax and matrix shape. Throws ParseError
/// with 1-based line/column positions. Column contents are not validated.
RunSetFile parse(std::istream& in);
RunSetFile parse(std::string_view text);
RunSetFile read_file(const std::string& path);

struct ColumnCheck {
  std::size_t column;  // 1-based
  std::optional<Violation> violation;
};

/// Validates every column against the header's kind and k.
std::vector<ColumnCheck> check_columns(const RunSetFile& file);

/// Builds a validated run set; throws ValidationError naming the first bad
/// column.
RunSet to_run_set(const RunSetFile& file);
RunSetFile from_run_set(const RunSet& runs);

/// Canonical serialization; parse(serialize(x)) == x and
/// serialize(parse(s)) == s for canonical s.
std::string serialize(const RunSetFile& file);
void write(std::ostream& out, const RunSet& runs);

/// Formats a value with 12 significant digits.
std::string format_number(double x);
/// Rounds a value to 12 significant digits (for JSON emission).
double round12(double x);

/// Embedding as CSV with header `label,run,x,y`.
void write_embedding_csv(std::ostream& out, const mds::DistanceMatrix& dm,
                         const mds::Embedding& emb);
void write_embedding_json(std::ostream& out, const mds::DistanceMatrix& dm,
                          const mds::Embedding& emb);

}  // namespace stabrank::io
