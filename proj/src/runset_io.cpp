#include "stabrank/runset_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "json.hpp"

#include "stabrank/errors.hpp"

namespace stabrank::io {

namespace {

constexpr std::string_view kMagic = "#stabrank";
constexpr std::string_view kVersion = "v1";

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

template <typename T>
std::optional<T> parse_unsigned(std::string_view s) {
  if (s.empty()) return std::nullopt;
  for (char c : s) {
    if (c < '0' || c > '9') return std::nullopt;
  }
  T value{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

void parse_header(std::string_view line, RunSetFile& out) {
  std::size_t col = 1;
  const auto tokens = split(line, ' ');
  if (tokens.empty() || tokens[0] != kMagic) {
    throw ParseError("expected header starting with '#stabrank'", 1, 1);
  }
  col += tokens[0].size() + 1;
  if (tokens.size() < 2 || tokens[1] != kVersion) {
    throw ParseError("unsupported format version (expected v1)", 1, col);
  }
  col += tokens[1].size() + 1;

  bool have_kind = false, have_t = false, have_k = false, have_runs = false;
  for (std::size_t i = 2; i < tokens.size(); ++i) {
    const auto tok = tokens[i];
    const auto eq = tok.find('=');
    if (eq == std::string_view::npos) throw ParseError("expected key=value", 1, col);
    const auto key = tok.substr(0, eq);
    const auto value = tok.substr(eq + 1);
    const std::size_t value_col = col + eq + 1;
    if (key == "kind") {
      const auto kind = parse_list_kind(value);
      if (!kind) throw ParseError("unknown kind '" + std::string(value) + "'", 1, value_col);
      out.kind = *kind;
      have_kind = true;
    } else if (key == "t" || key == "k" || key == "K") {
      const auto n = parse_unsigned<std::size_t>(value);
      if (!n) throw ParseError("expected a non-negative integer for " + std::string(key), 1, value_col);
      if (key == "t") {
        out.t = *n;
        have_t = true;
      } else if (key == "k") {
        out.k = *n;
        have_k = true;
      } else {
        out.runs = *n;
        have_runs = true;
      }
    } else {
      throw ParseError("unknown header key '" + std::string(key) + "'", 1, col);
    }
    col += tok.size() + 1;
  }
  if (!have_kind || !have_t || !have_k || !have_runs) {
    throw ParseError("header must define kind, t, k and K", 1, col);
  }
  if (out.t == 0) throw ParseError("t must be positive", 1, 1);
  if (out.runs == 0) throw ParseError("K must be positive", 1, 1);
}

}  // namespace

RunSetFile parse(std::istream& in) {
  RunSetFile out;
  std::string line;
  std::size_t line_no = 0;

  auto next_line = [&]() -> bool {
    if (!std::getline(in, line)) return false;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
  };

  if (!next_line()) throw ParseError("empty file", 1, 1);
  parse_header(line, out);

  out.columns.assign(out.runs, std::vector<Rank>(out.t, 0));
  for (std::size_t row = 0; row < out.t; ++row) {
    if (!next_line()) {
      throw ParseError("expected " + std::to_string(out.t) + " rows, found " + std::to_string(row),
                       line_no + 1, 1);
    }
    const auto fields = split(line, ',');
    if (fields.size() != out.runs) {
      throw ParseError("expected " + std::to_string(out.runs) + " values, found " +
                           std::to_string(fields.size()),
                       line_no, 1);
    }
    std::size_t col = 1;
    for (std::size_t j = 0; j < fields.size(); ++j) {
      const auto v = parse_unsigned<Rank>(fields[j]);
      if (!v) {
        throw ParseError("invalid value '" + std::string(fields[j]) + "'", line_no, col);
      }
      out.columns[j][row] = *v;
      col += fields[j].size() + 1;
    }
  }
  while (next_line()) {
    if (!line.empty()) throw ParseError("unexpected data after " + std::to_string(out.t) + " rows",
                                        line_no, 1);
  }
  return out;
}

RunSetFile parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse(in);
}

RunSetFile read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  return parse(in);
}

std::vector<ColumnCheck> check_columns(const RunSetFile& file) {
  std::vector<ColumnCheck> out;
  out.reserve(file.columns.size());
  for (std::size_t j = 0; j < file.columns.size(); ++j) {
    out.push_back({j + 1, validate(file.kind, file.columns[j], file.k)});
  }
  return out;
}

RunSet to_run_set(const RunSetFile& file) {
  for (const auto& check : check_columns(file)) {
    if (check.violation) {
      throw ValidationError("column " + std::to_string(check.column) + ": " +
                            check.violation->message);
    }
  }
  return RunSet(file.kind, file.t, file.k, file.columns);
}

RunSetFile from_run_set(const RunSet& runs) {
  return RunSetFile{runs.kind(), runs.t(), runs.k(), runs.runs(), runs.lists()};
}

std::string serialize(const RunSetFile& file) {
  std::string out;
  out += kMagic;
  out += ' ';
  out += kVersion;
  out += " kind=" + std::string(to_string(file.kind)) + " t=" + std::to_string(file.t) +
         " k=" + std::to_string(file.k) + " K=" + std::to_string(file.runs) + "\n";
  for (std::size_t i = 0; i < file.t; ++i) {
    for (std::size_t j = 0; j < file.runs; ++j) {
      if (j > 0) out += ',';
      out += std::to_string(file.columns[j][i]);
    }
    out += '\n';
  }
  return out;
}

void write(std::ostream& out, const RunSet& runs) { out << serialize(from_run_set(runs)); }

std::string format_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

double round12(double x) {
  if (!std::isfinite(x)) return x;
  return std::stod(format_number(x));
}

void write_embedding_csv(std::ostream& out, const mds::DistanceMatrix& dm,
                         const mds::Embedding& emb) {
  out << "label,run,x,y\n";
  for (std::size_t i = 0; i < dm.size(); ++i) {
    const auto& label = dm.labels()[i];
    out << label.algorithm << ',' << label.run << ',' << format_number(emb.coords[i][0]) << ','
        << format_number(emb.coords[i][1]) << '\n';
  }
}

void write_embedding_json(std::ostream& out, const mds::DistanceMatrix& dm,
                          const mds::Embedding& emb) {
  nlohmann::ordered_json doc;
  doc["schema"] = 1;
  doc["eigvals"] = {round12(emb.eigvals[0]), round12(emb.eigvals[1])};
  doc["raw_eigvals"] = {round12(emb.raw_eigvals[0]), round12(emb.raw_eigvals[1])};
  doc["stress"] = round12(emb.stress);
  auto& points = doc["points"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < dm.size(); ++i) {
    points.push_back({{"label", dm.labels()[i].algorithm},
                      {"run", dm.labels()[i].run},
                      {"x", round12(emb.coords[i][0])},
                      {"y", round12(emb.coords[i][1])}});
  }
  out << doc.dump(2) << '\n';
}

}  // namespace stabrank::io
