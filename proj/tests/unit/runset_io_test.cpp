#include "stabrank/runset_io.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "random_runs.hpp"
#include "stabrank/errors.hpp"

using namespace stabrank;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string data(const std::string& name) { return std::string(STABRANK_TEST_DATA) + "/" + name; }

template <typename F>
ParseError parse_error(F&& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no ParseError thrown";
  return ParseError("none", 0, 0);
}

}  // namespace

TEST(RunSetIo, ReadsExampleFullMatrix) {
  const auto file = io::read_file(data("a_fr.csv"));
  EXPECT_EQ(file.kind, ListKind::full);
  EXPECT_EQ(file.t, 10u);
  EXPECT_EQ(file.runs, 5u);
  EXPECT_EQ(file.columns[0], (std::vector<Rank>{3, 2, 4, 9, 5, 10, 7, 8, 1, 6}));
  const RunSet runs = io::to_run_set(file);
  EXPECT_EQ(runs.runs(), 5u);
}

TEST(RunSetIo, ExampleMatricesAreConsistent) {
  const RunSet full = io::to_run_set(io::read_file(data("a_fr.csv")));
  const RunSet partial = io::to_run_set(io::read_file(data("a_pr.csv")));
  const RunSet masks = io::to_run_set(io::read_file(data("a_f.csv")));
  EXPECT_EQ(full.truncate(ListKind::partial, 4), partial);
  EXPECT_EQ(full.truncate(ListKind::topk, 4), masks);
  EXPECT_EQ(partial.as_topk(), masks);
}

TEST(RunSetIo, PrintedMaskMatrixFailsValidation) {
  const auto file = io::read_file(data("a_f_printed.csv"));
  const auto checks = io::check_columns(file);
  ASSERT_EQ(checks.size(), 5u);
  ASSERT_TRUE(checks[1].violation);
  EXPECT_EQ(checks[1].violation->message, "3 ones, expected 4");
  for (std::size_t j : {0u, 2u, 3u, 4u}) EXPECT_FALSE(checks[j].violation);
  EXPECT_THROW(io::to_run_set(file), ValidationError);
}

TEST(RunSetIo, CanonicalFilesRoundTripBitExactly) {
  for (const char* name : {"a_fr.csv", "a_pr.csv", "a_f.csv", "a_f_printed.csv"}) {
    const std::string text = slurp(data(name));
    EXPECT_EQ(io::serialize(io::parse(text)), text) << name;
  }
}

TEST(RunSetIo, RandomRunSetsRoundTrip) {
  Rng rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const auto kind = static_cast<ListKind>(trial % 3);
    const std::size_t t = 2 + rng.below(30);
    const RunSet runs = stabrank::testing::random_run_set(rng, kind, t, 1 + rng.below(t - 1),
                                                          2 + rng.below(5));
    std::ostringstream out;
    io::write(out, runs);
    EXPECT_EQ(io::to_run_set(io::parse(out.str())), runs);
  }
}

TEST(RunSetIo, ParseErrorsCarryPositions) {
  EXPECT_EQ(parse_error([] { io::parse(""); }).line(), 1u);

  auto e = parse_error([] { io::parse("stabrank v1 kind=full t=2 k=2 K=2\n1,2\n2,1\n"); });
  EXPECT_EQ(e.line(), 1u);

  e = parse_error([] { io::parse("#stabrank v2 kind=full t=2 k=2 K=2\n"); });
  EXPECT_EQ(e.column(), 11u);

  e = parse_error([] { io::parse("#stabrank v1 kind=ranked t=2 k=2 K=2\n"); });
  EXPECT_EQ(e.column(), 19u);

  e = parse_error([] { io::parse("#stabrank v1 kind=full t=2 k=2\n"); });
  EXPECT_EQ(e.line(), 1u);

  e = parse_error([] { io::parse("#stabrank v1 kind=full t=2 k=2 K=2\n1,2\n2,x\n"); });
  EXPECT_EQ(e.line(), 3u);
  EXPECT_EQ(e.column(), 3u);

  e = parse_error([] { io::parse("#stabrank v1 kind=full t=2 k=2 K=2\n1,2,3\n"); });
  EXPECT_EQ(e.line(), 2u);

  e = parse_error([] { io::parse("#stabrank v1 kind=full t=3 k=3 K=2\n1,2\n2,1\n"); });
  EXPECT_EQ(e.line(), 4u);

  e = parse_error([] { io::parse("#stabrank v1 kind=full t=2 k=2 K=2\n1,2\n2,1\n1,1\n"); });
  EXPECT_EQ(e.line(), 4u);

  e = parse_error([] { io::parse("#stabrank v1 kind=full t=2 k=2 K=2\n1,-2\n2,1\n"); });
  EXPECT_EQ(e.column(), 3u);
}

TEST(RunSetIo, ToleratesMissingFinalNewlineAndCrlf) {
  const auto a = io::parse("#stabrank v1 kind=topk t=3 k=1 K=2\n1,0\n0,1\n0,0");
  const auto b = io::parse("#stabrank v1 kind=topk t=3 k=1 K=2\r\n1,0\r\n0,1\r\n0,0\r\n");
  EXPECT_EQ(io::serialize(a), io::serialize(b));
}

TEST(RunSetIo, NumberFormatting) {
  EXPECT_EQ(io::format_number(1.0), "1");
  EXPECT_EQ(io::format_number(1.0 / 3.0), "0.333333333333");
  EXPECT_EQ(io::round12(1.0 / 6.0), 0.166666666667);
}
