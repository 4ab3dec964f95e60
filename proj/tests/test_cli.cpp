#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "cli_cases.hpp"
#include "longray/cli.hpp"

using namespace longray;

namespace {

struct Output {
  int code;
  std::string out;
  std::string err;
};

Output run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string read_golden(const std::string& name) {
  std::ifstream in(std::string(LONGRAY_GOLDEN_DIR) + "/" + name + ".out", std::ios::binary);
  if (!in) return "<missing golden file " + name + ">";
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

class Golden : public ::testing::TestWithParam<test_support::CliCase> {};

}  // namespace

TEST_P(Golden, MatchesAndIsDeterministic) {
  const auto& c = GetParam();
  const auto first = run(c.args);
  const auto second = run(c.args);
  EXPECT_EQ(first.code, c.exit_code) << first.err;
  EXPECT_EQ(first.out, second.out);
  EXPECT_EQ(first.out, read_golden(c.name));
  if (c.exit_code >= 2) {
    EXPECT_FALSE(first.err.empty());
  }
}

INSTANTIATE_TEST_SUITE_P(Cli, Golden, ::testing::ValuesIn(test_support::cli_cases()),
                         [](const auto& info) { return info.param.name; });

TEST(Cli, ResultsMatchLibrary) {
  const auto out = run({"classify", "--n", "3", "max(min(x1,x2),min(x1,x3))"});
  const auto j = Json::parse(out.out);
  const auto lib = homotopy_class(parse_term("max(min(x1,x2),min(x1,x3))", 3), 3);
  EXPECT_EQ(antichain_from_json(3, j["antichain"]), lib);
  EXPECT_EQ(j["representative"], print_term(canonical_representative(lib)));

  for (int n = 1; n <= 4; ++n) {
    const auto c = Json::parse(run({"count", "rn-to-r", "--n", std::to_string(n)}).out);
    EXPECT_EQ(c["count"].get<std::uint64_t>(), count_antichains(n));
  }
  const auto d = Json::parse(run({"dmatrix", "--n", "2", "x2;x1"}).out);
  EXPECT_EQ(d, to_json(direction_matrix(parse_vector_term("x2;x1", 2), 2)));
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, cli::kInvalid);
  EXPECT_EQ(run({"classify", "x1"}).code, cli::kInvalid);
  EXPECT_EQ(run({"classify", "--n", "2", "--format", "xml", "x1"}).code, cli::kInvalid);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kInvalid);
  EXPECT_EQ(run({"--help"}).code, cli::kOk);
}

TEST(Cli, MonoidCheckMismatchedArity) {
  EXPECT_EQ(run({"monoid-check", "--n", "2", "x1", "x2;x1"}).code, cli::kParseFailure);
}
