#include <gtest/gtest.h>

#include <json.hpp>

#include <sstream>

#include "sperner/cli.hpp"
#include "sperner/errors.hpp"

using namespace sperner;
using namespace sperner::cli;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

const std::vector<std::string> kSplitQuadrics{"--vars", "2", "--gen", "x1^2+x1*x2", "--gen",
                                              "x2^2-x1*x2"};

std::vector<std::string> with(std::vector<std::string> head, const std::vector<std::string>& tail) {
  head.insert(head.end(), tail.begin(), tail.end());
  return head;
}

}  // namespace

TEST(ParseInput, MonomialCI) {
  const auto spec = parse_input("field q=7\nvars 2\ndegrees 2,3\n");
  EXPECT_EQ(spec.field, Field::prime(7));
  EXPECT_EQ(spec.nvars, 2u);
  EXPECT_EQ(spec.degrees, DegreeVector({2, 3}));
  EXPECT_TRUE(spec.generators.empty());
}

TEST(ParseInput, GeneralCI) {
  const auto spec = parse_input("field rational\nvars 2\ngen x1^2+x1*x2\ngen x2^2-x1*x2  # quadrics\n");
  EXPECT_TRUE(spec.field.is_rational());
  ASSERT_EQ(spec.generators.size(), 2u);
  EXPECT_EQ(spec.degrees, DegreeVector({2, 2}));
}

TEST(ParseInput, Overrides) {
  const auto spec = parse_input("field q=7\ndegrees 2,2\n", Field::prime(11));
  EXPECT_EQ(spec.field, Field::prime(11));
  EXPECT_EQ(spec.nvars, 2u);
  EXPECT_EQ(parse_field("13"), Field::prime(13));
  EXPECT_THROW(parse_field("q=8"), std::invalid_argument);
  EXPECT_THROW(parse_field("GF(7)"), std::invalid_argument);
}

TEST(ParseInput, ErrorsCarryPositions) {
  try {
    parse_input("vars 2\ndegrees 2,0\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_NE(std::string(e.what()).find("degrees must be >= 1"), std::string::npos);
  }
  try {
    parse_input("vars 2\ngen x1^2+\ngen x2^2\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_GT(e.column(), 4u);
  }
  EXPECT_THROW(parse_input("vars 2\nbogus 1\n"), ParseError);
  EXPECT_THROW(parse_input("field\n"), ParseError);
  EXPECT_THROW(parse_input("field q=7\n"), ParseError);
  EXPECT_THROW(parse_input("vars 3\ndegrees 2,2\n"), DimensionMismatch);
  EXPECT_THROW(parse_input("vars 2\ngen x1^2\n"), DimensionMismatch);
  EXPECT_THROW(parse_input("vars 2\ndegrees 2,3\ngen x1^2\ngen x2^2\n"), DimensionMismatch);
  EXPECT_THROW(parse_input("vars 2\ngen x1^2+x2\ngen x2^2\n"), NotHomogeneous);
}

TEST(Run, Hilbert) {
  const auto r = run_cli({"hilbert", "--degrees", "2,2,2"});
  EXPECT_EQ(r.code, kPass);
  EXPECT_NE(r.out.find("H=1 3 3 1"), std::string::npos);
}

TEST(Run, SpernerOnTheQuadrics) {
  const auto r = run_cli(with({"sperner"}, kSplitQuadrics));
  EXPECT_EQ(r.code, kPass);
  EXPECT_NE(r.out.find("d=2\tmax_H=2\tsperner=true"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("mode=theorem_certified"), std::string::npos);
}

TEST(Run, EghLexPlusPowers) {
  const auto r = run_cli({"egh", "--degrees", "2,2", "--hilbert", "1,1,0"});
  EXPECT_EQ(r.code, kPass);
  EXPECT_NE(r.out.find("witness=J=(x1)\tstrategy=lex_plus_powers"), std::string::npos) << r.out;
  EXPECT_EQ(run_cli({"egh", "--degrees", "2,2", "--hilbert", "1,0,1"}).code, kInconclusive);
}

TEST(Run, ExitCodes) {
  EXPECT_EQ(run_cli({}).code, kUsageError);
  EXPECT_EQ(run_cli({"hilbert"}).code, kUsageError);
  EXPECT_EQ(run_cli({"hilbert", "--degrees", "2,0"}).code, kUsageError);
  EXPECT_EQ(run_cli({"dilworth", "--degrees", "2,2", "--mode", "bogus"}).code, kUsageError);
  EXPECT_EQ(run_cli({"hilbert", "--degrees", "2,2", "--format", "xml"}).code, kUsageError);
  EXPECT_EQ(run_cli({"match", "--degrees", "2,2"}).code, kUsageError);
  EXPECT_EQ(run_cli({"walk", "--degrees", "2,3", "--ideal", "x1"}).code, kInconclusive);
  EXPECT_EQ(run_cli({"walk", "--degrees", "2,3", "--ideal", "x1+x2"}).code, kUsageError);
  EXPECT_EQ(run_cli({"dilworth", "--degrees", "2,2,2", "--budget", "3"}).code, kInconclusive);
  EXPECT_EQ(run_cli(with({"lattice"}, kSplitQuadrics)).code, kUsageError);
  EXPECT_EQ(run_cli({"--help"}).code, kPass);
}

TEST(Run, MatchAndHall) {
  const auto r = run_cli({"match", "--degrees", "3,3", "--degree", "2", "--exhaustive"});
  EXPECT_EQ(r.code, kPass);
  EXPECT_NE(r.out.find("direction=downward\tderived_by_duality=true"), std::string::npos);
  EXPECT_NE(r.out.find("asserted=false"), std::string::npos);
  EXPECT_NE(r.out.find("first_violation=7"), std::string::npos);
}

TEST(Run, WalkReachesTheMiddlePower) {
  const auto r = run_cli({"walk", "--degrees", "2,3", "--ideal", "x1,x2"});
  EXPECT_EQ(r.code, kPass);
  EXPECT_NE(r.out.find("kind=truncate"), std::string::npos);
  EXPECT_NE(r.out.find("reached_middle_power=true"), std::string::npos);
  const auto q = run_cli(with({"walk", "--ideal", "x1,x2"}, kSplitQuadrics));
  EXPECT_EQ(q.code, kPass) << q.out;
}

TEST(Run, JsonLinesAreObjects) {
  const auto r = run_cli({"lattice", "--degrees", "2,2", "--format", "jsonl"});
  EXPECT_EQ(r.code, kPass);
  const auto ls = lines(r.out);
  ASSERT_GT(ls.size(), 2u);
  for (const auto& l : ls) {
    const auto j = nlohmann::json::parse(l);
    EXPECT_TRUE(j.is_object());
    EXPECT_TRUE(j.contains("check"));
  }
}

TEST(Run, TsvLinesAreKeyValue) {
  const auto r = run_cli({"scd", "--degrees", "2,3,2"});
  EXPECT_EQ(r.code, kPass);
  for (const auto& l : lines(r.out)) {
    std::istringstream fields(l);
    for (std::string f; std::getline(fields, f, '\t');) EXPECT_NE(f.find('='), std::string::npos) << l;
  }
}

TEST(Run, Deterministic) {
  const std::vector<std::vector<std::string>> jobs{
      with({"sperner", "--seed", "9"}, kSplitQuadrics),
      {"dilworth", "--degrees", "2,3", "--mode", "random_sampled", "--budget", "30", "--seed", "4"},
      {"egh", "--degrees", "3,2,2", "--hilbert", "1,2,2,1"},
  };
  for (const auto& job : jobs) {
    const auto a = run_cli(job);
    const auto b = run_cli(job);
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, b.out);
  }
}
