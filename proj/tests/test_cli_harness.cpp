#include <gtest/gtest.h>

#include <filesystem>
#include <set>

#include "permemc/extremal.hpp"
#include "permemc/family_io.hpp"
#include "permemc/report.hpp"
#include "permemc/verify.hpp"
#include "test_support.hpp"

using namespace permemc;
using namespace testing_support;

namespace {

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "permemc_tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST(FamilyIo, RoundTripThroughFile) {
  Rng rng(1);
  for (int n = 1; n <= 6; ++n) {
    const Family f = from_oracle(n, random_subset(oracle::all_perms(n), rng, 0, 30));
    const auto path = scratch("round_trip_" + std::to_string(n) + ".fam");
    save_family(path, f);
    const LoadedFamily back = load_family(path);
    EXPECT_EQ(back.family, f);
    EXPECT_TRUE(back.warnings.empty());
    EXPECT_EQ(format_family(back.family), read_text(path));
  }
}

TEST(FamilyIo, CommentsBlanksAndDuplicates) {
  const LoadedFamily f = parse_family("# a comment\n\nn=3\n  # indented comment\n1 2 3\n\n2 3 1\n1 2 3\n");
  EXPECT_EQ(f.family, Family(3, {Permutation{1, 2, 3}, Permutation{2, 3, 1}}));
  ASSERT_EQ(f.warnings.size(), 1u);
  EXPECT_NE(f.warnings[0].find("line 8"), std::string::npos);
}

TEST(FamilyIo, ErrorsNameTheLine) {
  try {
    parse_family("n=3\n1 2 3\n1 2 2\n");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(e.column(), 5u);
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
  EXPECT_THROW(parse_family("n=3\n1 2\n"), ParseError);
  EXPECT_THROW(parse_family("m=3\n"), ParseError);
  EXPECT_THROW(parse_family("n=3\n1 2 4\n"), ParseError);
  EXPECT_THROW(parse_family(""), ParseError);
  EXPECT_THROW(load_family(scratch("does_not_exist.fam")), IoError);
}

TEST(MatrixIo, RoundTripAndErrors) {
  const ZeroOneMatrix m(std::vector<std::vector<int>>{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
  EXPECT_EQ(parse_matrix(format_matrix(m)), m);
  EXPECT_THROW(parse_matrix("N=2\n0 1\n1 2\n"), ParseError);
  EXPECT_THROW(parse_matrix("N=2\n0 1\n"), ParseError);
}

TEST(Report, BigIntegersBecomeStrings) {
  EXPECT_TRUE(to_json(BigInt(265)).is_number_integer());
  const BigInt big = factorial(25);
  const Json j = to_json(big);
  ASSERT_TRUE(j.is_string());
  EXPECT_EQ(j.get<std::string>(), "15511210043330985984000000");
  EXPECT_EQ(to_json(Rational(7, 16)).get<std::string>(), "7/16");
}

TEST(Report, CellsAndFamilies) {
  const auto cells = PartialPermutation::parse("1:2,3:1");
  EXPECT_EQ(to_json(cells).dump(), R"(["1:2","3:1"])");
  const Json f = family_json(make_star(3, {1, 1}));
  EXPECT_EQ(f["size"], 2);
  EXPECT_EQ(f["members"][0].dump(), "[1,2,3]");
}

TEST(Report, LargeFamiliesSpillToFile) {
  const Family big = all_permutations(7);
  FamilySpill spill{std::filesystem::temp_directory_path() / "permemc_tests", "spill"};
  const Json j = family_json(big, &spill);
  ASSERT_TRUE(j.contains("file"));
  EXPECT_EQ(load_family(j["file"].get<std::string>()).family, big);
}

TEST(Report, DuplicateIdsAreRejected) {
  SuiteReport r;
  r.add("x.one", "first", true);
  EXPECT_THROW(r.add("x.one", "again", true), std::logic_error);
  r.add("x.two", "second", false);
  EXPECT_TRUE(r.failed());
  EXPECT_EQ(r.count(CheckStatus::pass), 1u);
}

TEST(Suites, AllPassWithUniqueIds) {
  const SuiteReport report = run_suite("all", 0);
  EXPECT_FALSE(report.failed());
  std::set<std::string> ids;
  for (const auto& c : report.checks) {
    EXPECT_TRUE(ids.insert(c.id).second) << c.id;
    EXPECT_NE(c.status, CheckStatus::fail) << c.id;
  }
  std::size_t total = 0;
  for (auto name : suite_names()) {
    const SuiteReport one = run_suite(name, 0);
    EXPECT_FALSE(one.checks.empty()) << name;
    total += one.checks.size();
  }
  EXPECT_EQ(total, report.checks.size());
  EXPECT_THROW(run_suite("nope"), std::invalid_argument);
}

TEST(Suites, DeterministicApartFromElapsedTime) {
  for (std::uint64_t seed : {0u, 17u}) {
    Json a = to_json(run_suite("solvers", seed));
    Json b = to_json(run_suite("solvers", seed));
    EXPECT_EQ(a["seed"], seed);
    a.erase("elapsed_ms");
    b.erase("elapsed_ms");
    EXPECT_EQ(a.dump(), b.dump());
  }
}
