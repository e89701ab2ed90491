#include <gtest/gtest.h>

#include <cmath>

#include "permemc/count_kernels.hpp"
#include "permemc/extremal.hpp"
#include "permemc/matching_solver.hpp"
#include "permemc/spread_engine.hpp"
#include "test_support.hpp"

using namespace permemc;
using namespace testing_support;

namespace {

// Largest rational r with denominator 1000 below the double value.
Rational below(double value) { return Rational(static_cast<long long>(std::floor(value * 1000.0)) - 1, 1000); }

bool spread_by_oracle(const Family& f, const Rational& r) { return oracle::r_spread(to_oracle(f), f.degree(), r); }

}  // namespace

TEST(RSpread, SigmaThreeLevels) {
  const Family s3 = all_permutations(3);
  EXPECT_TRUE(is_r_spread(s3, Rational(9, 5)).is_spread);
  const SpreadReport r = is_r_spread(s3, Rational(2));
  EXPECT_FALSE(r.is_spread);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->size(), 3u);
  EXPECT_EQ(r.witness_ratio, Rational(1, 6));
}

TEST(RSpread, SingletonFamilyNeverSpreadAboveOne) {
  const Family lone(4, {Permutation{2, 1, 4, 3}});
  EXPECT_FALSE(is_r_spread(lone, Rational(11, 10)).is_spread);
  EXPECT_TRUE(is_r_spread(lone, Rational(1)).is_spread);
  EXPECT_THROW(is_r_spread(Family(4), Rational(1)), std::invalid_argument);
  EXPECT_THROW(is_r_spread(lone, Rational(0)), std::invalid_argument);
}

TEST(RSpread, AgreesWithOracleAndIsMonotone) {
  Rng rng(31);
  const auto universe = oracle::all_perms(4);
  const std::vector<Rational> levels{Rational(1), Rational(6, 5), Rational(3, 2), Rational(7, 4), Rational(2), Rational(5, 2)};
  for (int k = 0; k < 40; ++k) {
    const Family f = from_oracle(4, random_subset(universe, rng, 1, 24));
    bool previous = true;
    for (const auto& r : levels) {
      const bool got = is_r_spread(f, r).is_spread;
      EXPECT_EQ(got, spread_by_oracle(f, r));
      // A higher level can only be met if every lower one was.
      if (!previous) EXPECT_FALSE(got);
      previous = got;
    }
  }
}

TEST(RSpread, WitnessViolatesExactly) {
  Rng rng(8);
  const auto universe = oracle::all_perms(4);
  for (int k = 0; k < 30; ++k) {
    const auto f = random_subset(universe, rng, 1, 24);
    const Family fam = from_oracle(4, f);
    const SpreadReport r = is_r_spread(fam, Rational(2));
    if (r.is_spread) continue;
    const auto x = to_oracle(std::span<const Cell>(r.witness->cells()));
    const Rational trace_size(BigInt(oracle::count_containing(f, x)));
    EXPECT_GT(trace_size * pow(Rational(2), static_cast<unsigned>(x.size())), Rational(BigInt(f.size())));
    EXPECT_EQ(r.witness_ratio, trace_size / Rational(BigInt(f.size())));
  }
}

TEST(ExactSpreadness, FullGroup) {
  for (int n = 3; n <= 5; ++n) {
    const Family all = all_permutations(n);
    const Spreadness s = exact_spreadness(all);
    const double want = std::pow(std::tgamma(n + 1.0), 1.0 / n);
    EXPECT_NEAR(s.value / want, 1.0, 1e-9);
    EXPECT_NEAR(s.value / oracle::spreadness(to_oracle(all), n), 1.0, 1e-9);
    ASSERT_TRUE(s.argmin.has_value());
    EXPECT_EQ(s.argmin->size(), static_cast<std::size_t>(n));
  }
}

TEST(ExactSpreadness, AgreesWithOracleOnRandomFamilies) {
  Rng rng(12);
  const auto universe = oracle::all_perms(4);
  for (int k = 0; k < 40; ++k) {
    const auto f = random_subset(universe, rng, 1, 24);
    const Spreadness s = exact_spreadness(from_oracle(4, f));
    EXPECT_NEAR(s.value, oracle::spreadness(f, 4), 1e-9);
    // Just below the value the family is spread; well above it is not.
    EXPECT_TRUE(is_r_spread(from_oracle(4, f), below(s.value)).is_spread);
    EXPECT_FALSE(is_r_spread(from_oracle(4, f), Rational(static_cast<long long>(std::ceil(s.value * 1000.0)) + 1, 1000)).is_spread);
  }
}

TEST(RqSpread, Examples) {
  EXPECT_TRUE(is_rq_spread(all_permutations(4), Rational(6, 5), 2).is_spread);
  const Family d5 = derangements(5);
  for (const auto& x : oracle::partial_perms(5, 1)) {
    const auto residues = trace(d5, from_oracle(x));
    if (residues.empty()) continue;
    EXPECT_GT(BigInt(3 * residues.size()), factorial(static_cast<unsigned>(5 - static_cast<int>(x.size()))));
  }
}

TEST(RqSpread, EqualsSpreadOfEveryTrace) {
  Rng rng(19);
  const auto universe = oracle::all_perms(4);
  for (int k = 0; k < 15; ++k) {
    const auto f = random_subset(universe, rng, 2, 24);
    const Family fam = from_oracle(4, f);
    const Rational r(6, 5);
    bool want = true;
    for (const auto& a : oracle::partial_perms(4, 2)) {
      std::vector<oracle::Perm> sub;
      for (const auto& p : f) {
        if (oracle::holds(p, a)) sub.push_back(p);
      }
      if (sub.empty()) continue;
      // Spreadness of F(A): same counts as F[A] over sets disjoint from A.
      const Rational total(BigInt(sub.size()));
      for (const auto& x : oracle::partial_perms(4, 4)) {
        if (x.empty()) continue;
        bool overlaps = false;
        for (const auto& c : x) overlaps = overlaps || std::find(a.begin(), a.end(), c) != a.end();
        if (overlaps) continue;
        if (Rational(BigInt(oracle::count_containing(sub, x))) * pow(r, static_cast<unsigned>(x.size())) > total) want = false;
      }
    }
    EXPECT_EQ(is_rq_spread(fam, r, 2).is_spread, want);
  }
}

TEST(MaxRatioSet, Examples) {
  EXPECT_TRUE(max_ratio_set(all_permutations(3), Rational(9, 5)).empty());
  EXPECT_EQ(max_ratio_set(make_star(5, {1, 1}), Rational(5, 4)).to_string(), "1:1");
  const Permutation lone{3, 1, 2, 4};
  EXPECT_EQ(max_ratio_set(Family(4, {lone}), Rational(2)), lone.as_partial());
}

// The returned X qualifies, no proper superset with nonempty trace does,
// and F(X) is rho-spread (the maximal-set trace lemma).
TEST(MaxRatioSet, QualifiesIsMaximalAndSpread) {
  Rng rng(44);
  const auto universe = oracle::all_perms(4);
  const std::vector<Rational> rhos{Rational(1), Rational(5, 4), Rational(3, 2), Rational(2), Rational(3)};
  for (int k = 0; k < 40; ++k) {
    const auto f = random_subset(universe, rng, 1, 24);
    const Family fam = from_oracle(4, f);
    const Rational total(BigInt(f.size()));
    for (const auto& rho : rhos) {
      const auto x = to_oracle(std::span<const Cell>(max_ratio_set(fam, rho).cells()));
      auto qualifies = [&](const oracle::Cells& y) {
        return Rational(BigInt(oracle::count_containing(f, y))) * pow(rho, static_cast<unsigned>(y.size())) >= total;
      };
      EXPECT_TRUE(qualifies(x));
      for (const auto& y : oracle::partial_perms(4, 4)) {
        if (y.size() <= x.size()) continue;
        if (!std::includes(y.begin(), y.end(), x.begin(), x.end())) continue;
        if (oracle::count_containing(f, y) == 0) continue;
        EXPECT_FALSE(qualifies(y));
      }
      EXPECT_TRUE(is_r_spread(trace(fam, from_oracle(x)), rho).is_spread);
    }
  }
}

// A family larger than r^n has a set X with |F(X)| > 1 and F(X) r-spread.
TEST(MaxRatioSet, LargeFamilyHasNontrivialSpreadTrace) {
  Rng rng(3);
  const Rational r(6, 5);
  for (int n = 3; n <= 4; ++n) {
    const auto universe = oracle::all_perms(n);
    const Rational bound = pow(r, static_cast<unsigned>(n));
    for (int k = 0; k < 30; ++k) {
      const auto f = random_subset(universe, rng, 1, universe.size());
      if (Rational(BigInt(f.size())) <= bound) continue;
      const Family fam = from_oracle(n, f);
      const auto x = max_ratio_set(fam, r);
      const auto residues = trace(fam, x.cells());
      EXPECT_GT(residues.size(), 1u);
      EXPECT_TRUE(is_r_spread(residues, r).is_spread);
    }
  }
}

// If F is r-spread and H within F has |H| >= c|F|, H is cr-spread.
TEST(RSpread, SubfamilyOfSpreadFamily) {
  Rng rng(200);
  const auto universe = oracle::all_perms(4);
  int tested = 0;
  for (int k = 0; tested < 200 && k < 5000; ++k) {
    const auto f = random_subset(universe, rng, 4, 24);
    const Family fam = from_oracle(4, f);
    const Spreadness s = exact_spreadness(fam);
    const Rational r = below(s.value);
    if (r <= 0) continue;
    const auto h = random_subset(f, rng, 1, f.size());
    const Rational c(BigInt(h.size()), BigInt(f.size()));
    ASSERT_TRUE(is_r_spread(fam, r).is_spread);
    EXPECT_TRUE(is_r_spread(from_oracle(4, h), c * r).is_spread);
    ++tested;
  }
  EXPECT_EQ(tested, 200);
}

TEST(Approximation, PinnedStar) {
  const Family s5 = all_permutations(5);
  const Family star = make_star(5, {1, 1});
  const auto res = spread_approximate(star, s5, Rational(5, 2), 4);
  ASSERT_EQ(res.supports.size(), 1u);
  EXPECT_EQ(res.supports[0].to_string(), "1:1");
  EXPECT_TRUE(res.remainder.empty());
  EXPECT_EQ(trace(res.branches[0], res.supports[0].cells()).size(), 24u);
  const auto chk = verify_approximation(res, star, s5, Rational(5, 2), 4);
  EXPECT_TRUE(chk.covered);
  EXPECT_TRUE(chk.branches_partition);
  EXPECT_TRUE(chk.branches_spread);
  EXPECT_EQ(chk.remainder_status, CheckStatus::pass);
  EXPECT_EQ(chk.support_matching, 1u);
}

// |F| = 48 and the heaviest single cell holds 24 < 48 / 1.25, so the empty
// set is already maximal at r/2 = 5/4 and one step covers F.
TEST(Approximation, TwoStarsStopAtEmptySupport) {
  const Family s5 = all_permutations(5);
  const Family two = make_star_union(5, std::vector<Cell>{{1, 1}, {1, 2}}).family;
  const auto res = spread_approximate(two, s5, Rational(5, 2), 4);
  ASSERT_EQ(res.supports.size(), 1u);
  EXPECT_TRUE(res.supports[0].empty());
  EXPECT_TRUE(res.remainder.empty());
  const auto chk = verify_approximation(res, two, s5, Rational(5, 2), 4);
  EXPECT_TRUE(chk.degenerate_support);
  EXPECT_TRUE(chk.covered);
}

TEST(Approximation, ThresholdOneDegeneracy) {
  const Family s3 = all_permutations(3);
  const auto res = spread_approximate(s3, s3, Rational(2), 1);
  ASSERT_EQ(res.supports.size(), 1u);
  EXPECT_TRUE(res.supports[0].empty());
  EXPECT_TRUE(res.remainder.empty());
  EXPECT_TRUE(verify_approximation(res, s3, s3, Rational(2), 1).covered);
}

TEST(Approximation, NonSpreadAmbientIsConditional) {
  const Family ambient(3, {Permutation::identity(3), Permutation{2, 1, 3}});
  const Family f(3, {Permutation::identity(3)});
  const auto res = spread_approximate(f, ambient, Rational(4), 1);
  const auto chk = verify_approximation(res, f, ambient, Rational(4), 1);
  EXPECT_EQ(chk.remainder_status, CheckStatus::conditional);
  EXPECT_TRUE(chk.covered);
  EXPECT_THROW(spread_approximate(all_permutations(3), ambient, Rational(4), 1), std::invalid_argument);
}

TEST(Approximation, GuaranteesOnRandomFamilies) {
  Rng rng(77);
  const Family s4 = all_permutations(4);
  const auto universe = oracle::all_perms(4);
  for (int k = 0; k < 30; ++k) {
    const auto f = random_subset(universe, rng, 1, 24);
    const Family fam = from_oracle(4, f);
    for (const auto& [r, q] : std::vector<std::pair<Rational, int>>{{Rational(5, 2), 3}, {Rational(3), 1}}) {
      const auto res = spread_approximate(fam, s4, r, q);
      // Branches partition F \ F' and are F^i[S_i] for the running F^i.
      std::vector<oracle::Perm> rest = f;
      for (std::size_t i = 0; i < res.supports.size(); ++i) {
        const auto s = to_oracle(std::span<const Cell>(res.supports[i].cells()));
        EXPECT_LE(s.size(), static_cast<std::size_t>(q));
        std::vector<oracle::Perm> branch;
        std::vector<oracle::Perm> keep;
        for (const auto& p : rest) (oracle::holds(p, s) ? branch : keep).push_back(p);
        EXPECT_EQ(to_oracle(res.branches[i]), branch);
        EXPECT_TRUE(is_r_spread(trace(res.branches[i], res.supports[i].cells()), r / 2).is_spread);
        rest = keep;
      }
      EXPECT_EQ(to_oracle(res.remainder), rest);
      const auto chk = verify_approximation(res, fam, s4, r, q);
      EXPECT_TRUE(chk.covered && chk.branches_partition && chk.branches_spread);
      EXPECT_NE(chk.remainder_status, CheckStatus::fail);
      const auto again = spread_approximate(fam, s4, r, q);
      EXPECT_EQ(again.supports, res.supports);
    }
  }
}

TEST(Containment, SingleMemberAndSigmaTwo) {
  const Rational p(1, 3);
  const Family lone(3, {Permutation{2, 3, 1}});
  EXPECT_EQ(*containment_probability(lone, p).exact, pow(p, 3));
  const Family s2 = all_permutations(2);
  EXPECT_EQ(*containment_probability(s2, Rational(1, 2)).exact, Rational(7, 16));
  EXPECT_EQ(*containment_probability(s2, Rational(1, 2), ContainmentMethod::inclusion_exclusion).exact, Rational(7, 16));
}

TEST(Containment, ExactMethodsMatchSubsetSum) {
  Rng rng(90);
  for (int k = 0; k < 20; ++k) {
    std::vector<oracle::Cells> sets;
    const std::size_t count = uniform(rng, 1, 6);
    for (std::size_t i = 0; i < count; ++i) {
      oracle::Cells s;
      const std::size_t size = uniform(rng, 1, 3);
      while (s.size() < size) {
        const oracle::Pair c{static_cast<int>(uniform(rng, 1, 3)), static_cast<int>(uniform(rng, 1, 3))};
        if (std::find(s.begin(), s.end(), c) == s.end()) s.push_back(c);
      }
      std::sort(s.begin(), s.end());
      sets.push_back(s);
    }
    std::vector<CellSet> mine;
    for (const auto& s : sets) mine.push_back(from_oracle(s));
    const Rational p(static_cast<long long>(uniform(rng, 1, 9)), 10);
    const Rational want = oracle::containment(sets, p);
    EXPECT_EQ(*containment_probability(mine, p).exact, want);
    EXPECT_EQ(*containment_probability(mine, p, ContainmentMethod::inclusion_exclusion).exact, want);
  }
}

TEST(Containment, MonteCarloWithinThreeStandardErrors) {
  const Family s2 = all_permutations(2);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto mc = containment_probability_monte_carlo(s2, Rational(1, 2), 100000, seed);
    EXPECT_LE(std::abs(mc.value - 7.0 / 16.0), 3.0 * mc.standard_error) << seed;
    EXPECT_EQ(mc.samples, 100000u);
    EXPECT_EQ(mc.seed, seed);
  }
}

TEST(Containment, MonteCarloIsDeterministicAcrossWorkerCounts) {
  const Family s3 = all_permutations(3);
  const auto a = containment_probability_monte_carlo(s3, Rational(2, 3), 20000, 9);
  setenv("PERMEMC_THREADS", "1", 1);
  const auto b = containment_probability_monte_carlo(s3, Rational(2, 3), 20000, 9);
  setenv("PERMEMC_THREADS", "3", 1);
  const auto c = containment_probability_monte_carlo(s3, Rational(2, 3), 20000, 9);
  unsetenv("PERMEMC_THREADS");
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.value, c.value);
}

TEST(SpreadLemmaBound, Values) {
  for (int k = 1; k <= 10; ++k) {
    const auto b = spread_lemma_bound(k, 16.0, std::log2(2.0 * k), 1.0);
    ASSERT_FALSE(b.vacuous);
    EXPECT_NEAR(b.value, 0.5, 1e-12);
  }
  EXPECT_TRUE(spread_lemma_bound(4, 4.0, 2.0, 0.5).vacuous);
  EXPECT_TRUE(spread_lemma_bound(4, std::pow(24.0, 0.25), 3.0, 1.0 / 48.0).vacuous);
  EXPECT_THROW(spread_lemma_bound(0, 16.0, 1.0, 1.0), std::invalid_argument);
}
