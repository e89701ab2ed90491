#include <gtest/gtest.h>

#include "permemc/count_kernels.hpp"
#include "permemc/extremal.hpp"
#include "permemc/matching_solver.hpp"
#include "test_support.hpp"

using namespace permemc;
using namespace testing_support;

namespace {

bool pairwise_disjoint(const std::vector<Permutation>& members) {
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (intersects(members[i], members[j])) return false;
    }
  }
  return true;
}

bool covers(const Family& f, const CellSet& cells) {
  return std::all_of(f.begin(), f.end(), [&](const Permutation& p) {
    return std::any_of(cells.begin(), cells.end(), [&](Cell c) { return p.contains(c); });
  });
}

}  // namespace

TEST(MaximumClique, SmallGraphs) {
  // 0-1-2 triangle plus pendant 3 attached to 2.
  std::vector<DynamicBitset> adj(4, DynamicBitset(4));
  auto edge = [&](std::size_t a, std::size_t b) {
    adj[a].set(b);
    adj[b].set(a);
  };
  edge(0, 1);
  edge(1, 2);
  edge(0, 2);
  edge(2, 3);
  EXPECT_EQ(maximum_clique(adj), (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_TRUE(maximum_clique(std::vector<DynamicBitset>{}).empty());
}

TEST(Matching, Examples) {
  EXPECT_EQ(matching_number(make_star(5, {2, 3})).size, 1u);
  EXPECT_EQ(matching_number(all_permutations(4)).size, 4u);
  const Matching d4 = matching_number(derangements(4));
  EXPECT_EQ(d4.size, 3u);
  EXPECT_TRUE(pairwise_disjoint(d4.members));
  EXPECT_EQ(matching_number(Family(4)).size, 0u);
}

TEST(Matching, CellSetFamilies) {
  const std::vector<CellSet> sets{{{1, 1}, {1, 2}}, {{1, 2}}, {{2, 2}}, {{1, 1}, {1, 2}}};
  const SetMatching m = matching_number(sets);
  EXPECT_EQ(m.size, 2u);
}

TEST(Covering, Examples) {
  const Cover star = covering_number(make_star(4, {2, 3}));
  EXPECT_EQ(star.size, 1u);
  EXPECT_EQ(star.cells, (CellSet{{2, 3}}));
  EXPECT_EQ(covering_number(all_permutations(3)).size, 3u);
  const Cover hm = covering_number(make_hm(Permutation{2, 1, 4, 3}));
  EXPECT_EQ(hm.size, 2u);
  EXPECT_EQ(hm.cells, (CellSet{{1, 1}, {1, 2}}));
  EXPECT_THROW(covering_number(Family(3)), std::invalid_argument);
}

TEST(Solvers, MatchBruteForceOnRandomSubfamilies) {
  Rng rng(500);
  const auto universe = oracle::all_perms(4);
  for (int k = 0; k < 500; ++k) {
    const auto f = random_subset(universe, rng, 1, 24);
    const Family fam = from_oracle(4, f);
    const Matching m = matching_number(fam);
    EXPECT_EQ(m.size, oracle::matching_number(f));
    EXPECT_EQ(m.members.size(), m.size);
    EXPECT_TRUE(pairwise_disjoint(m.members));
    for (const auto& p : m.members) EXPECT_TRUE(fam.contains(p));
    const Cover c = covering_number(fam);
    EXPECT_EQ(c.size, oracle::covering_number(f, 4));
    EXPECT_EQ(c.cells.size(), c.size);
    EXPECT_TRUE(covers(fam, c.cells));
    EXPECT_GE(c.size, m.size);
  }
}

TEST(Solvers, InvariantUnderIsomorphism) {
  Rng rng(100);
  const auto universe = oracle::all_perms(4);
  for (int k = 0; k < 100; ++k) {
    const Family f = from_oracle(4, random_subset(universe, rng, 1, 24));
    const Permutation rho(random_perm(4, rng));
    const Permutation pi(random_perm(4, rng));
    const Family g = apply_isomorphism(rho, f, pi);
    EXPECT_EQ(g.size(), f.size());
    EXPECT_EQ(matching_number(g).size, matching_number(f).size);
    EXPECT_EQ(covering_number(g).size, covering_number(f).size);
  }
}

TEST(Cosets, RepresentativeAndPartition) {
  EXPECT_EQ(coset_representative(Permutation{3, 1, 2}), Permutation::identity(3));
  EXPECT_EQ(coset_representative(Permutation{2, 4, 1, 3}), (Permutation{1, 3, 2, 4}));
  for (int n = 1; n <= 7; ++n) {
    const auto classes = coset_partition(n);
    EXPECT_EQ(BigInt(classes.size()), factorial(static_cast<unsigned>(n - 1)));
    Family all(n);
    for (const auto& c : classes) {
      EXPECT_EQ(c.size(), static_cast<std::size_t>(n));
      EXPECT_TRUE(n == 1 || pairwise_disjoint({c.begin(), c.end()}));
      all = family_union(all, c);
    }
    EXPECT_EQ(all.size(), static_cast<std::size_t>(factorial(static_cast<unsigned>(n))));
  }
  EXPECT_THROW(coset_partition(11), CapExceeded);
}

TEST(Cosets, Certificate) {
  const auto s3 = coset_certificate(all_permutations(3), 4);
  EXPECT_EQ(s3.occupied.size(), 2u);
  EXPECT_EQ(s3.max_count, 3u);
  EXPECT_TRUE(s3.classes_disjoint);
  EXPECT_TRUE(s3.certified);

  const Family two = make_star_union(5, std::vector<Cell>{{1, 1}, {1, 2}}).family;
  const auto c = coset_certificate(two, 3, matching_number(two).size);
  EXPECT_TRUE(c.certified);
  EXPECT_EQ(c.bound, 48);
  EXPECT_EQ(two.size(), 48u);
  EXPECT_EQ(c.consistent_with_matching, true);

  const auto e = coset_certificate(Family(4), 2);
  EXPECT_TRUE(e.certified);
  EXPECT_TRUE(e.occupied.empty());
}

// A family with nu < s never puts s members in one class.
TEST(Cosets, CountBoundedByMatchingNumber) {
  Rng rng(6);
  const auto universe = oracle::all_perms(5);
  for (int k = 0; k < 20; ++k) {
    const Family f = from_oracle(5, random_subset(universe, rng, 1, 60));
    const std::size_t nu = matching_number(f).size;
    const auto c = coset_certificate(f, static_cast<int>(nu) + 1, nu);
    EXPECT_LE(c.max_count, nu);
    EXPECT_TRUE(c.certified);
  }
}

TEST(CrossMatching, Examples) {
  const Family f1 = make_star(4, {1, 2}, StarKind::derangement);
  const Family f2 = make_star(4, {2, 1}, StarKind::derangement);
  const auto w = cross_matching(std::vector<Family>{f1, f2});
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(*w, (std::vector<Permutation>{Permutation{2, 3, 4, 1}, Permutation{4, 1, 2, 3}}));
  const Family lone(4, {Permutation{2, 1, 4, 3}});
  EXPECT_FALSE(cross_matching(std::vector<Family>{lone, lone}).has_value());
  const auto one = cross_matching(std::vector<Family>{f1});
  ASSERT_TRUE(one.has_value());
  EXPECT_TRUE(f1.contains(one->front()));
  EXPECT_THROW(cross_matching(std::vector<Family>{f1, all_permutations(3)}), DimensionMismatch);
}

TEST(CrossMatching, AgreesWithBruteForce) {
  Rng rng(41);
  for (int k = 0; k < 100; ++k) {
    const int n = static_cast<int>(uniform(rng, 3, 5));
    const auto universe = oracle::all_perms(n);
    const std::size_t t = uniform(rng, 1, 4);
    std::vector<std::vector<oracle::Perm>> fams;
    std::vector<Family> mine;
    for (std::size_t i = 0; i < t; ++i) {
      fams.push_back(random_subset(universe, rng, 1, 4));
      mine.push_back(from_oracle(n, fams.back()));
    }
    const auto w = cross_matching(mine);
    EXPECT_EQ(w.has_value(), oracle::has_cross_matching(fams));
    if (!w) continue;
    EXPECT_TRUE(pairwise_disjoint(*w));
    for (std::size_t i = 0; i < t; ++i) EXPECT_TRUE(mine[i].contains((*w)[i]));
  }
}

TEST(CrossMatchingFree, PinnedClassification) {
  const Family lone(4, {Permutation{2, 1, 4, 3}});
  const auto c = classify_cross_matching_free(std::vector<Family>{lone, lone}, std::vector<Cell>{{1, 2}, {2, 1}});
  EXPECT_TRUE(c.containment_alternative());
  EXPECT_EQ(c.containment_witnesses, (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(c.union_size, 1);

  const Family six(6, {Permutation{2, 3, 1, 5, 6, 4}});
  const auto d = classify_cross_matching_free(std::vector<Family>{six, six, six}, std::vector<Cell>{{1, 2}, {2, 3}, {3, 1}});
  EXPECT_EQ(d.size_threshold, Rational(10547, 100));
  EXPECT_TRUE(d.size_alternative);

  const Family f1 = make_star(4, {1, 2}, StarKind::derangement);
  const Family f2 = make_star(4, {2, 1}, StarKind::derangement);
  EXPECT_THROW(classify_cross_matching_free(std::vector<Family>{f1, f2}, std::vector<Cell>{{1, 2}, {2, 1}}),
               std::invalid_argument);
  EXPECT_THROW(classify_cross_matching_free(std::vector<Family>{lone}, std::vector<Cell>{{1, 3}}), std::invalid_argument);
}

TEST(DisjointRepresentatives, Pinned) {
  // H_1, H_2 generated by the single cells of rows 1 and 2 (8 columns each).
  std::vector<std::vector<CellSet>> rows(2);
  for (int c = 1; c <= 8; ++c) {
    rows[0].push_back({{1, c}});
    rows[1].push_back({{2, c}});
  }
  const Rational p(1, 30);
  const auto held = check_disjoint_representatives(rows, 2, p);
  EXPECT_EQ(held.probabilities[0], 1 - pow(1 - p, 8));
  EXPECT_EQ(held.threshold, Rational(1, 5));
  EXPECT_TRUE(held.hypothesis_met);
  EXPECT_EQ(held.verdict, DisjointRepresentativesReport::Verdict::held);

  const std::vector<std::vector<CellSet>> singles{{{{1, 1}}}, {{{2, 2}}}};
  const auto vacuous = check_disjoint_representatives(singles, 2, Rational(1, 10));
  EXPECT_EQ(vacuous.probabilities[0], Rational(1, 10));
  EXPECT_FALSE(vacuous.hypothesis_met);
  EXPECT_EQ(vacuous.verdict, DisjointRepresentativesReport::Verdict::vacuous);
}

TEST(SupportBound, Examples) {
  const Family s4 = all_permutations(4);
  const std::vector<CellSet> one_pair{{{1, 1}, {2, 2}}};
  const auto a = support_bound_sides(s4, one_pair, Rational(1, 2), 2);
  EXPECT_EQ(a.lhs, 2);
  EXPECT_FALSE(a.trivial);
  EXPECT_EQ(a.singletons, 0u);

  const std::vector<CellSet> singles{{{1, 1}}, {{2, 3}}};
  const auto b = support_bound_sides(s4, singles, Rational(1, 2), 3);
  EXPECT_TRUE(b.trivial);
  EXPECT_FALSE(b.corollary_applicable);

  const std::vector<CellSet> boundary{{{1, 1}}, {{2, 3}, {3, 4}}};
  const auto c = support_bound_sides(s4, boundary, Rational(1, 2), 3);
  EXPECT_EQ(c.singletons, 1u);
  EXPECT_EQ(c.max_support_size, 2u);
  EXPECT_EQ(c.lhs, BigInt(oracle::count_containing(oracle::all_perms(4), {{1, 1}}) +
                          oracle::count_containing(oracle::all_perms(4), {{2, 3}, {3, 4}}) -
                          oracle::count_containing(oracle::all_perms(4), {{1, 1}, {2, 3}, {3, 4}})));
  EXPECT_FALSE(c.hypothesis_met);
}

TEST(StarCover, SigmaFourAndDerangements) {
  const Family s4 = all_permutations(4);
  const auto a = star_cover_sides(s4, s4, 2);
  EXPECT_EQ(a.best_cover, 6);
  EXPECT_EQ(a.family_size, 24);
  EXPECT_FALSE(a.holds);

  const Family d5 = derangements(5);
  const auto b = star_cover_sides(make_star(5, {1, 2}, StarKind::derangement), d5, 3);
  EXPECT_EQ(b.best_cover, 22);
  EXPECT_TRUE(b.holds);
  EXPECT_THROW(star_cover_sides(s4, derangements(4), 2), std::invalid_argument);
}
