#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "permemc/bitset.hpp"
#include "permemc/family.hpp"
#include "permemc/numeric.hpp"

namespace permemc {

/// Maximum clique of the graph given by symmetric adjacency rows (no
/// loops). Returns the lexicographically least maximum clique as sorted
/// vertex indices. `lower_bound` must not exceed the clique number; the
/// search stops early once a clique of size `upper_bound` is found.
std::vector<std::size_t> maximum_clique(std::span<const DynamicBitset> adjacency, std::size_t lower_bound = 0,
                                        std::size_t upper_bound = static_cast<std::size_t>(-1));

/// nu(F) with a witness: pairwise disjoint members. Branch and bound on the
/// disjointness graph, seeded with the largest coset class of F (a ready
/// matching) and capped by the number of distinct images in any row.
struct Matching {
  std::size_t size = 0;
  std::vector<Permutation> members;
};
Matching matching_number(const Family& family);

/// nu of an arbitrary family of cell sets (duplicates collapse).
struct SetMatching {
  std::size_t size = 0;
  std::vector<CellSet> members;
};
SetMatching matching_number(std::span<const CellSet> sets);

/// tau(F) with the lexicographically least minimum cover (cells row-major).
/// Throws std::invalid_argument for an empty family.
struct Cover {
  std::size_t size = 0;
  CellSet cells;
};
Cover covering_number(const Family& family);

/// Canonical member of the left coset sigma<c>, c = (1 2 ... n): the
/// rotation of sigma's image sequence that starts with 1.
Permutation coset_representative(const Permutation& sigma);

/// All (n-1)! left cosets of <(1 2 ... n)> in Sigma_n, ordered by
/// representative. Throws CapExceeded above the enumeration cap.
std::vector<Family> coset_partition(int n);

struct CosetCertificate {
  int degree = 0;
  BigInt class_count;  ///< (n-1)!
  /// Representative and member count of each coset that meets F.
  std::vector<std::pair<Permutation, std::size_t>> occupied;
  std::size_t max_count = 0;
  /// Members of F sharing a coset are pairwise disjoint.
  bool classes_disjoint = true;
  /// max_count <= s-1, which yields |F| <= (s-1)(n-1)!.
  bool certified = false;
  BigInt bound;  ///< (s-1)(n-1)!
  /// Set when nu(F) was supplied and is below s: whether the count
  /// condition holds (it must).
  std::optional<bool> consistent_with_matching;
};
CosetCertificate coset_certificate(const Family& family, int s, std::optional<std::size_t> known_matching = std::nullopt);

/// Pairwise disjoint representatives, one from each family, or nullopt.
/// Families are branched in increasing size order; the witness is listed in
/// input order.
std::optional<std::vector<Permutation>> cross_matching(std::span<const Family> families);
std::optional<std::vector<CellSet>> cross_matching(std::span<const std::vector<CellSet>> families);

/// Facts about families F_i inside derangement stars D_n[(x_i, y_i)] with no
/// cross matching: which j satisfy "union F_i lies in the union of the other
/// stars", and how |union F_i| compares with (t - 1.01) d_{n,1}.
struct CrossMatchingFreeClassification {
  std::vector<std::size_t> containment_witnesses;  ///< 1-based j
  BigInt union_size;
  Rational size_threshold;
  bool size_alternative = false;
  bool containment_alternative() const { return !containment_witnesses.empty(); }
  std::string_view alternative() const;  ///< containment | size | both | neither
};
/// Validates distinct off-diagonal centers, F_i within its star, and the
/// absence of a cross matching; throws std::invalid_argument otherwise.
CrossMatchingFreeClassification classify_cross_matching_free(std::span<const Family> families, std::span<const Cell> centers);

/// Disjoint-representatives check for up-closed families given by their
/// generators: exact Pr[W in H_i] for a p-random W over the union of the
/// generators' cells, the hypothesis Pr >= 3sp, and a search for pairwise
/// disjoint generators.
struct DisjointRepresentativesReport {
  enum class Verdict { held, violated, vacuous };
  std::vector<Rational> probabilities;
  Rational threshold;  ///< 3sp
  bool hypothesis_met = false;
  std::optional<std::vector<CellSet>> representatives;
  Verdict verdict = Verdict::vacuous;
};
inline constexpr std::size_t kExactGroundCap = 24;
DisjointRepresentativesReport check_disjoint_representatives(std::span<const std::vector<CellSet>> bases, int s,
                                                             const Rational& p);
std::string_view to_string(DisjointRepresentativesReport::Verdict verdict);

/// Both sides of the support-size inequalities for an ambient family A and a
/// support family S:
///   |A[S]| <= |union_j A[x_j]| + eps (s-1-l) |A[x]|   (x a heaviest cell)
///   |A[S]| <= (s-2+eps) |A[x]|                         (non-trivial S)
/// together with the structural facts they presuppose. The hypothesis
/// eps r >= 8e(s-1)q is evaluated with e replaced by a rational upper bound,
/// and A is tested for (r, 1)-spreadness at that r.
struct SupportBoundReport {
  std::size_t singletons = 0;  ///< l
  bool trivial = false;
  std::size_t support_matching = 0;
  bool matching_free = false;  ///< nu(S) < s
  bool maximal = false;
  std::size_t max_support_size = 0;  ///< q
  BigInt lhs;
  BigInt singleton_union;
  Cell heaviest_cell;
  BigInt heaviest_star;
  Rational rhs_main;
  Rational rhs_corollary;
  bool main_holds = false;
  bool corollary_applicable = false;
  bool corollary_holds = false;
  Rational required_spread;
  bool hypothesis_met = false;
};
SupportBoundReport support_bound_sides(const Family& ambient, std::span<const CellSet> supports, const Rational& eps, int s);

/// |Y| = the largest |X[{v_1..v_{s-1}}]| over (s-1)-sets of cells, and the
/// comparison |F| <= |Y| + n^{-4}|X|. Requires F within X.
struct StarCoverReport {
  CellSet best_cells;
  BigInt best_cover;
  Rational slack;
  Rational bound;
  BigInt family_size;
  bool holds = false;
};
StarCoverReport star_cover_sides(const Family& family, const Family& ambient, int s);

}  // namespace permemc
