#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "permemc/family.hpp"
#include "permemc/numeric.hpp"

namespace permemc {

/// Outcome of a check whose hypothesis may only hold asymptotically.
enum class CheckStatus { pass, fail, conditional, vacuous };
std::string_view to_string(CheckStatus status);

/// r-spreadness verdict. When the family is not r-spread, `witness` is a
/// set X maximizing |F(X)| r^{|X|} / |F| (ties: fewest cells, then smallest
/// cell list), and
/// |F(X)| > r^{-|X|} |F| holds exactly. For (r, q) checks `base` is the set
/// A whose trace F(A) failed.
struct SpreadReport {
  bool is_spread = true;
  std::optional<PartialPermutation> witness;
  Rational witness_ratio;  ///< |F(X)| / |F| (relative to F(A) for (r, q) checks)
  std::optional<PartialPermutation> base;
};

/// Exhaustive over every nonempty X contained in some residue (all other X
/// have empty trace). Comparison r^{|X|} |F(X)| <= |F| is exact. Cells must
/// lie in [15]^2. Throws std::invalid_argument for an empty family or r <= 0.
SpreadReport is_r_spread(const ResidueFamily& family, const Rational& r);
SpreadReport is_r_spread(const Family& family, const Rational& r);

/// min over nonempty X with nonempty trace of (|F| / |F(X)|)^{1/|X|}: the
/// largest r for which F is r-spread. The minimizer is found exactly; only
/// the returned value is a floating approximation. Infinite (no argmin) when
/// every residue is empty.
struct Spreadness {
  double value = 0.0;
  std::optional<PartialPermutation> argmin;
  BigInt argmin_trace;
};
Spreadness exact_spreadness(const ResidueFamily& family);
Spreadness exact_spreadness(const Family& family);

/// F(A) is r-spread for every A with |A| <= q (A = {} included).
SpreadReport is_rq_spread(const Family& family, const Rational& r, int q);

/// An inclusion-maximal X with |F(X)| >= rho^{-|X|} |F|. Grows from the
/// empty set: while some single-cell extension qualifies, add the smallest
/// such cell (row-major); if none does but a larger superset qualifies,
/// move to the smallest qualifying superset (fewest cells, then smallest
/// cell list). Any maximal X makes F(X) rho-spread.
PartialPermutation max_ratio_set(const ResidueFamily& family, const Rational& rho);
PartialPermutation max_ratio_set(const Family& family, const Rational& rho);

/// Output of the greedy spread approximation: supports S_1..S_{m-1},
/// branch families F_{S_i} = F^i[S_i] (aligned with supports), and the
/// remainder F'. `stopping_set` is S_m when the loop stopped on |S_m| > q.
struct ApproximationResult {
  std::vector<PartialPermutation> supports;
  std::vector<Family> branches;
  Family remainder;
  std::optional<PartialPermutation> stopping_set;
};

/// F^1 = F; while F^i is nonempty take S_i = max_ratio_set(F^i, r/2); stop
/// with F' = F^i if |S_i| > q, otherwise record F^i[S_i] and continue with
/// F^i minus F^i[S_i]. Requires F within A, r > 0, q >= 1.
ApproximationResult spread_approximate(const Family& family, const Family& ambient, const Rational& r, int q);

struct ApproximationCheck {
  bool covered = false;             ///< F \ F' lies in A[S]
  bool branches_partition = false;  ///< branches are disjoint with union F \ F'
  bool branches_spread = false;     ///< every F_B(B) is (r/2)-spread
  CheckStatus remainder_status = CheckStatus::conditional;  ///< |F'| <= 2^{-q-1}|A|
  BigInt remainder_size;
  Rational remainder_limit;
  /// True when the empty set is a support; nu(S) is then not meaningful.
  bool degenerate_support = false;
  std::optional<std::size_t> support_matching;
};

/// The covering and spreadness guarantees are checked unconditionally. The
/// remainder bound is asserted only when A is verified r-spread at the
/// stopping set (the single trace its proof uses); otherwise it is
/// evaluated and reported conditional.
ApproximationCheck verify_approximation(const ApproximationResult& result, const Family& family, const Family& ambient,
                                        const Rational& r, int q);

/// Pr[some member is contained in W] for W a p-random subset of the cells.
struct ContainmentEstimate {
  double value = 0.0;
  double standard_error = 0.0;
  std::optional<Rational> exact;
  std::size_t ground_size = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

enum class ContainmentMethod { exhaustive, inclusion_exclusion };
inline constexpr std::size_t kInclusionExclusionCap = 20;

/// Exhaustive: up-closure over all subsets of the <= 24 relevant cells.
/// Inclusion-exclusion: signed sum over nonempty subfamilies (<= 20 sets).
ContainmentEstimate containment_probability(std::span<const CellSet> sets, const Rational& p,
                                            ContainmentMethod method = ContainmentMethod::exhaustive);
ContainmentEstimate containment_probability(const Family& family, const Rational& p,
                                            ContainmentMethod method = ContainmentMethod::exhaustive);

/// Monte Carlo with counter-based randomness: sample i draws its cells from
/// a stream keyed by (seed, i), so any split across workers gives the same
/// estimate bit for bit.
ContainmentEstimate containment_probability_monte_carlo(std::span<const CellSet> sets, const Rational& p,
                                                        std::uint64_t samples, std::uint64_t seed);
ContainmentEstimate containment_probability_monte_carlo(const Family& family, const Rational& p, std::uint64_t samples,
                                                        std::uint64_t seed);

/// 1 - (2 / log2(r delta))^beta k, or vacuous when r delta <= 2 or the
/// value is not positive.
struct SpreadLemmaBound {
  bool vacuous = true;
  double value = 0.0;
};
SpreadLemmaBound spread_lemma_bound(double k, double r, double beta, double delta);

}  // namespace permemc
