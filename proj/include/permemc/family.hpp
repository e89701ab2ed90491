#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "permemc/permutation.hpp"

namespace permemc {

/// Full enumeration of Sigma_n and its subfamilies is refused above this n.
inline constexpr int kEnumerationCap = 10;

/// A finite set of permutations of a common degree n. Members are kept
/// sorted lexicographically and duplicate-free; a Family is immutable once
/// built.
class Family {
 public:
  Family() = default;
  explicit Family(int n) : n_(n) {}
  /// Sorts and deduplicates; throws DimensionMismatch if some member has a
  /// different degree.
  Family(int n, std::vector<Permutation> members);

  int degree() const noexcept { return n_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }

  std::span<const Permutation> members() const noexcept { return members_; }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }
  const Permutation& operator[](std::size_t i) const { return members_[i]; }

  bool contains(const Permutation& sigma) const;
  /// Position of sigma in canonical order, if present.
  std::optional<std::size_t> index_of(const Permutation& sigma) const;

  friend bool operator==(const Family&, const Family&) = default;

 private:
  int n_ = 0;
  std::vector<Permutation> members_;
};

/// Residues F(X): graphs of members containing X with X removed. Each
/// residue is a partial permutation of size n - |X|.
using ResidueFamily = std::vector<PartialPermutation>;

/// F(X) = {graph(sigma) \ X : X subset of graph(sigma)}, sorted. Empty when
/// no member contains X (in particular when X is not a partial permutation).
ResidueFamily trace(const Family& family, std::span<const Cell> cells);

/// F[X] = members whose graph contains X.
Family subfamily_containing(const Family& family, std::span<const Cell> cells);

/// F[S] = union over A in S of F[A].
Family subfamily_containing_any(const Family& family, std::span<const CellSet> sets);

/// Graphs of all members as residues of the empty set.
ResidueFamily as_residues(const Family& family);

Family family_union(const Family& a, const Family& b);
Family family_difference(const Family& a, const Family& b);
bool is_subfamily(const Family& sub, const Family& super);

enum class EnumerationKind { all, derangements, double_derangements };

/// Sigma_n, D_n, or D_{n, not sigma} (derangements disjoint from sigma).
/// Throws CapExceeded for n > kEnumerationCap.
Family enumerate(int n, EnumerationKind kind, const std::optional<Permutation>& sigma = std::nullopt);

Family all_permutations(int n);
Family derangements(int n);
Family double_derangements(const Permutation& sigma);

/// Calls visit(sigma) for every permutation of [n] containing `fixed`, in
/// lexicographic order. `fixed` must be a partial permutation on [n].
void for_each_completion(int n, const PartialPermutation& fixed,
                         const std::function<void(const Permutation&)>& visit);

}  // namespace permemc
