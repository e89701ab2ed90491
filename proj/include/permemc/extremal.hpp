#pragma once

#include <span>
#include <string_view>

#include "permemc/family.hpp"

namespace permemc {

enum class StarKind {
  full,        ///< Sigma_n[(x, y)]
  derangement  ///< D_n[(x, y)], requires x != y
};

/// How the centers of a star union are laid out.
enum class StarShape {
  single,         ///< one star
  common_row,     ///< all centers share a row, columns distinct
  common_column,  ///< all centers share a column, rows distinct
  mixed           ///< anything else
};

std::string_view to_string(StarShape shape);

struct StarUnion {
  Family family;
  StarShape shape = StarShape::single;
  /// True iff no permutation lies in two of the stars (checked on members).
  bool pairwise_disjoint = true;
};

Family make_star(int n, Cell center, StarKind kind = StarKind::full);

/// Union of the stars centered at `centers`. Throws std::invalid_argument on
/// duplicate centers or, for derangement stars, a diagonal center.
StarUnion make_star_union(int n, std::span<const Cell> centers, StarKind kind = StarKind::full);

/// The permutation Hilton-Milner family: permutations fixing 1 that meet
/// sigma, plus sigma itself. Requires sigma(1) != 1; size (n-1)! - d_{n,1} + 1.
Family make_hm(const Permutation& sigma);

/// Stars Sigma_n[(1, i)] for 2 <= i <= s-1 together with make_hm(sigma).
/// Requires s >= 2, s-1 <= n and sigma(1) not in [s-1]; the result has
/// matching number s-1, covering number s and size
/// (s-1)(n-1)! - d_{n,1} + 1.
Family make_hm_star_union(int s, const Permutation& sigma);

/// {rho o sigma o pi : sigma in F}.
Family apply_isomorphism(const Permutation& rho, const Family& family, const Permutation& pi);

}  // namespace permemc
