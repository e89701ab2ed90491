#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "permemc/numeric.hpp"
#include "permemc/permutation.hpp"

namespace permemc {

/// Square 0/1 matrix, 0-indexed, row-major.
class ZeroOneMatrix {
 public:
  ZeroOneMatrix() = default;
  explicit ZeroOneMatrix(int size, std::uint8_t fill = 0);
  /// Throws std::invalid_argument unless rows form a square 0/1 matrix.
  explicit ZeroOneMatrix(const std::vector<std::vector<int>>& rows);

  static ZeroOneMatrix identity(int size);
  static ZeroOneMatrix all_ones(int size);

  int size() const noexcept { return size_; }
  std::uint8_t at(int row, int col) const { return entries_[index(row, col)]; }
  void set(int row, int col, std::uint8_t value);

  int row_ones(int row) const;
  int col_ones(int col) const;

  friend bool operator==(const ZeroOneMatrix&, const ZeroOneMatrix&) = default;

 private:
  std::size_t index(int row, int col) const {
    return static_cast<std::size_t>(row) * static_cast<std::size_t>(size_) + static_cast<std::size_t>(col);
  }

  int size_ = 0;
  std::vector<std::uint8_t> entries_;
};

/// d_n by d_n = (n-1)(d_{n-1} + d_{n-2}), d_0 = 1, d_1 = 0.
BigInt derangement_count(int n);

/// d_n = n! * sum_{i=0}^{n} (-1)^i / i!, evaluated exactly.
BigInt derangement_count_inclusion_exclusion(int n);

/// Nearest integer to n!/e, from the alternating series truncated past the
/// rounding-relevant terms and evaluated in exact rationals.
BigInt nearest_integer_to_factorial_over_e(int n);

/// d_{n,1} = d_{n-1} + d_{n-2}: derangements through one fixed off-diagonal
/// cell. Requires n >= 2.
BigInt pointed_derangement_count(int n);

enum class PermanentMethod { ryser, brute };

inline constexpr int kRyserCap = 30;
inline constexpr int kBruteCap = 9;

/// Exact permanent. Ryser runs the inclusion-exclusion formula over row
/// subsets in Gray-code order with incremental column sums, split across
/// worker_count() threads; brute sums all N! products.
BigInt permanent(const ZeroOneMatrix& matrix, PermanentMethod method = PermanentMethod::ryser);

/// The matrix whose permanent counts derangements disjoint from sigma that
/// contain S: rows/columns used by S are deleted and row i forbids columns
/// i and sigma(i). Empty optional when S itself clashes with a forbidden cell.
std::optional<ZeroOneMatrix> double_derangement_matrix(const Permutation& sigma, const PartialPermutation& fixed);

/// |D_{n, not sigma}(S)|.
BigInt double_derangement_count(const Permutation& sigma, const PartialPermutation& fixed);

/// Shape of the zero-graph (bipartite, rows vs columns) of a matrix whose
/// rows and columns each hold at most two zeros, after saturation.
enum class ZeroGraphShape {
  two_regular,    ///< every vertex has exactly two zeros
  one_deficient,  ///< one row and one column carry a single, shared zero
  other
};

std::string_view to_string(ZeroGraphShape shape);

/// Egorychev-Falikman lower bounds on the permanent of a saturated matrix:
///   two_regular:    (1 - 2/N)^N N!
///   one_deficient:  (N-1)/N (1 - 2/(N-1))^{N-1} N!
/// Exact rationals. Requires N >= 4.
Rational permanent_lower_bound(int size, ZeroGraphShape shape);

struct PermanentBoundCheck {
  ZeroGraphShape shape = ZeroGraphShape::other;
  ZeroOneMatrix saturated;
  BigInt permanent;
  BigInt saturated_permanent;
  Rational bound;
  bool holds = false;
};

/// Requires every row and column of `matrix` to contain at least N-2 ones
/// (throws std::invalid_argument otherwise). Saturates a copy by adding
/// zeros row-major while both endpoints have fewer than two, classifies the
/// resulting zero-graph and compares the exact permanent with the bound.
PermanentBoundCheck check_permanent_bound(const ZeroOneMatrix& matrix);

}  // namespace permemc
