#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace permemc {

/// Largest n a Permutation can hold. Enumeration of whole families is capped
/// much lower (kEnumerationCap); counting kernels go through matrices.
inline constexpr int kMaxDegree = 32;

/// A position (row, col) of [n]^2, 1-indexed. A permutation sigma is
/// identified with its graph {(i, sigma(i))}.
struct Cell {
  int row = 0;
  int col = 0;

  friend auto operator<=>(const Cell&, const Cell&) = default;
};

std::string to_string(Cell cell);  // "row:col"
Cell parse_cell(std::string_view text);

/// A sorted, duplicate-free set of cells with no further structure. Used for
/// arbitrary ground-set families (supports, generator bases).
using CellSet = std::vector<Cell>;

CellSet normalize(CellSet cells);
bool is_partial_permutation(std::span<const Cell> cells);
bool disjoint(std::span<const Cell> a, std::span<const Cell> b);
bool includes(std::span<const Cell> superset, std::span<const Cell> subset);
std::string to_string(std::span<const Cell> cells);  // "1:1,2:3"

/// A set of cells with pairwise distinct rows and pairwise distinct columns,
/// hence extendable to a full permutation. Cells are kept sorted row-major.
class PartialPermutation {
 public:
  PartialPermutation() = default;
  /// Throws std::invalid_argument on a row or column clash.
  explicit PartialPermutation(CellSet cells);

  /// Returns nullopt instead of throwing.
  static std::optional<PartialPermutation> try_make(CellSet cells);

  /// Parses the literal "r:c,r:c,..." (empty string is the empty set).
  static PartialPermutation parse(std::string_view text);

  const CellSet& cells() const noexcept { return cells_; }
  std::size_t size() const noexcept { return cells_.size(); }
  bool empty() const noexcept { return cells_.empty(); }

  bool contains(Cell cell) const;
  bool is_subset_of(const PartialPermutation& other) const;

  /// Adds a cell; nullopt when it clashes with an existing row or column.
  std::optional<PartialPermutation> extended(Cell cell) const;

  std::string to_string() const { return permemc::to_string(cells_); }

  friend bool operator==(const PartialPermutation&, const PartialPermutation&) = default;
  friend auto operator<=>(const PartialPermutation& a, const PartialPermutation& b) {
    return a.cells_ <=> b.cells_;
  }

 private:
  CellSet cells_;
};

/// A bijection of [n], stored as its image sequence. Ordering is
/// lexicographic on (n, images), which is the canonical family order.
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument unless `images` is a bijection of [1, n].
  explicit Permutation(std::span<const int> images);
  Permutation(std::initializer_list<int> images);

  static Permutation identity(int n);
  static Permutation parse(std::string_view text);  // whitespace-separated images

  int degree() const noexcept { return n_; }
  /// sigma(i) for 1 <= i <= n.
  int operator()(int i) const noexcept { return image_[static_cast<std::size_t>(i - 1)]; }

  std::vector<int> images() const;
  std::vector<Cell> graph() const;
  PartialPermutation as_partial() const;

  Permutation inverse() const;
  bool is_derangement() const noexcept;
  bool contains(Cell cell) const noexcept {
    return cell.row >= 1 && cell.row <= n_ && (*this)(cell.row) == cell.col;
  }
  bool contains(std::span<const Cell> cells) const noexcept;

  std::string to_string() const;  // "2 3 1"

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::uint8_t n_ = 0;
  std::array<std::uint8_t, kMaxDegree> image_{};
};

/// (a o b)(i) = a(b(i)).
Permutation compose(const Permutation& a, const Permutation& b);

/// True iff a(i) = b(i) for some i, i.e. their graphs meet.
bool intersects(const Permutation& a, const Permutation& b);

}  // namespace permemc
