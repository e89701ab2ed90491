#include "permemc/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "permemc/numeric.hpp"

namespace permemc {

std::string to_string(Cell cell) { return std::to_string(cell.row) + ":" + std::to_string(cell.col); }

namespace {

int parse_int(std::string_view text, std::string_view context) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw std::invalid_argument("malformed integer in '" + std::string(context) + "'");
  }
  return value;
}

}  // namespace

Cell parse_cell(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw std::invalid_argument("cell must be 'row:col', got '" + std::string(text) + "'");
  Cell cell{parse_int(text.substr(0, colon), text), parse_int(text.substr(colon + 1), text)};
  if (cell.row < 1 || cell.col < 1) throw std::invalid_argument("cells are 1-indexed: '" + std::string(text) + "'");
  return cell;
}

CellSet normalize(CellSet cells) {
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  return cells;
}

bool is_partial_permutation(std::span<const Cell> cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (std::size_t j = i + 1; j < cells.size(); ++j) {
      if (cells[i].row == cells[j].row || cells[i].col == cells[j].col) return false;
    }
  }
  return true;
}

bool disjoint(std::span<const Cell> a, std::span<const Cell> b) {
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia == *ib) return false;
    if (*ia < *ib) ++ia; else ++ib;
  }
  return true;
}

bool includes(std::span<const Cell> superset, std::span<const Cell> subset) {
  return std::includes(superset.begin(), superset.end(), subset.begin(), subset.end());
}

std::string to_string(std::span<const Cell> cells) {
  std::string out;
  for (const Cell& c : cells) {
    if (!out.empty()) out += ',';
    out += to_string(c);
  }
  return out;
}

PartialPermutation::PartialPermutation(CellSet cells) : cells_(normalize(std::move(cells))) {
  if (!is_partial_permutation(cells_)) {
    throw std::invalid_argument("not a partial permutation: {" + permemc::to_string(cells_) + "}");
  }
}

std::optional<PartialPermutation> PartialPermutation::try_make(CellSet cells) {
  cells = normalize(std::move(cells));
  if (!is_partial_permutation(cells)) return std::nullopt;
  PartialPermutation result;
  result.cells_ = std::move(cells);
  return result;
}

PartialPermutation PartialPermutation::parse(std::string_view text) {
  CellSet cells;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view token = text.substr(0, comma);
    if (token.find_first_not_of(' ') != std::string_view::npos) cells.push_back(parse_cell(token));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return PartialPermutation(std::move(cells));
}

bool PartialPermutation::contains(Cell cell) const {
  return std::binary_search(cells_.begin(), cells_.end(), cell);
}

bool PartialPermutation::is_subset_of(const PartialPermutation& other) const {
  return includes(other.cells_, cells_);
}

std::optional<PartialPermutation> PartialPermutation::extended(Cell cell) const {
  for (const Cell& c : cells_) {
    if (c == cell) return *this;
    if (c.row == cell.row || c.col == cell.col) return std::nullopt;
  }
  PartialPermutation result = *this;
  result.cells_.insert(std::upper_bound(result.cells_.begin(), result.cells_.end(), cell), cell);
  return result;
}

Permutation::Permutation(std::span<const int> images) {
  const auto n = images.size();
  if (n == 0 || n > static_cast<std::size_t>(kMaxDegree)) {
    throw std::invalid_argument("permutation degree must be in [1, " + std::to_string(kMaxDegree) + "]");
  }
  std::array<bool, kMaxDegree + 1> seen{};
  for (std::size_t i = 0; i < n; ++i) {
    const int v = images[i];
    if (v < 1 || v > static_cast<int>(n) || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("image sequence is not a bijection of [1, " + std::to_string(n) + "]");
    }
    seen[static_cast<std::size_t>(v)] = true;
    image_[i] = static_cast<std::uint8_t>(v);
  }
  n_ = static_cast<std::uint8_t>(n);
}

Permutation::Permutation(std::initializer_list<int> images)
    : Permutation(std::span<const int>(images.begin(), images.size())) {}

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = i + 1;
  return Permutation(images);
}

Permutation Permutation::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<int> images;
  std::string token;
  while (in >> token) images.push_back(parse_int(token, text));
  return Permutation(images);
}

std::vector<int> Permutation::images() const {
  return {image_.begin(), image_.begin() + n_};
}

std::vector<Cell> Permutation::graph() const {
  std::vector<Cell> cells(n_);
  for (int i = 1; i <= n_; ++i) cells[static_cast<std::size_t>(i - 1)] = {i, (*this)(i)};
  return cells;
}

PartialPermutation Permutation::as_partial() const { return *PartialPermutation::try_make(graph()); }

Permutation Permutation::inverse() const {
  Permutation result = *this;
  for (int i = 1; i <= n_; ++i) result.image_[static_cast<std::size_t>((*this)(i) - 1)] = static_cast<std::uint8_t>(i);
  return result;
}

bool Permutation::is_derangement() const noexcept {
  for (int i = 1; i <= n_; ++i) {
    if ((*this)(i) == i) return false;
  }
  return true;
}

bool Permutation::contains(std::span<const Cell> cells) const noexcept {
  return std::all_of(cells.begin(), cells.end(), [this](Cell c) { return contains(c); });
}

std::string Permutation::to_string() const {
  std::string out;
  for (int i = 1; i <= n_; ++i) {
    if (i > 1) out += ' ';
    out += std::to_string((*this)(i));
  }
  return out;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw DimensionMismatch("compose: degrees differ");
  std::vector<int> images(static_cast<std::size_t>(a.degree()));
  for (int i = 1; i <= a.degree(); ++i) images[static_cast<std::size_t>(i - 1)] = a(b(i));
  return Permutation(images);
}

bool intersects(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw DimensionMismatch("intersects: degrees differ");
  for (int i = 1; i <= a.degree(); ++i) {
    if (a(i) == b(i)) return true;
  }
  return false;
}

}  // namespace permemc
