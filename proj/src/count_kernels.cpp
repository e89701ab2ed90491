#include "permemc/count_kernels.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

namespace permemc {

ZeroOneMatrix::ZeroOneMatrix(int size, std::uint8_t fill) : size_(size) {
  if (size < 0) throw std::invalid_argument("matrix size must be non-negative");
  if (fill > 1) throw std::invalid_argument("matrix entries must be 0 or 1");
  entries_.assign(static_cast<std::size_t>(size) * static_cast<std::size_t>(size), fill);
}

ZeroOneMatrix::ZeroOneMatrix(const std::vector<std::vector<int>>& rows) : ZeroOneMatrix(static_cast<int>(rows.size())) {
  for (int i = 0; i < size_; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i)];
    if (static_cast<int>(row.size()) != size_) throw std::invalid_argument("matrix is not square");
    for (int j = 0; j < size_; ++j) set(i, j, static_cast<std::uint8_t>(row[static_cast<std::size_t>(j)] == 1 ? 1 : (row[static_cast<std::size_t>(j)] == 0 ? 0 : 2)));
  }
}

ZeroOneMatrix ZeroOneMatrix::identity(int size) {
  ZeroOneMatrix m(size);
  for (int i = 0; i < size; ++i) m.set(i, i, 1);
  return m;
}

ZeroOneMatrix ZeroOneMatrix::all_ones(int size) { return ZeroOneMatrix(size, 1); }

void ZeroOneMatrix::set(int row, int col, std::uint8_t value) {
  if (row < 0 || row >= size_ || col < 0 || col >= size_) throw std::out_of_range("matrix index out of range");
  if (value > 1) throw std::invalid_argument("matrix entries must be 0 or 1");
  entries_[index(row, col)] = value;
}

int ZeroOneMatrix::row_ones(int row) const {
  int total = 0;
  for (int j = 0; j < size_; ++j) total += at(row, j);
  return total;
}

int ZeroOneMatrix::col_ones(int col) const {
  int total = 0;
  for (int i = 0; i < size_; ++i) total += at(i, col);
  return total;
}

BigInt derangement_count(int n) {
  if (n < 0) throw std::invalid_argument("derangement_count: n must be non-negative");
  BigInt previous = 1;  // d_0
  BigInt current = 0;   // d_1
  if (n == 0) return previous;
  for (int k = 2; k <= n; ++k) {
    BigInt next = BigInt(k - 1) * (current + previous);
    previous = std::move(current);
    current = std::move(next);
  }
  return current;
}

BigInt derangement_count_inclusion_exclusion(int n) {
  if (n < 0) throw std::invalid_argument("derangement_count: n must be non-negative");
  // n! * sum (-1)^i / i! = sum (-1)^i n!/i!, all terms integral.
  BigInt total = 0;
  BigInt falling = 1;  // n!/i! for i = n, n-1, ..., 0
  for (int i = n; i >= 0; --i) {
    if (i % 2 == 0) total += falling; else total -= falling;
    falling *= i == 0 ? 1 : i;
  }
  return total;
}

BigInt nearest_integer_to_factorial_over_e(int n) {
  if (n < 0) throw std::invalid_argument("nearest_integer_to_factorial_over_e: n must be non-negative");
  // Truncating after i = n + 3 leaves a tail below 1/((n+1)(n+2)(n+3)(n+4)),
  // far from moving the partial sum across a half-integer.
  const BigInt nf = factorial(static_cast<unsigned>(n));
  Rational sum = 0;
  BigInt i_factorial = 1;
  for (int i = 0; i <= n + 3; ++i) {
    if (i > 0) i_factorial *= i;
    const Rational term(nf, i_factorial);
    if (i % 2 == 0) sum += term; else sum -= term;
  }
  return floor(sum + Rational(1, 2));
}

BigInt pointed_derangement_count(int n) {
  if (n < 2) throw std::invalid_argument("pointed_derangement_count: n must be at least 2");
  return derangement_count(n - 1) + derangement_count(n - 2);
}

namespace {

using u128 = unsigned __int128;

BigInt to_bigint(u128 value) {
  BigInt result = static_cast<std::uint64_t>(value >> 64);
  result <<= 64;
  result += static_cast<std::uint64_t>(value);
  return result;
}

// Sum over Gray-code indices [lo, hi) of (-1)^{N-|S|} prod_j colsum_S(j).
// Arithmetic wraps modulo 2^128; the full sum is the permanent, which is
// below N! < 2^127 for N <= 33, so the wrapped total is exact.
u128 ryser_range(const ZeroOneMatrix& m, std::uint64_t lo, std::uint64_t hi) {
  const int n = m.size();
  std::vector<std::uint32_t> colsum(static_cast<std::size_t>(n), 0);
  std::uint64_t gray = lo ^ (lo >> 1);
  for (int i = 0; i < n; ++i) {
    if ((gray >> i) & 1U) {
      for (int j = 0; j < n; ++j) colsum[static_cast<std::size_t>(j)] += m.at(i, j);
    }
  }
  u128 total = 0;
  for (std::uint64_t k = lo; k < hi; ++k) {
    if (k != lo) {
      const int row = std::countr_zero(k);
      gray ^= std::uint64_t{1} << row;
      const bool added = (gray >> row) & 1U;
      for (int j = 0; j < n; ++j) {
        if (added) colsum[static_cast<std::size_t>(j)] += m.at(row, j);
        else colsum[static_cast<std::size_t>(j)] -= m.at(row, j);
      }
    }
    if (gray == 0) continue;
    u128 product = 1;
    for (int j = 0; j < n && product != 0; ++j) product *= colsum[static_cast<std::size_t>(j)];
    if (product == 0) continue;
    const int parity = (n - std::popcount(gray)) & 1;
    if (parity == 0) total += product; else total -= product;
  }
  return total;
}

BigInt permanent_ryser(const ZeroOneMatrix& m) {
  const std::uint64_t subsets = std::uint64_t{1} << m.size();
  const std::uint64_t min_chunk = 1U << 12;
  const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(worker_count(), std::max<std::uint64_t>(1, subsets / min_chunk)));
  if (workers <= 1) return to_bigint(ryser_range(m, 0, subsets));

  std::vector<u128> partial(workers, 0);
  std::vector<std::jthread> threads;
  const std::uint64_t step = subsets / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t lo = step * w;
    const std::uint64_t hi = w + 1 == workers ? subsets : step * (w + 1);
    threads.emplace_back([&, w, lo, hi] { partial[w] = ryser_range(m, lo, hi); });
  }
  threads.clear();
  u128 total = 0;
  for (u128 p : partial) total += p;
  return to_bigint(total);
}

BigInt permanent_brute(const ZeroOneMatrix& m) {
  std::vector<int> cols(static_cast<std::size_t>(m.size()));
  std::iota(cols.begin(), cols.end(), 0);
  std::uint64_t total = 0;
  do {
    bool all_ones = true;
    for (int i = 0; i < m.size() && all_ones; ++i) all_ones = m.at(i, cols[static_cast<std::size_t>(i)]) == 1;
    total += all_ones ? 1 : 0;
  } while (std::next_permutation(cols.begin(), cols.end()));
  return total;
}

}  // namespace

BigInt permanent(const ZeroOneMatrix& matrix, PermanentMethod method) {
  if (matrix.size() == 0) return 1;
  switch (method) {
    case PermanentMethod::ryser:
      if (matrix.size() > kRyserCap) throw CapExceeded("permanent: Ryser is capped at N = " + std::to_string(kRyserCap));
      return permanent_ryser(matrix);
    case PermanentMethod::brute:
      if (matrix.size() > kBruteCap) throw CapExceeded("permanent: brute force is capped at N = " + std::to_string(kBruteCap));
      return permanent_brute(matrix);
  }
  return 0;
}

std::optional<ZeroOneMatrix> double_derangement_matrix(const Permutation& sigma, const PartialPermutation& fixed) {
  const int n = sigma.degree();
  std::vector<bool> row_used(static_cast<std::size_t>(n) + 1, false);
  std::vector<bool> col_used(static_cast<std::size_t>(n) + 1, false);
  for (const Cell& c : fixed.cells()) {
    if (c.row > n || c.col > n) throw DimensionMismatch("fixed cell " + to_string(c) + " outside [" + std::to_string(n) + "]^2");
    if (c.col == c.row || c.col == sigma(c.row)) return std::nullopt;
    row_used[static_cast<std::size_t>(c.row)] = true;
    col_used[static_cast<std::size_t>(c.col)] = true;
  }
  std::vector<int> rows;
  std::vector<int> cols;
  for (int i = 1; i <= n; ++i) {
    if (!row_used[static_cast<std::size_t>(i)]) rows.push_back(i);
    if (!col_used[static_cast<std::size_t>(i)]) cols.push_back(i);
  }
  ZeroOneMatrix m(static_cast<int>(rows.size()));
  for (std::size_t a = 0; a < rows.size(); ++a) {
    for (std::size_t b = 0; b < cols.size(); ++b) {
      const bool allowed = cols[b] != rows[a] && cols[b] != sigma(rows[a]);
      m.set(static_cast<int>(a), static_cast<int>(b), allowed ? 1 : 0);
    }
  }
  return m;
}

BigInt double_derangement_count(const Permutation& sigma, const PartialPermutation& fixed) {
  const auto matrix = double_derangement_matrix(sigma, fixed);
  if (!matrix) return 0;
  return permanent(*matrix, PermanentMethod::ryser);
}

std::string_view to_string(ZeroGraphShape shape) {
  switch (shape) {
    case ZeroGraphShape::two_regular: return "two_regular";
    case ZeroGraphShape::one_deficient: return "one_deficient";
    case ZeroGraphShape::other: return "other";
  }
  return "other";
}

Rational permanent_lower_bound(int size, ZeroGraphShape shape) {
  if (size < 4) throw std::invalid_argument("permanent_lower_bound: N must be at least 4");
  const unsigned n = static_cast<unsigned>(size);
  switch (shape) {
    case ZeroGraphShape::two_regular:
      return pow(Rational(n - 2, n), n) * Rational(factorial(n));
    case ZeroGraphShape::one_deficient:
      return Rational(n - 1, n) * pow(Rational(n - 3, n - 1), n - 1) * Rational(factorial(n));
    case ZeroGraphShape::other:
      break;
  }
  throw std::invalid_argument("permanent_lower_bound: no bound for an unclassified zero-graph");
}

PermanentBoundCheck check_permanent_bound(const ZeroOneMatrix& matrix) {
  const int n = matrix.size();
  if (n < 4) throw std::invalid_argument("check_permanent_bound: N must be at least 4");
  std::vector<int> row_zeros(static_cast<std::size_t>(n));
  std::vector<int> col_zeros(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    row_zeros[static_cast<std::size_t>(i)] = n - matrix.row_ones(i);
    col_zeros[static_cast<std::size_t>(i)] = n - matrix.col_ones(i);
    if (row_zeros[static_cast<std::size_t>(i)] > 2 || col_zeros[static_cast<std::size_t>(i)] > 2) {
      throw std::invalid_argument("check_permanent_bound: every row and column needs at least N-2 ones");
    }
  }

  PermanentBoundCheck check;
  check.saturated = matrix;
  // One row-major pass is already maximal: degrees only grow, so a pair
  // skipped once can never become addable later.
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      auto& rz = row_zeros[static_cast<std::size_t>(i)];
      auto& cz = col_zeros[static_cast<std::size_t>(j)];
      if (check.saturated.at(i, j) == 1 && rz < 2 && cz < 2) {
        check.saturated.set(i, j, 0);
        ++rz;
        ++cz;
      }
    }
  }

  std::vector<int> light_rows;
  std::vector<int> light_cols;
  for (int i = 0; i < n; ++i) {
    if (row_zeros[static_cast<std::size_t>(i)] < 2) light_rows.push_back(i);
    if (col_zeros[static_cast<std::size_t>(i)] < 2) light_cols.push_back(i);
  }
  if (light_rows.empty() && light_cols.empty()) {
    check.shape = ZeroGraphShape::two_regular;
  } else if (light_rows.size() == 1 && light_cols.size() == 1 &&
             row_zeros[static_cast<std::size_t>(light_rows[0])] == 1 &&
             col_zeros[static_cast<std::size_t>(light_cols[0])] == 1 &&
             check.saturated.at(light_rows[0], light_cols[0]) == 0) {
    check.shape = ZeroGraphShape::one_deficient;
  }

  check.permanent = permanent(matrix);
  check.saturated_permanent = permanent(check.saturated);
  if (check.shape != ZeroGraphShape::other) {
    check.bound = permanent_lower_bound(n, check.shape);
    check.holds = Rational(check.saturated_permanent) >= check.bound && check.permanent >= check.saturated_permanent;
  }
  return check;
}

}  // namespace permemc
