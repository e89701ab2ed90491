#pragma once

// Reference implementations for the tests. Each one works from the
// definitions on plain vectors, with no shared code paths with the library.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "permemc/numeric.hpp"

namespace oracle {

using Perm = std::vector<int>;  // 1-based images
using Pair = std::pair<int, int>;
using Cells = std::vector<Pair>;

inline std::vector<Perm> all_perms(int n) {
  std::vector<Perm> out;
  Perm p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline bool is_derangement(const Perm& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == static_cast<int>(i) + 1) return false;
  }
  return true;
}

inline std::vector<Perm> all_derangements(int n) {
  std::vector<Perm> out;
  for (auto& p : all_perms(n)) {
    if (is_derangement(p)) out.push_back(p);
  }
  return out;
}

inline bool meet(const Perm& a, const Perm& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == b[i]) return true;
  }
  return false;
}

inline bool holds(const Perm& p, const Cells& x) {
  return std::all_of(x.begin(), x.end(), [&](const Pair& c) { return p[static_cast<std::size_t>(c.first - 1)] == c.second; });
}

inline std::size_t count_containing(const std::vector<Perm>& f, const Cells& x) {
  return static_cast<std::size_t>(std::count_if(f.begin(), f.end(), [&](const Perm& p) { return holds(p, x); }));
}

/// Every partial permutation on [n]^2 with at most `limit` cells.
inline std::vector<Cells> partial_perms(int n, int limit) {
  std::vector<Cells> out;
  Cells current;
  std::vector<bool> col_used(static_cast<std::size_t>(n) + 1, false);
  std::function<void(int)> go = [&](int row) {
    out.push_back(current);
    if (static_cast<int>(current.size()) == limit) return;
    for (int r = row; r <= n; ++r) {
      for (int c = 1; c <= n; ++c) {
        if (col_used[static_cast<std::size_t>(c)]) continue;
        col_used[static_cast<std::size_t>(c)] = true;
        current.push_back({r, c});
        go(r + 1);
        current.pop_back();
        col_used[static_cast<std::size_t>(c)] = false;
      }
    }
  };
  go(1);
  return out;
}

/// Permanent by summing over every permutation.
inline permemc::BigInt permanent(const std::vector<std::vector<int>>& m) {
  const int n = static_cast<int>(m.size());
  permemc::BigInt total = 0;
  Perm p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do {
    long long prod = 1;
    for (int i = 0; i < n && prod != 0; ++i) prod *= m[static_cast<std::size_t>(i)][static_cast<std::size_t>(p[static_cast<std::size_t>(i)])];
    total += prod;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

/// nu by trying every subset in decreasing size order (small families).
inline std::size_t matching_number(const std::vector<Perm>& f) {
  std::size_t best = 0;
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t)> go = [&](std::size_t from) {
    best = std::max(best, chosen.size());
    for (std::size_t i = from; i < f.size(); ++i) {
      bool ok = true;
      for (auto j : chosen) ok = ok && !meet(f[i], f[j]);
      if (!ok) continue;
      chosen.push_back(i);
      go(i + 1);
      chosen.pop_back();
    }
  };
  go(0);
  return best;
}

/// tau by trying every set of k cells, k = 1, 2, ...
inline std::size_t covering_number(const std::vector<Perm>& f, int n) {
  const int cells = n * n;
  for (int k = 1; k <= cells; ++k) {
    std::vector<int> pick(static_cast<std::size_t>(k));
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      const bool covers = std::all_of(f.begin(), f.end(), [&](const Perm& p) {
        return std::any_of(pick.begin(), pick.end(), [&](int c) { return p[static_cast<std::size_t>(c / n)] == c % n + 1; });
      });
      if (covers) return static_cast<std::size_t>(k);
      int i = k - 1;
      while (i >= 0 && pick[static_cast<std::size_t>(i)] == cells - k + i) --i;
      if (i < 0) break;
      ++pick[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return static_cast<std::size_t>(cells);
}

/// min over X of (|F| / |F(X)|)^{1/|X|}, X ranging over partial permutations.
inline double spreadness(const std::vector<Perm>& f, int n) {
  double best = INFINITY;
  for (const auto& x : partial_perms(n, n)) {
    if (x.empty()) continue;
    const std::size_t c = count_containing(f, x);
    if (c == 0) continue;
    best = std::min(best, std::pow(static_cast<double>(f.size()) / static_cast<double>(c), 1.0 / static_cast<double>(x.size())));
  }
  return best;
}

/// Exact r-spreadness over all partial permutations.
inline bool r_spread(const std::vector<Perm>& f, int n, const permemc::Rational& r) {
  const permemc::Rational total(permemc::BigInt(f.size()));
  for (const auto& x : partial_perms(n, n)) {
    if (x.empty()) continue;
    permemc::Rational lhs(permemc::BigInt(count_containing(f, x)));
    for (std::size_t k = 0; k < x.size(); ++k) lhs *= r;
    if (lhs > total) return false;
  }
  return true;
}

/// Pr[some set lies inside W] by summing over every subset W of the ground.
inline permemc::Rational containment(const std::vector<Cells>& sets, const permemc::Rational& p) {
  std::set<Pair> ground_set;
  for (const auto& s : sets) ground_set.insert(s.begin(), s.end());
  const std::vector<Pair> ground(ground_set.begin(), ground_set.end());
  const std::size_t m = ground.size();
  permemc::Rational total = 0;
  for (std::uint64_t w = 0; w < (std::uint64_t{1} << m); ++w) {
    std::set<Pair> chosen;
    for (std::size_t i = 0; i < m; ++i) {
      if (w >> i & 1U) chosen.insert(ground[i]);
    }
    const bool good = std::any_of(sets.begin(), sets.end(), [&](const Cells& s) {
      return std::all_of(s.begin(), s.end(), [&](const Pair& c) { return chosen.count(c) > 0; });
    });
    if (!good) continue;
    permemc::Rational weight = 1;
    for (std::size_t i = 0; i < m; ++i) weight *= (w >> i & 1U) ? p : 1 - p;
    total += weight;
  }
  return total;
}

inline Cells graph(const Perm& p) {
  Cells out;
  for (std::size_t i = 0; i < p.size(); ++i) out.push_back({static_cast<int>(i) + 1, p[i]});
  return out;
}

/// Some choice of one member per family is pairwise disjoint.
inline bool has_cross_matching(const std::vector<std::vector<Perm>>& fams) {
  std::vector<const Perm*> chosen;
  std::function<bool(std::size_t)> go = [&](std::size_t i) {
    if (i == fams.size()) return true;
    for (const auto& p : fams[i]) {
      if (std::any_of(chosen.begin(), chosen.end(), [&](const Perm* q) { return meet(p, *q); })) continue;
      chosen.push_back(&p);
      if (go(i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return go(0);
}

inline permemc::BigInt derangements_by_listing(int n) { return permemc::BigInt(all_derangements(n).size()); }

}  // namespace oracle
