#include "permemc/extremal.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "permemc/numeric.hpp"

namespace permemc {

std::string_view to_string(StarShape shape) {
  switch (shape) {
    case StarShape::single: return "single";
    case StarShape::common_row: return "common_row";
    case StarShape::common_column: return "common_column";
    case StarShape::mixed: return "mixed";
  }
  return "mixed";
}

namespace {

void check_center(int n, Cell center, StarKind kind) {
  if (n < 1 || n > kEnumerationCap) throw CapExceeded("star: n must be in [1, " + std::to_string(kEnumerationCap) + "]");
  if (center.row < 1 || center.row > n || center.col < 1 || center.col > n) {
    throw DimensionMismatch("star center " + to_string(center) + " outside [" + std::to_string(n) + "]^2");
  }
  if (kind == StarKind::derangement && center.row == center.col) {
    throw std::invalid_argument("derangement star needs an off-diagonal center, got " + to_string(center));
  }
}

}  // namespace

Family make_star(int n, Cell center, StarKind kind) {
  check_center(n, center, kind);
  std::vector<Permutation> members;
  for_each_completion(n, PartialPermutation({center}), [&](const Permutation& p) {
    if (kind == StarKind::full || p.is_derangement()) members.push_back(p);
  });
  return Family(n, std::move(members));
}

StarUnion make_star_union(int n, std::span<const Cell> centers, StarKind kind) {
  CellSet sorted(centers.begin(), centers.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("star union: duplicate centers");
  }
  StarUnion result{Family(n), StarShape::single, true};
  std::vector<Family> stars;
  for (const Cell& c : centers) {
    stars.push_back(make_star(n, c, kind));
    result.family = family_union(result.family, stars.back());
  }
  std::size_t total = 0;
  for (const auto& s : stars) total += s.size();
  result.pairwise_disjoint = total == result.family.size();

  if (centers.size() > 1) {
    const bool same_row = std::all_of(centers.begin(), centers.end(), [&](Cell c) { return c.row == centers[0].row; });
    const bool same_col = std::all_of(centers.begin(), centers.end(), [&](Cell c) { return c.col == centers[0].col; });
    result.shape = same_row ? StarShape::common_row : same_col ? StarShape::common_column : StarShape::mixed;
  }
  return result;
}

Family make_hm(const Permutation& sigma) {
  const int n = sigma.degree();
  if (n < 2 || sigma(1) == 1) throw std::invalid_argument("make_hm: sigma(1) must differ from 1");
  if (n > kEnumerationCap) throw CapExceeded("make_hm: n exceeds the enumeration cap");
  std::vector<Permutation> members{sigma};
  for_each_completion(n, PartialPermutation({Cell{1, 1}}), [&](const Permutation& p) {
    if (intersects(p, sigma)) members.push_back(p);
  });
  return Family(n, std::move(members));
}

Family make_hm_star_union(int s, const Permutation& sigma) {
  const int n = sigma.degree();
  if (s < 2) throw std::invalid_argument("make_hm_star_union: s must be at least 2");
  if (s - 1 > n) throw std::invalid_argument("make_hm_star_union: s - 1 must not exceed n");
  if (sigma(1) <= s - 1) throw std::invalid_argument("make_hm_star_union: sigma(1) must lie outside [s-1]");
  Family result = make_hm(sigma);
  for (int i = 2; i <= s - 1; ++i) result = family_union(result, make_star(n, Cell{1, i}));
  return result;
}

Family apply_isomorphism(const Permutation& rho, const Family& family, const Permutation& pi) {
  if (rho.degree() != pi.degree() || (!family.empty() && family.degree() != rho.degree())) {
    throw DimensionMismatch("apply_isomorphism: degrees differ");
  }
  std::vector<Permutation> members;
  members.reserve(family.size());
  for (const auto& sigma : family) members.push_back(compose(rho, compose(sigma, pi)));
  return Family(rho.degree(), std::move(members));
}

}  // namespace permemc
