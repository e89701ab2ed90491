#include "permemc/family.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>
#include <string>

#include "permemc/numeric.hpp"

namespace permemc {

Family::Family(int n, std::vector<Permutation> members) : n_(n), members_(std::move(members)) {
  for (const auto& m : members_) {
    if (m.degree() != n_) throw DimensionMismatch("family member of degree " + std::to_string(m.degree()) + " in a family of degree " + std::to_string(n_));
  }
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool Family::contains(const Permutation& sigma) const {
  return std::binary_search(members_.begin(), members_.end(), sigma);
}

std::optional<std::size_t> Family::index_of(const Permutation& sigma) const {
  const auto it = std::lower_bound(members_.begin(), members_.end(), sigma);
  if (it == members_.end() || *it != sigma) return std::nullopt;
  return static_cast<std::size_t>(it - members_.begin());
}

ResidueFamily trace(const Family& family, std::span<const Cell> cells) {
  const CellSet x = normalize(CellSet(cells.begin(), cells.end()));
  ResidueFamily out;
  for (const auto& sigma : family) {
    if (!sigma.contains(x)) continue;
    CellSet residue;
    residue.reserve(static_cast<std::size_t>(sigma.degree()) - x.size());
    for (const Cell& c : sigma.graph()) {
      if (!std::binary_search(x.begin(), x.end(), c)) residue.push_back(c);
    }
    out.push_back(*PartialPermutation::try_make(std::move(residue)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Family subfamily_containing(const Family& family, std::span<const Cell> cells) {
  std::vector<Permutation> members;
  for (const auto& sigma : family) {
    if (sigma.contains(cells)) members.push_back(sigma);
  }
  return Family(family.degree(), std::move(members));
}

Family subfamily_containing_any(const Family& family, std::span<const CellSet> sets) {
  std::vector<Permutation> members;
  for (const auto& sigma : family) {
    if (std::any_of(sets.begin(), sets.end(), [&](const CellSet& s) { return sigma.contains(s); })) {
      members.push_back(sigma);
    }
  }
  return Family(family.degree(), std::move(members));
}

ResidueFamily as_residues(const Family& family) {
  ResidueFamily out;
  out.reserve(family.size());
  for (const auto& sigma : family) out.push_back(sigma.as_partial());
  return out;
}

Family family_union(const Family& a, const Family& b) {
  if (a.degree() != b.degree()) throw DimensionMismatch("family_union: degrees differ");
  std::vector<Permutation> members;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(members));
  return Family(a.degree(), std::move(members));
}

Family family_difference(const Family& a, const Family& b) {
  if (a.degree() != b.degree() && !b.empty()) throw DimensionMismatch("family_difference: degrees differ");
  std::vector<Permutation> members;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(members));
  return Family(a.degree(), std::move(members));
}

bool is_subfamily(const Family& sub, const Family& super) {
  if (sub.empty()) return true;
  if (sub.degree() != super.degree()) return false;
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

void for_each_completion(int n, const PartialPermutation& fixed,
                         const std::function<void(const Permutation&)>& visit) {
  if (n < 1 || n > kMaxDegree) throw std::invalid_argument("degree out of range");
  std::vector<int> image(static_cast<std::size_t>(n), 0);
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  for (const Cell& c : fixed.cells()) {
    if (c.row > n || c.col > n) throw DimensionMismatch("cell " + to_string(c) + " outside [" + std::to_string(n) + "]^2");
    image[static_cast<std::size_t>(c.row - 1)] = c.col;
    used[static_cast<std::size_t>(c.col)] = true;
  }
  std::vector<std::size_t> free_rows;
  std::vector<int> free_values;
  for (int i = 1; i <= n; ++i) {
    if (image[static_cast<std::size_t>(i - 1)] == 0) free_rows.push_back(static_cast<std::size_t>(i - 1));
    if (!used[static_cast<std::size_t>(i)]) free_values.push_back(i);
  }
  // free_values starts sorted; next_permutation walks completions in
  // lexicographic order of the full image sequence.
  do {
    for (std::size_t k = 0; k < free_rows.size(); ++k) image[free_rows[k]] = free_values[k];
    visit(Permutation(image));
  } while (std::next_permutation(free_values.begin(), free_values.end()));
}

Family enumerate(int n, EnumerationKind kind, const std::optional<Permutation>& sigma) {
  if (n < 1) throw std::invalid_argument("enumerate: n must be positive");
  if (n > kEnumerationCap) {
    throw CapExceeded("enumerate: n = " + std::to_string(n) + " exceeds the enumeration cap " + std::to_string(kEnumerationCap));
  }
  if (kind == EnumerationKind::double_derangements) {
    if (!sigma) throw std::invalid_argument("enumerate: double_derangements needs sigma");
    if (sigma->degree() != n) throw DimensionMismatch("enumerate: sigma has the wrong degree");
  }
  std::vector<Permutation> members;
  for_each_completion(n, PartialPermutation{}, [&](const Permutation& p) {
    switch (kind) {
      case EnumerationKind::all:
        members.push_back(p);
        break;
      case EnumerationKind::derangements:
        if (p.is_derangement()) members.push_back(p);
        break;
      case EnumerationKind::double_derangements:
        if (p.is_derangement() && !intersects(p, *sigma)) members.push_back(p);
        break;
    }
  });
  return Family(n, std::move(members));
}

Family all_permutations(int n) { return enumerate(n, EnumerationKind::all); }
Family derangements(int n) { return enumerate(n, EnumerationKind::derangements); }
Family double_derangements(const Permutation& sigma) {
  return enumerate(sigma.degree(), EnumerationKind::double_derangements, sigma);
}

}  // namespace permemc
