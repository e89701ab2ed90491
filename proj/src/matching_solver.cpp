#include "permemc/matching_solver.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "permemc/count_kernels.hpp"
#include "permemc/spread_engine.hpp"

namespace permemc {

namespace {

// Number of colors in a greedy coloring of `candidates` (index order); an
// upper bound on the clique number of the induced subgraph.
std::size_t color_bound(std::span<const DynamicBitset> adjacency, DynamicBitset candidates) {
  std::size_t colors = 0;
  while (candidates.any()) {
    ++colors;
    DynamicBitset open = candidates;
    for (std::size_t v = open.find_first(); v < open.size(); v = open.find_next(v + 1)) {
      candidates.reset(v);
      open.subtract(adjacency[v]);
    }
  }
  return colors;
}

struct CliqueSearch {
  std::span<const DynamicBitset> adjacency;
  std::size_t upper;
  std::size_t best_size;
  std::vector<std::size_t> best;
  std::vector<std::size_t> current;
  bool done = false;

  // Cliques are visited as increasing vertex sequences in lexicographic
  // preorder, and only strict improvements are recorded, so the first
  // maximum clique kept is the lexicographically least one.
  void expand(DynamicBitset candidates) {
    if (current.size() > best_size) {
      best_size = current.size();
      best = current;
      if (best_size >= upper) {
        done = true;
        return;
      }
    }
    if (candidates.none()) return;
    if (current.size() + candidates.count() <= best_size) return;
    if (current.size() + color_bound(adjacency, candidates) <= best_size) return;
    for (std::size_t v = candidates.find_first(); v < candidates.size(); v = candidates.find_next(v + 1)) {
      if (current.size() + candidates.count() <= best_size) return;
      current.push_back(v);
      expand(candidates & adjacency[v]);
      current.pop_back();
      if (done) return;
      candidates.reset(v);
    }
  }
};

bool disjoint_members(const Permutation& a, const Permutation& b) { return !intersects(a, b); }
bool disjoint_members(const CellSet& a, const CellSet& b) { return disjoint(a, b); }

template <typename T>
std::vector<DynamicBitset> disjointness_graph(std::span<const T> items) {
  std::vector<DynamicBitset> adjacency(items.size(), DynamicBitset(items.size()));
  for (std::size_t i = 0; i < items.size(); ++i) {
    for (std::size_t j = i + 1; j < items.size(); ++j) {
      if (disjoint_members(items[i], items[j])) {
        adjacency[i].set(j);
        adjacency[j].set(i);
      }
    }
  }
  return adjacency;
}

// Disjoint members take distinct values in every row.
std::size_t distinct_image_bound(const Family& family) {
  std::size_t bound = family.size();
  for (int row = 1; row <= family.degree(); ++row) {
    std::vector<bool> seen(static_cast<std::size_t>(family.degree()) + 1, false);
    std::size_t distinct = 0;
    for (const auto& sigma : family) {
      if (!seen[static_cast<std::size_t>(sigma(row))]) {
        seen[static_cast<std::size_t>(sigma(row))] = true;
        ++distinct;
      }
    }
    bound = std::min(bound, distinct);
  }
  return bound;
}

std::size_t largest_coset_class(const Family& family) {
  std::map<Permutation, std::size_t> counts;
  std::size_t best = 0;
  for (const auto& sigma : family) best = std::max(best, ++counts[coset_representative(sigma)]);
  return best;
}

std::size_t cell_index(Cell c, int n) { return static_cast<std::size_t>((c.row - 1) * n + (c.col - 1)); }
Cell cell_at(std::size_t index, int n) {
  return {static_cast<int>(index) / n + 1, static_cast<int>(index) % n + 1};
}

struct CoverSearch {
  const Family& family;
  int n;
  std::vector<DynamicBitset> hit;  // hit[cell] = members through the cell

  // Pairwise disjoint members each need their own cell.
  std::size_t disjoint_lower_bound(const DynamicBitset& uncovered) const {
    std::vector<std::size_t> picked;
    for (std::size_t m = uncovered.find_first(); m < uncovered.size(); m = uncovered.find_next(m + 1)) {
      const bool free = std::none_of(picked.begin(), picked.end(),
                                     [&](std::size_t p) { return intersects(family[m], family[p]); });
      if (free) picked.push_back(m);
    }
    return picked.size();
  }

  // Some set of at most `budget` cells, all with index >= min_index, covers
  // every member in `uncovered`.
  bool exists(const DynamicBitset& uncovered, std::size_t budget, std::size_t min_index) const {
    if (uncovered.none()) return true;
    if (budget == 0) return false;
    if (disjoint_lower_bound(uncovered) > budget) return false;
    const Permutation& first = family[uncovered.find_first()];
    for (int row = 1; row <= n; ++row) {
      const std::size_t c = cell_index({row, first(row)}, n);
      if (c < min_index) continue;
      DynamicBitset rest = uncovered;
      rest.subtract(hit[c]);
      if (exists(rest, budget - 1, min_index)) return true;
    }
    return false;
  }
};

template <typename T>
std::optional<std::vector<T>> find_cross_matching(std::span<const std::vector<T>> families) {
  const std::size_t t = families.size();
  if (std::any_of(families.begin(), families.end(), [](const auto& f) { return f.empty(); })) return std::nullopt;
  std::vector<std::size_t> order(t);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return families[a].size() < families[b].size(); });
  std::vector<const T*> chosen(t, nullptr);
  auto search = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == t) return true;
    const std::size_t f = order[depth];
    for (const T& candidate : families[f]) {
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) ok = disjoint_members(candidate, *chosen[order[d]]);
      if (!ok) continue;
      chosen[f] = &candidate;
      if (self(self, depth + 1)) return true;
    }
    chosen[f] = nullptr;
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  std::vector<T> witness;
  for (const T* item : chosen) witness.push_back(*item);
  return witness;
}

std::vector<CellSet> distinct_cell_sets(std::span<const CellSet> sets) {
  std::vector<CellSet> out;
  for (const CellSet& s : sets) out.push_back(normalize(s));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<std::size_t> maximum_clique(std::span<const DynamicBitset> adjacency, std::size_t lower_bound,
                                        std::size_t upper_bound) {
  const std::size_t n = adjacency.size();
  if (n == 0) return {};
  CliqueSearch search{adjacency, upper_bound, lower_bound == 0 ? 0 : lower_bound - 1, {}, {}};
  DynamicBitset all(n);
  for (std::size_t v = 0; v < n; ++v) all.set(v);
  search.expand(all);
  return search.best;
}

Matching matching_number(const Family& family) {
  Matching out;
  if (family.empty()) return out;
  const auto adjacency = disjointness_graph(family.members());
  const auto clique =
      maximum_clique(adjacency, largest_coset_class(family), distinct_image_bound(family));
  out.size = clique.size();
  for (std::size_t v : clique) out.members.push_back(family[v]);
  return out;
}

SetMatching matching_number(std::span<const CellSet> sets) {
  SetMatching out;
  const std::vector<CellSet> distinct = distinct_cell_sets(sets);
  if (distinct.empty()) return out;
  const auto adjacency = disjointness_graph(std::span<const CellSet>(distinct));
  const auto clique = maximum_clique(adjacency, 1);
  out.size = clique.size();
  for (std::size_t v : clique) out.members.push_back(distinct[v]);
  return out;
}

Cover covering_number(const Family& family) {
  if (family.empty()) throw std::invalid_argument("covering_number: empty family");
  const int n = family.degree();
  CoverSearch search{family, n, {}};
  const auto cells = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  search.hit.assign(cells, DynamicBitset(family.size()));
  for (std::size_t m = 0; m < family.size(); ++m) {
    for (int row = 1; row <= n; ++row) search.hit[cell_index({row, family[m](row)}, n)].set(m);
  }
  DynamicBitset all(family.size());
  for (std::size_t m = 0; m < family.size(); ++m) all.set(m);

  std::size_t size = matching_number(family).size;
  while (!search.exists(all, size, 0)) ++size;

  // Lexicographically least cover of that size, one cell at a time.
  Cover out;
  out.size = size;
  DynamicBitset uncovered = all;
  std::size_t min_index = 0;
  for (std::size_t slot = 0; slot < size; ++slot) {
    for (std::size_t c = min_index; c < cells; ++c) {
      DynamicBitset rest = uncovered;
      rest.subtract(search.hit[c]);
      if (search.exists(rest, size - slot - 1, c + 1)) {
        out.cells.push_back(cell_at(c, n));
        uncovered = std::move(rest);
        min_index = c + 1;
        break;
      }
    }
  }
  return out;
}

Permutation coset_representative(const Permutation& sigma) {
  const int n = sigma.degree();
  const std::vector<int> images = sigma.images();
  const auto start = static_cast<std::size_t>(std::find(images.begin(), images.end(), 1) - images.begin());
  std::vector<int> rotated(images.size());
  for (std::size_t k = 0; k < images.size(); ++k) rotated[k] = images[(start + k) % static_cast<std::size_t>(n)];
  return Permutation(rotated);
}

std::vector<Family> coset_partition(int n) {
  if (n < 1) throw std::invalid_argument("coset_partition: n must be positive");
  if (n > kEnumerationCap) throw CapExceeded("coset_partition: n above the enumeration cap");
  std::vector<Family> classes;
  for_each_completion(n, PartialPermutation(CellSet{{1, 1}}), [&](const Permutation& rep) {
    const std::vector<int> images = rep.images();
    std::vector<Permutation> members;
    for (int k = 0; k < n; ++k) {
      std::vector<int> rotated(images.size());
      for (int i = 0; i < n; ++i) rotated[static_cast<std::size_t>(i)] = images[static_cast<std::size_t>((i + k) % n)];
      members.emplace_back(rotated);
    }
    classes.emplace_back(n, std::move(members));
  });
  return classes;
}

CosetCertificate coset_certificate(const Family& family, int s, std::optional<std::size_t> known_matching) {
  if (s < 1) throw std::invalid_argument("coset_certificate: s must be positive");
  const int n = family.degree();
  if (n > kEnumerationCap) throw CapExceeded("coset_certificate: n above the enumeration cap");
  CosetCertificate out;
  out.degree = n;
  out.class_count = n >= 1 ? factorial(static_cast<unsigned>(n - 1)) : BigInt(1);

  std::map<Permutation, std::vector<Permutation>> classes;
  for (const auto& sigma : family) classes[coset_representative(sigma)].push_back(sigma);
  for (const auto& [rep, members] : classes) {
    out.occupied.emplace_back(rep, members.size());
    out.max_count = std::max(out.max_count, members.size());
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        if (intersects(members[i], members[j])) out.classes_disjoint = false;
      }
    }
  }
  out.certified = out.max_count <= static_cast<std::size_t>(s - 1);
  out.bound = BigInt(s - 1) * out.class_count;
  if (known_matching && *known_matching < static_cast<std::size_t>(s)) out.consistent_with_matching = out.certified;
  return out;
}

std::optional<std::vector<Permutation>> cross_matching(std::span<const Family> families) {
  std::vector<std::vector<Permutation>> lists;
  for (const Family& f : families) {
    if (!f.empty() && !families.front().empty() && f.degree() != families.front().degree()) {
      throw DimensionMismatch("cross_matching: families differ in degree");
    }
    lists.emplace_back(f.begin(), f.end());
  }
  return find_cross_matching(std::span<const std::vector<Permutation>>(lists));
}

std::optional<std::vector<CellSet>> cross_matching(std::span<const std::vector<CellSet>> families) {
  std::vector<std::vector<CellSet>> lists;
  for (const auto& f : families) lists.push_back(distinct_cell_sets(f));
  return find_cross_matching(std::span<const std::vector<CellSet>>(lists));
}

std::string_view CrossMatchingFreeClassification::alternative() const {
  if (containment_alternative() && size_alternative) return "both";
  if (containment_alternative()) return "containment";
  if (size_alternative) return "size";
  return "neither";
}

CrossMatchingFreeClassification classify_cross_matching_free(std::span<const Family> families,
                                                             std::span<const Cell> centers) {
  const std::size_t t = families.size();
  if (t == 0 || centers.size() != t) throw std::invalid_argument("classify: need one center per family");
  const int n = families.front().degree();
  for (std::size_t i = 0; i < t; ++i) {
    const Cell c = centers[i];
    if (c.row == c.col) throw std::invalid_argument("classify: center " + to_string(c) + " is diagonal");
    if (c.row < 1 || c.row > n || c.col < 1 || c.col > n) throw std::invalid_argument("classify: center out of range");
    for (std::size_t j = 0; j < i; ++j) {
      if (centers[j] == c) throw std::invalid_argument("classify: centers must be distinct");
    }
    if (families[i].degree() != n) throw DimensionMismatch("classify: families differ in degree");
    for (const auto& sigma : families[i]) {
      if (!sigma.is_derangement() || !sigma.contains(c)) {
        throw std::invalid_argument("classify: member " + sigma.to_string() + " is outside D_n[" + to_string(c) + "]");
      }
    }
  }
  if (cross_matching(families)) throw std::invalid_argument("classify: the families have a cross matching");

  Family joined(n);
  for (const Family& f : families) joined = family_union(joined, f);

  CrossMatchingFreeClassification out;
  for (std::size_t j = 0; j < t; ++j) {
    const bool inside = std::all_of(joined.begin(), joined.end(), [&](const Permutation& sigma) {
      for (std::size_t i = 0; i < t; ++i) {
        if (i != j && sigma.contains(centers[i])) return true;
      }
      return false;
    });
    if (inside) out.containment_witnesses.push_back(j + 1);
  }
  out.union_size = BigInt(joined.size());
  out.size_threshold = (Rational(BigInt(t)) - Rational(101, 100)) * Rational(pointed_derangement_count(n));
  out.size_alternative = Rational(out.union_size) <= out.size_threshold;
  return out;
}

DisjointRepresentativesReport check_disjoint_representatives(std::span<const std::vector<CellSet>> bases, int s,
                                                             const Rational& p) {
  if (s < 1 || bases.size() != static_cast<std::size_t>(s)) {
    throw std::invalid_argument("check_disjoint_representatives: need exactly s generator families");
  }
  CellSet ground;
  for (const auto& basis : bases) {
    for (const CellSet& g : basis) ground.insert(ground.end(), g.begin(), g.end());
  }
  ground = normalize(std::move(ground));
  if (ground.size() > kExactGroundCap) {
    throw CapExceeded("check_disjoint_representatives: ground set of " + std::to_string(ground.size()) +
                      " cells exceeds " + std::to_string(kExactGroundCap));
  }
  DisjointRepresentativesReport out;
  out.threshold = Rational(3 * s) * p;
  out.hypothesis_met = true;
  for (const auto& basis : bases) {
    Rational prob = *containment_probability(std::span<const CellSet>(basis), p).exact;
    if (prob < out.threshold) out.hypothesis_met = false;
    out.probabilities.push_back(std::move(prob));
  }
  out.representatives = cross_matching(bases);
  if (!out.hypothesis_met) {
    out.verdict = DisjointRepresentativesReport::Verdict::vacuous;
  } else {
    out.verdict = out.representatives ? DisjointRepresentativesReport::Verdict::held
                                      : DisjointRepresentativesReport::Verdict::violated;
  }
  return out;
}

std::string_view to_string(DisjointRepresentativesReport::Verdict verdict) {
  switch (verdict) {
    case DisjointRepresentativesReport::Verdict::held: return "held";
    case DisjointRepresentativesReport::Verdict::violated: return "violated";
    case DisjointRepresentativesReport::Verdict::vacuous: return "vacuous";
  }
  return "unknown";
}

SupportBoundReport support_bound_sides(const Family& ambient, std::span<const CellSet> supports, const Rational& eps, int s) {
  if (s < 2) throw std::invalid_argument("support_bound_sides: s must be at least 2");
  const std::vector<CellSet> family = distinct_cell_sets(supports);
  const int n = ambient.degree();
  SupportBoundReport out;

  std::vector<CellSet> singletons;
  for (const CellSet& a : family) {
    if (a.size() == 1) singletons.push_back(a);
    out.max_support_size = std::max(out.max_support_size, a.size());
  }
  out.singletons = singletons.size();
  out.trivial = singletons.size() == family.size();
  out.support_matching = matching_number(std::span<const CellSet>(family)).size;
  out.matching_free = out.support_matching < static_cast<std::size_t>(s);

  // Maximal: replacing any A by a proper subset B creates an s-matching.
  out.maximal = out.matching_free;
  for (std::size_t i = 0; i < family.size() && out.maximal; ++i) {
    const CellSet& a = family[i];
    for (std::uint64_t mask = 0; mask + 1 < (std::uint64_t{1} << a.size()) && out.maximal; ++mask) {
      CellSet b;
      for (std::size_t k = 0; k < a.size(); ++k) {
        if (mask >> k & 1U) b.push_back(a[k]);
      }
      std::vector<CellSet> replaced;
      for (std::size_t j = 0; j < family.size(); ++j) {
        if (j != i) replaced.push_back(family[j]);
      }
      replaced.push_back(std::move(b));
      if (matching_number(std::span<const CellSet>(replaced)).size < static_cast<std::size_t>(s)) out.maximal = false;
    }
  }

  out.lhs = BigInt(subfamily_containing_any(ambient, family).size());
  out.singleton_union = BigInt(subfamily_containing_any(ambient, singletons).size());
  std::size_t heaviest = 0;
  out.heaviest_cell = {1, 1};
  for (int row = 1; row <= n; ++row) {
    for (int col = 1; col <= n; ++col) {
      const Cell c{row, col};
      const auto weight = static_cast<std::size_t>(
          std::count_if(ambient.begin(), ambient.end(), [&](const Permutation& sigma) { return sigma.contains(c); }));
      if (weight > heaviest) {
        heaviest = weight;
        out.heaviest_cell = c;
      }
    }
  }
  out.heaviest_star = BigInt(heaviest);
  const Rational weight(out.heaviest_star);
  out.rhs_main = Rational(out.singleton_union) + eps * Rational(s - 1 - static_cast<int>(out.singletons)) * weight;
  out.rhs_corollary = (Rational(s - 2) + eps) * weight;
  const Rational lhs(out.lhs);
  out.main_holds = lhs <= out.rhs_main;
  out.corollary_applicable = !out.trivial && out.matching_free;
  out.corollary_holds = lhs <= out.rhs_corollary;

  // Smallest integer r with eps r >= 8e(s-1)q, e bounded above.
  const Rational needed = Rational(8) * euler_upper_bound() * Rational(s - 1) * Rational(BigInt(out.max_support_size)) / eps;
  BigInt r = floor(needed);
  if (Rational(r) < needed) r += 1;
  if (r < 1) r = 1;
  out.required_spread = Rational(r);
  out.hypothesis_met = eps > 0 && eps <= 1 && !ambient.empty() && is_rq_spread(ambient, out.required_spread, 1).is_spread;
  return out;
}

StarCoverReport star_cover_sides(const Family& family, const Family& ambient, int s) {
  if (s < 1) throw std::invalid_argument("star_cover_sides: s must be positive");
  if (!family.empty() && family.degree() != ambient.degree()) throw DimensionMismatch("star_cover_sides: degrees differ");
  if (!is_subfamily(family, ambient)) throw std::invalid_argument("star_cover_sides: F is not contained in X");
  const int n = ambient.degree();
  const auto cells = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  std::vector<DynamicBitset> stars(cells, DynamicBitset(ambient.size()));
  for (std::size_t m = 0; m < ambient.size(); ++m) {
    for (int row = 1; row <= n; ++row) stars[cell_index({row, ambient[m](row)}, n)].set(m);
  }
  std::vector<std::size_t> weight(cells);
  for (std::size_t c = 0; c < cells; ++c) weight[c] = stars[c].count();
  const std::size_t pick = std::min(static_cast<std::size_t>(s - 1), cells);

  std::vector<std::size_t> chosen;
  std::vector<std::size_t> best_cells;
  std::size_t best = 0;
  bool found = false;
  std::vector<std::size_t> scratch;
  // Cell sets in lexicographic order; only strict improvements are kept.
  auto search = [&](auto&& self, std::size_t from, const DynamicBitset& covered, std::size_t count) -> void {
    if (chosen.size() == pick) {
      if (!found || count > best) {
        best = count;
        best_cells = chosen;
        found = true;
      }
      return;
    }
    const std::size_t remaining = pick - chosen.size();
    if (cells - from < remaining) return;
    if (found) {
      scratch.assign(weight.begin() + static_cast<std::ptrdiff_t>(from), weight.end());
      std::partial_sort(scratch.begin(), scratch.begin() + static_cast<std::ptrdiff_t>(remaining), scratch.end(),
                        std::greater<>());
      const std::size_t bound =
          count + std::accumulate(scratch.begin(), scratch.begin() + static_cast<std::ptrdiff_t>(remaining), std::size_t{0});
      if (bound <= best) return;
    }
    for (std::size_t c = from; c + remaining <= cells; ++c) {
      const DynamicBitset grown = covered | stars[c];
      chosen.push_back(c);
      self(self, c + 1, grown, grown.count());
      chosen.pop_back();
    }
  };
  search(search, 0, DynamicBitset(ambient.size()), 0);

  StarCoverReport out;
  for (std::size_t c : best_cells) out.best_cells.push_back(cell_at(c, n));
  out.best_cover = BigInt(best);
  out.slack = n > 0 ? Rational(BigInt(ambient.size())) / pow(Rational(n), 4) : Rational(0);
  out.bound = Rational(out.best_cover) + out.slack;
  out.family_size = BigInt(family.size());
  out.holds = Rational(out.family_size) <= out.bound;
  return out;
}

}  // namespace permemc
