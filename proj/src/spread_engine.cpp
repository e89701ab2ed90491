#include "permemc/spread_engine.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>

#include "permemc/bitset.hpp"
#include "permemc/matching_solver.hpp"

namespace permemc {

namespace {

// A partial permutation on [15]^2 packed as one nibble per row: nibble
// (row - 1) holds the column, 0 when the row is unused.
using Key = std::uint64_t;
constexpr int kKeyRows = 15;

Key encode(std::span<const Cell> cells) {
  Key key = 0;
  for (const Cell& c : cells) {
    if (c.row < 1 || c.row > kKeyRows || c.col < 1 || c.col > kKeyRows) {
      throw CapExceeded("spread tables hold cells in [1, 15]^2, got " + to_string(c));
    }
    key |= Key(c.col) << (4 * (c.row - 1));
  }
  return key;
}

CellSet decode(Key key) {
  CellSet cells;
  for (int row = 1; key != 0; ++row, key >>= 4) {
    if (key & 0xF) cells.push_back({row, static_cast<int>(key & 0xF)});
  }
  return cells;
}

// 0xF in every nibble that is nonzero in key.
Key occupied(Key key) {
  Key any = key | (key >> 1) | (key >> 2) | (key >> 3);
  any &= 0x1111111111111111ULL;
  return any * 0xF;
}

int key_size(Key key) { return std::popcount(occupied(key)) / 4; }

bool key_includes(Key super, Key sub) { return (super & occupied(sub)) == sub; }

struct Entry {
  Key key;
  std::uint64_t count;
  int size;
  CellSet cells;
};

// Every sub-partial-permutation of some residue with its trace size,
// ordered by (size, cells). Key 0 (the empty set) counts all residues.
struct TraceTable {
  std::vector<Entry> entries;
  std::uint64_t total = 0;
};

TraceTable build_table(std::span<const CellSet> residues) {
  std::unordered_map<Key, std::uint64_t> counts;
  std::vector<Key> codes;
  for (const CellSet& residue : residues) {
    codes.clear();
    for (const Cell& c : residue) codes.push_back(encode(std::span<const Cell>(&c, 1)));
    const std::size_t m = codes.size();
    if (m > 20) throw CapExceeded("spread tables hold residues of at most 20 cells");
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
      Key key = 0;
      for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) key |= codes[static_cast<std::size_t>(std::countr_zero(rest))];
      ++counts[key];
    }
  }
  TraceTable table;
  table.total = residues.size();
  table.entries.reserve(counts.size());
  for (const auto& [key, count] : counts) table.entries.push_back({key, count, key_size(key), decode(key)});
  std::sort(table.entries.begin(), table.entries.end(), [](const Entry& a, const Entry& b) {
    if (a.size != b.size) return a.size < b.size;
    return a.cells < b.cells;
  });
  return table;
}

std::vector<CellSet> distinct_residues(const ResidueFamily& family) {
  std::vector<CellSet> out;
  out.reserve(family.size());
  for (const auto& pp : family) out.push_back(pp.cells());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<CellSet> graphs(const Family& family) {
  std::vector<CellSet> out;
  out.reserve(family.size());
  for (const auto& sigma : family) out.push_back(sigma.graph());
  return out;
}

// Integer powers of a positive rational's numerator and denominator.
struct RatioPowers {
  std::vector<BigInt> num;
  std::vector<BigInt> den;

  RatioPowers(const Rational& r, int max_exponent) {
    num.assign(static_cast<std::size_t>(max_exponent) + 1, BigInt(1));
    den.assign(static_cast<std::size_t>(max_exponent) + 1, BigInt(1));
    for (int k = 1; k <= max_exponent; ++k) {
      num[k] = num[k - 1] * boost::multiprecision::numerator(r);
      den[k] = den[k - 1] * boost::multiprecision::denominator(r);
    }
  }
};

void require_positive(const Rational& r, const char* what) {
  if (r <= 0) throw std::invalid_argument(std::string(what) + " must be positive");
}

int max_size(const TraceTable& table) { return table.entries.empty() ? 0 : table.entries.back().size; }

// r-spreadness of the trace below `base`: every X strictly above it must
// satisfy count(X) r^{|X|-|A|} <= count(A).
SpreadReport check_above(const TraceTable& table, const Entry& base, const RatioPowers& pw) {
  SpreadReport report;
  const Entry* worst = nullptr;
  for (const Entry& e : table.entries) {
    if (e.size <= base.size || !key_includes(e.key, base.key)) continue;
    const auto k = static_cast<std::size_t>(e.size - base.size);
    if (BigInt(e.count) * pw.num[k] <= BigInt(base.count) * pw.den[k]) continue;
    if (worst != nullptr) {
      const auto kw = static_cast<std::size_t>(worst->size - base.size);
      if (BigInt(e.count) * pw.num[k] * pw.den[kw] <= BigInt(worst->count) * pw.num[kw] * pw.den[k]) continue;
    }
    worst = &e;
  }
  if (worst != nullptr) {
    report.is_spread = false;
    CellSet rest;
    const CellSet& below = base.cells;
    std::set_difference(worst->cells.begin(), worst->cells.end(), below.begin(), below.end(), std::back_inserter(rest));
    report.witness = PartialPermutation(std::move(rest));
    report.witness_ratio = Rational(BigInt(worst->count), BigInt(base.count));
  }
  return report;
}

SpreadReport r_spread_of(std::span<const CellSet> residues, const Rational& r) {
  if (residues.empty()) throw std::invalid_argument("is_r_spread: empty family");
  require_positive(r, "r");
  const TraceTable table = build_table(residues);
  const RatioPowers pw(r, max_size(table));
  return check_above(table, table.entries.front(), pw);
}

Spreadness spreadness_of(std::span<const CellSet> residues) {
  if (residues.empty()) throw std::invalid_argument("exact_spreadness: empty family");
  const TraceTable table = build_table(residues);
  const BigInt total(table.total);
  const double log_total = std::log(static_cast<double>(table.total));
  Spreadness out;
  out.value = std::numeric_limits<double>::infinity();
  const Entry* best = nullptr;
  double best_log = std::numeric_limits<double>::infinity();
  for (const Entry& e : table.entries) {
    if (e.size == 0) continue;
    const double log_value = (log_total - std::log(static_cast<double>(e.count))) / e.size;
    if (best != nullptr && log_value > best_log + 1e-9) continue;
    if (best != nullptr) {
      // (N/c)^{1/k} < (N/cb)^{1/kb}  iff  N^{kb} cb^{k} < N^{k} c^{kb}
      using boost::multiprecision::pow;
      const auto k = static_cast<unsigned>(e.size);
      const auto kb = static_cast<unsigned>(best->size);
      const BigInt lhs = pow(total, kb) * pow(BigInt(best->count), k);
      const BigInt rhs = pow(total, k) * pow(BigInt(e.count), kb);
      if (!(lhs < rhs)) continue;
    }
    best = &e;
    best_log = log_value;
  }
  if (best != nullptr) {
    out.value = std::exp(best_log);
    out.argmin = PartialPermutation(best->cells);
    out.argmin_trace = BigInt(best->count);
  }
  return out;
}

PartialPermutation ratio_set_of(std::span<const CellSet> residues, const Rational& rho) {
  if (residues.empty()) throw std::invalid_argument("max_ratio_set: empty family");
  require_positive(rho, "rho");
  const TraceTable table = build_table(residues);
  const RatioPowers pw(rho, max_size(table));
  const BigInt total(table.total);
  // |F(X)| >= rho^{-|X|} |F|  iff  count p^k >= N q^k  for rho = p/q
  auto qualifies = [&](const Entry& e) {
    const auto k = static_cast<std::size_t>(e.size);
    return BigInt(e.count) * pw.num[k] >= total * pw.den[k];
  };
  const Entry* current = &table.entries.front();
  while (true) {
    // In (size, cells) order the first qualifying strict superset is the
    // smallest-cell one-step extension whenever any exists.
    const Entry* next = nullptr;
    for (const Entry& e : table.entries) {
      if (e.size > current->size && key_includes(e.key, current->key) && qualifies(e)) {
        next = &e;
        break;
      }
    }
    if (next == nullptr) return PartialPermutation(current->cells);
    current = next;
  }
}

}  // namespace

std::string_view to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::conditional: return "conditional";
    case CheckStatus::vacuous: return "vacuous";
  }
  return "unknown";
}

SpreadReport is_r_spread(const ResidueFamily& family, const Rational& r) {
  return r_spread_of(distinct_residues(family), r);
}

SpreadReport is_r_spread(const Family& family, const Rational& r) { return r_spread_of(graphs(family), r); }

Spreadness exact_spreadness(const ResidueFamily& family) { return spreadness_of(distinct_residues(family)); }

Spreadness exact_spreadness(const Family& family) { return spreadness_of(graphs(family)); }

SpreadReport is_rq_spread(const Family& family, const Rational& r, int q) {
  if (family.empty()) throw std::invalid_argument("is_rq_spread: empty family");
  require_positive(r, "r");
  if (q < 0) throw std::invalid_argument("is_rq_spread: q must be non-negative");
  const TraceTable table = build_table(graphs(family));
  const RatioPowers pw(r, max_size(table));
  for (const Entry& base : table.entries) {
    if (base.size > q) break;
    SpreadReport report = check_above(table, base, pw);
    if (!report.is_spread) {
      report.base = PartialPermutation(base.cells);
      return report;
    }
  }
  return {};
}

PartialPermutation max_ratio_set(const ResidueFamily& family, const Rational& rho) {
  return ratio_set_of(distinct_residues(family), rho);
}

PartialPermutation max_ratio_set(const Family& family, const Rational& rho) { return ratio_set_of(graphs(family), rho); }

ApproximationResult spread_approximate(const Family& family, const Family& ambient, const Rational& r, int q) {
  require_positive(r, "r");
  if (q < 1) throw std::invalid_argument("spread_approximate: q must be at least 1");
  if (!family.empty() && family.degree() != ambient.degree()) throw DimensionMismatch("spread_approximate: F and A differ in degree");
  if (!is_subfamily(family, ambient)) throw std::invalid_argument("spread_approximate: F is not contained in A");

  const Rational half = r / 2;
  ApproximationResult result;
  result.remainder = Family(family.degree());
  Family current = family;
  while (!current.empty()) {
    PartialPermutation support = max_ratio_set(current, half);
    if (support.size() > static_cast<std::size_t>(q)) {
      result.stopping_set = std::move(support);
      result.remainder = std::move(current);
      return result;
    }
    Family branch = subfamily_containing(current, support.cells());
    current = family_difference(current, branch);
    result.supports.push_back(std::move(support));
    result.branches.push_back(std::move(branch));
  }
  return result;
}

ApproximationCheck verify_approximation(const ApproximationResult& result, const Family& family, const Family& ambient,
                                        const Rational& r, int q) {
  require_positive(r, "r");
  if (result.supports.size() != result.branches.size()) {
    throw std::invalid_argument("verify_approximation: supports and branches are not aligned");
  }
  if (!is_subfamily(result.remainder, family)) throw std::invalid_argument("verify_approximation: F' is not within F");

  ApproximationCheck check;
  const Family covered = family_difference(family, result.remainder);

  check.covered = std::all_of(covered.begin(), covered.end(), [&](const Permutation& sigma) {
    return ambient.contains(sigma) && std::any_of(result.supports.begin(), result.supports.end(),
                                                  [&](const PartialPermutation& s) { return sigma.contains(s.cells()); });
  });

  Family joined(family.degree());
  std::size_t total = 0;
  for (const Family& branch : result.branches) {
    joined = family_union(joined, branch);
    total += branch.size();
  }
  check.branches_partition = total == joined.size() && joined == covered;

  const Rational half = r / 2;
  check.branches_spread = true;
  for (std::size_t i = 0; i < result.supports.size(); ++i) {
    const Family& branch = result.branches[i];
    const CellSet& support = result.supports[i].cells();
    const bool inside = std::all_of(branch.begin(), branch.end(), [&](const Permutation& sigma) { return sigma.contains(support); });
    if (branch.empty() || !inside || !is_r_spread(trace(branch, support), half).is_spread) {
      check.branches_spread = false;
      break;
    }
  }

  check.remainder_size = BigInt(result.remainder.size());
  check.remainder_limit = Rational(BigInt(ambient.size())) / pow(Rational(2), static_cast<unsigned>(q + 1));
  const bool within = Rational(check.remainder_size) <= check.remainder_limit;
  if (result.remainder.empty()) {
    check.remainder_status = CheckStatus::pass;
  } else if (result.stopping_set) {
    // The bound uses r-spreadness of A only at the stopping set S_m:
    // |F'| <= (r/2)^{|S_m|} |A(S_m)| <= 2^{-|S_m|} |A|.
    const CellSet& stop = result.stopping_set->cells();
    const auto hits = static_cast<std::size_t>(
        std::count_if(ambient.begin(), ambient.end(), [&](const Permutation& sigma) { return sigma.contains(stop); }));
    const bool hypothesis = Rational(BigInt(hits)) * pow(r, static_cast<unsigned>(stop.size())) <= Rational(BigInt(ambient.size()));
    if (hypothesis) {
      check.remainder_status = within ? CheckStatus::pass : CheckStatus::fail;
    } else {
      check.remainder_status = CheckStatus::conditional;
    }
  } else {
    check.remainder_status = CheckStatus::conditional;
  }

  check.degenerate_support =
      std::any_of(result.supports.begin(), result.supports.end(), [](const PartialPermutation& s) { return s.empty(); });
  if (!check.degenerate_support) {
    std::vector<CellSet> sets;
    for (const auto& s : result.supports) sets.push_back(s.cells());
    check.support_matching = matching_number(std::span<const CellSet>(sets)).size;
  }
  return check;
}

namespace {

void require_probability(const Rational& p) {
  if (p < 0 || p > 1) throw std::invalid_argument("p must lie in [0, 1]");
}

CellSet ground_of(std::span<const CellSet> sets) {
  CellSet ground;
  for (const CellSet& s : sets) ground.insert(ground.end(), s.begin(), s.end());
  return normalize(std::move(ground));
}

std::size_t ground_index(const CellSet& ground, Cell c) {
  return static_cast<std::size_t>(std::lower_bound(ground.begin(), ground.end(), c) - ground.begin());
}

Rational exhaustive_probability(std::span<const CellSet> sets, const CellSet& ground, const Rational& p) {
  const std::size_t m = ground.size();
  if (m > kExactGroundCap) {
    throw CapExceeded("exact containment probability needs at most " + std::to_string(kExactGroundCap) + " cells, got " +
                      std::to_string(m));
  }
  std::vector<std::uint8_t> good(std::size_t{1} << m, 0);
  for (const CellSet& s : sets) {
    std::uint32_t mask = 0;
    for (const Cell& c : s) mask |= std::uint32_t{1} << ground_index(ground, c);
    good[mask] = 1;
  }
  // up-closure: W is good iff it contains a generator
  for (std::size_t bit = 0; bit < m; ++bit) {
    const std::size_t b = std::size_t{1} << bit;
    for (std::size_t w = 0; w < good.size(); ++w) {
      if (w & b) good[w] |= good[w ^ b];
    }
  }
  std::vector<std::uint64_t> by_size(m + 1, 0);
  for (std::size_t w = 0; w < good.size(); ++w) {
    if (good[w]) ++by_size[static_cast<std::size_t>(std::popcount(w))];
  }
  const Rational q = 1 - p;
  Rational total = 0;
  for (std::size_t k = 0; k <= m; ++k) {
    if (by_size[k] == 0) continue;
    total += Rational(BigInt(by_size[k])) * pow(p, static_cast<unsigned>(k)) * pow(q, static_cast<unsigned>(m - k));
  }
  return total;
}

Rational inclusion_exclusion_probability(std::span<const CellSet> sets, const CellSet& ground, const Rational& p) {
  if (sets.size() > kInclusionExclusionCap) {
    throw CapExceeded("inclusion-exclusion handles at most " + std::to_string(kInclusionExclusionCap) + " sets");
  }
  std::vector<DynamicBitset> masks;
  for (const CellSet& s : sets) {
    DynamicBitset mask(ground.size());
    for (const Cell& c : s) mask.set(ground_index(ground, c));
    masks.push_back(std::move(mask));
  }
  std::vector<Rational> powers(ground.size() + 1, Rational(1));
  for (std::size_t k = 1; k <= ground.size(); ++k) powers[k] = powers[k - 1] * p;

  Rational total = 0;
  // sum over nonempty subfamilies T of (-1)^{|T|+1} p^{|union T|}
  auto visit = [&](auto&& self, std::size_t next, const DynamicBitset& joined, std::size_t chosen) -> void {
    for (std::size_t i = next; i < masks.size(); ++i) {
      const DynamicBitset grown = joined | masks[i];
      const Rational& term = powers[grown.count()];
      if ((chosen + 1) % 2 == 1) {
        total += term;
      } else {
        total -= term;
      }
      self(self, i + 1, grown, chosen + 1);
    }
  };
  visit(visit, 0, DynamicBitset(ground.size()), 0);
  return total;
}

std::vector<CellSet> distinct_sets(std::span<const CellSet> sets) {
  std::vector<CellSet> out;
  for (const CellSet& s : sets) out.push_back(normalize(s));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::uint64_t splitmix(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

ContainmentEstimate containment_probability(std::span<const CellSet> sets, const Rational& p, ContainmentMethod method) {
  require_probability(p);
  const std::vector<CellSet> distinct = distinct_sets(sets);
  const CellSet ground = ground_of(distinct);
  ContainmentEstimate out;
  out.ground_size = ground.size();
  Rational value = 0;
  if (!distinct.empty()) {
    value = method == ContainmentMethod::exhaustive ? exhaustive_probability(distinct, ground, p)
                                                    : inclusion_exclusion_probability(distinct, ground, p);
  }
  out.value = to_double(value);
  out.exact = std::move(value);
  return out;
}

ContainmentEstimate containment_probability(const Family& family, const Rational& p, ContainmentMethod method) {
  const std::vector<CellSet> sets = graphs(family);
  return containment_probability(std::span<const CellSet>(sets), p, method);
}

ContainmentEstimate containment_probability_monte_carlo(std::span<const CellSet> sets, const Rational& p,
                                                        std::uint64_t samples, std::uint64_t seed) {
  require_probability(p);
  if (samples == 0) throw std::invalid_argument("Monte Carlo needs at least one sample");
  const std::vector<CellSet> distinct = distinct_sets(sets);
  const CellSet ground = ground_of(distinct);
  std::vector<DynamicBitset> masks;
  for (const CellSet& s : distinct) {
    DynamicBitset mask(ground.size());
    for (const Cell& c : s) mask.set(ground_index(ground, c));
    masks.push_back(std::move(mask));
  }
  // cell drawn iff u < threshold for u uniform on 64 bits; p = 1 draws all
  const bool always = p == 1;
  const auto threshold = always ? std::uint64_t{0}
                                : static_cast<std::uint64_t>(floor(p * Rational(BigInt(1) << 64)));

  auto run = [&](std::uint64_t begin, std::uint64_t end) {
    std::uint64_t hits = 0;
    DynamicBitset w(ground.size());
    for (std::uint64_t i = begin; i < end; ++i) {
      const std::uint64_t stream = splitmix(seed ^ splitmix(i));
      for (std::size_t j = 0; j < ground.size(); ++j) {
        const bool in = always || splitmix(stream + (j + 1) * 0x9E3779B97F4A7C15ULL) < threshold;
        if (in) {
          w.set(j);
        } else {
          w.reset(j);
        }
      }
      if (std::any_of(masks.begin(), masks.end(), [&](const DynamicBitset& m) { return m.is_subset_of(w); })) ++hits;
    }
    return hits;
  };

  const std::uint64_t workers = std::clamp<std::uint64_t>(samples / 4096, 1, worker_count());
  std::vector<std::uint64_t> hits(workers, 0);
  {
    std::vector<std::jthread> pool;
    const std::uint64_t chunk = samples / workers;
    for (std::uint64_t t = 0; t < workers; ++t) {
      const std::uint64_t begin = t * chunk;
      const std::uint64_t end = t + 1 == workers ? samples : begin + chunk;
      pool.emplace_back([&, t, begin, end] { hits[t] = run(begin, end); });
    }
  }
  std::uint64_t total = 0;
  for (auto h : hits) total += h;

  ContainmentEstimate out;
  out.ground_size = ground.size();
  out.samples = samples;
  out.seed = seed;
  const double k = static_cast<double>(samples);
  out.value = static_cast<double>(total) / k;
  out.standard_error = std::sqrt(out.value * (1.0 - out.value) / k);
  return out;
}

ContainmentEstimate containment_probability_monte_carlo(const Family& family, const Rational& p, std::uint64_t samples,
                                                        std::uint64_t seed) {
  const std::vector<CellSet> sets = graphs(family);
  return containment_probability_monte_carlo(std::span<const CellSet>(sets), p, samples, seed);
}

SpreadLemmaBound spread_lemma_bound(double k, double r, double beta, double delta) {
  if (!(k >= 1)) throw std::invalid_argument("spread_lemma_bound: k must be at least 1");
  const double product = r * delta;
  if (!(product > 2)) return {};
  const double value = 1.0 - std::pow(2.0 / std::log2(product), beta) * k;
  if (!(value > 0)) return {true, value};
  return {false, value};
}

}  // namespace permemc
