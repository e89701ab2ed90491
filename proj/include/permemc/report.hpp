#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "permemc/count_kernels.hpp"
#include "permemc/matching_solver.hpp"
#include "permemc/spread_engine.hpp"

namespace permemc {

using Json = nlohmann::ordered_json;

/// Families up to this size are written inline; larger ones go to a file.
inline constexpr std::size_t kInlineFamilyLimit = 1000;

/// Where oversized families are spilled: <directory>/<stem>-<k>.fam.
struct FamilySpill {
  std::filesystem::path directory = ".";
  std::string stem = "family";
  int written = 0;
};

/// A number when it fits in 64 bits, otherwise its decimal string.
Json to_json(const BigInt& value);
/// "p/q" (or "p" for integers).
Json to_json(const Rational& value);
Json to_json(const Permutation& sigma);  ///< image sequence
Json to_json(std::span<const Cell> cells);  ///< ["row:col", ...]
Json to_json(const PartialPermutation& cells);
Json family_json(const Family& family, FamilySpill* spill = nullptr);

Json to_json(const SpreadReport& report);
Json to_json(const Spreadness& spreadness);
Json to_json(const ApproximationResult& result, FamilySpill* spill = nullptr);
Json to_json(const ApproximationCheck& check);
Json to_json(const ContainmentEstimate& estimate);
Json to_json(const Matching& matching);
Json to_json(const Cover& cover);
Json to_json(const CosetCertificate& certificate);
Json to_json(const CrossMatchingFreeClassification& classification);
Json to_json(const DisjointRepresentativesReport& report);
Json to_json(const SupportBoundReport& report);
Json to_json(const StarCoverReport& report);
Json to_json(const PermanentBoundCheck& check);

struct Check {
  std::string id;
  std::string description;
  CheckStatus status = CheckStatus::pass;
  std::string lhs;
  std::string rhs;
  Json witness;
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;
  std::uint64_t seed = 0;
  std::int64_t elapsed_ms = 0;

  /// Throws std::logic_error on a duplicate id.
  void add(Check check);
  void add(std::string id, std::string description, bool ok, std::string lhs = {}, std::string rhs = {},
           Json witness = nullptr);
  void merge(SuiteReport other);
  bool failed() const;
  std::size_t count(CheckStatus status) const;
};

Json to_json(const SuiteReport& report);

}  // namespace permemc
