#include "permemc/report.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "permemc/family_io.hpp"

namespace permemc {

Json to_json(const BigInt& value) {
  if (value >= std::numeric_limits<std::int64_t>::min() && value <= std::numeric_limits<std::int64_t>::max()) {
    return value.convert_to<std::int64_t>();
  }
  return to_string(value);
}

Json to_json(const Rational& value) { return to_string(value); }

Json to_json(const Permutation& sigma) { return sigma.images(); }

Json to_json(std::span<const Cell> cells) {
  Json out = Json::array();
  for (const Cell& c : cells) out.push_back(to_string(c));
  return out;
}

Json to_json(const PartialPermutation& cells) { return to_json(std::span<const Cell>(cells.cells())); }

Json family_json(const Family& family, FamilySpill* spill) {
  Json out;
  out["n"] = family.degree();
  out["size"] = family.size();
  if (family.size() <= kInlineFamilyLimit || spill == nullptr) {
    Json members = Json::array();
    for (const auto& sigma : family) members.push_back(to_json(sigma));
    out["members"] = std::move(members);
  } else {
    const auto path = spill->directory / (spill->stem + "-" + std::to_string(++spill->written) + ".fam");
    save_family(path, family);
    out["file"] = path.string();
  }
  return out;
}

Json to_json(const SpreadReport& report) {
  Json out;
  out["is_spread"] = report.is_spread;
  out["witness"] = report.witness ? to_json(*report.witness) : Json(nullptr);
  out["witness_ratio"] = report.witness ? to_json(report.witness_ratio) : Json(nullptr);
  if (report.base) out["base"] = to_json(*report.base);
  return out;
}

Json to_json(const Spreadness& spreadness) {
  Json out;
  if (spreadness.argmin) {
    out["value"] = spreadness.value;
    out["exact"] = false;
    out["argmin"] = to_json(*spreadness.argmin);
    out["argmin_trace"] = to_json(spreadness.argmin_trace);
  } else {
    out["value"] = "infinity";
    out["argmin"] = nullptr;
  }
  return out;
}

Json to_json(const ApproximationResult& result, FamilySpill* spill) {
  Json out;
  Json supports = Json::array();
  Json branches = Json::array();
  for (std::size_t i = 0; i < result.supports.size(); ++i) {
    supports.push_back(to_json(result.supports[i]));
    Json b;
    b["support"] = to_json(result.supports[i]);
    b["family"] = family_json(result.branches[i], spill);
    branches.push_back(std::move(b));
  }
  out["supports"] = std::move(supports);
  out["branches"] = std::move(branches);
  out["remainder"] = family_json(result.remainder, spill);
  out["stopping_set"] = result.stopping_set ? to_json(*result.stopping_set) : Json(nullptr);
  return out;
}

Json to_json(const ApproximationCheck& check) {
  Json out;
  out["covered"] = check.covered;
  out["branches_partition"] = check.branches_partition;
  out["branches_spread"] = check.branches_spread;
  out["remainder_status"] = std::string(to_string(check.remainder_status));
  out["remainder_size"] = to_json(check.remainder_size);
  out["remainder_limit"] = to_json(check.remainder_limit);
  out["degenerate_support"] = check.degenerate_support;
  out["support_matching"] = check.support_matching ? Json(*check.support_matching) : Json(nullptr);
  return out;
}

Json to_json(const ContainmentEstimate& estimate) {
  Json out;
  out["value"] = estimate.value;
  out["exact"] = estimate.exact ? to_json(*estimate.exact) : Json(nullptr);
  out["ground_size"] = estimate.ground_size;
  if (!estimate.exact) {
    out["standard_error"] = estimate.standard_error;
    out["samples"] = estimate.samples;
    out["seed"] = estimate.seed;
  }
  return out;
}

Json to_json(const Matching& matching) {
  Json members = Json::array();
  for (const auto& sigma : matching.members) members.push_back(to_json(sigma));
  return Json{{"nu", matching.size}, {"witness", std::move(members)}};
}

Json to_json(const Cover& cover) {
  return Json{{"tau", cover.size}, {"witness", to_json(std::span<const Cell>(cover.cells))}};
}

Json to_json(const CosetCertificate& certificate) {
  Json out;
  out["n"] = certificate.degree;
  out["class_count"] = to_json(certificate.class_count);
  Json occupied = Json::array();
  for (const auto& [rep, count] : certificate.occupied) occupied.push_back(Json{{"representative", to_json(rep)}, {"count", count}});
  out["occupied"] = std::move(occupied);
  out["max_count"] = certificate.max_count;
  out["classes_disjoint"] = certificate.classes_disjoint;
  out["certified"] = certificate.certified;
  out["bound"] = to_json(certificate.bound);
  out["consistent_with_matching"] =
      certificate.consistent_with_matching ? Json(*certificate.consistent_with_matching) : Json(nullptr);
  return out;
}

Json to_json(const CrossMatchingFreeClassification& classification) {
  Json out;
  out["alternative"] = std::string(classification.alternative());
  out["containment_witnesses"] = classification.containment_witnesses;
  out["union_size"] = to_json(classification.union_size);
  out["size_threshold"] = to_json(classification.size_threshold);
  out["size_alternative"] = classification.size_alternative;
  return out;
}

Json to_json(const DisjointRepresentativesReport& report) {
  Json out;
  Json probabilities = Json::array();
  for (const auto& p : report.probabilities) probabilities.push_back(to_json(p));
  out["probabilities"] = std::move(probabilities);
  out["threshold"] = to_json(report.threshold);
  out["hypothesis_met"] = report.hypothesis_met;
  if (report.representatives) {
    Json reps = Json::array();
    for (const auto& r : *report.representatives) reps.push_back(to_json(std::span<const Cell>(r)));
    out["representatives"] = std::move(reps);
  } else {
    out["representatives"] = nullptr;
  }
  out["verdict"] = std::string(to_string(report.verdict));
  return out;
}

Json to_json(const SupportBoundReport& report) {
  Json out;
  out["singletons"] = report.singletons;
  out["trivial"] = report.trivial;
  out["support_matching"] = report.support_matching;
  out["matching_free"] = report.matching_free;
  out["maximal"] = report.maximal;
  out["max_support_size"] = report.max_support_size;
  out["lhs"] = to_json(report.lhs);
  out["singleton_union"] = to_json(report.singleton_union);
  out["heaviest_cell"] = to_string(report.heaviest_cell);
  out["heaviest_star"] = to_json(report.heaviest_star);
  out["rhs_main"] = to_json(report.rhs_main);
  out["rhs_corollary"] = to_json(report.rhs_corollary);
  out["main_holds"] = report.main_holds;
  out["corollary_applicable"] = report.corollary_applicable;
  out["corollary_holds"] = report.corollary_holds;
  out["required_spread"] = to_json(report.required_spread);
  out["hypothesis_met"] = report.hypothesis_met;
  return out;
}

Json to_json(const StarCoverReport& report) {
  Json out;
  out["best_cells"] = to_json(std::span<const Cell>(report.best_cells));
  out["best_cover"] = to_json(report.best_cover);
  out["slack"] = to_json(report.slack);
  out["bound"] = to_json(report.bound);
  out["family_size"] = to_json(report.family_size);
  out["holds"] = report.holds;
  return out;
}

Json to_json(const PermanentBoundCheck& check) {
  Json out;
  out["shape"] = std::string(to_string(check.shape));
  out["permanent"] = to_json(check.permanent);
  out["saturated_permanent"] = to_json(check.saturated_permanent);
  out["bound"] = check.shape == ZeroGraphShape::other ? Json(nullptr) : to_json(check.bound);
  out["holds"] = check.holds;
  return out;
}

void SuiteReport::add(Check check) {
  const bool duplicate =
      std::any_of(checks.begin(), checks.end(), [&](const Check& c) { return c.id == check.id; });
  if (duplicate) throw std::logic_error("duplicate check id " + check.id);
  checks.push_back(std::move(check));
}

void SuiteReport::add(std::string id, std::string description, bool ok, std::string lhs, std::string rhs, Json witness) {
  add(Check{std::move(id), std::move(description), ok ? CheckStatus::pass : CheckStatus::fail, std::move(lhs),
            std::move(rhs), std::move(witness)});
}

void SuiteReport::merge(SuiteReport other) {
  for (auto& c : other.checks) add(std::move(c));
}

bool SuiteReport::failed() const {
  return std::any_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == CheckStatus::fail; });
}

std::size_t SuiteReport::count(CheckStatus status) const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [&](const Check& c) { return c.status == status; }));
}

Json to_json(const SuiteReport& report) {
  Json out;
  out["suite"] = report.suite;
  out["seed"] = report.seed;
  out["elapsed_ms"] = report.elapsed_ms;
  Json summary;
  for (auto status : {CheckStatus::pass, CheckStatus::fail, CheckStatus::conditional, CheckStatus::vacuous}) {
    summary[std::string(to_string(status))] = report.count(status);
  }
  out["summary"] = std::move(summary);
  Json checks = Json::array();
  for (const Check& c : report.checks) {
    Json item;
    item["id"] = c.id;
    item["description"] = c.description;
    item["status"] = std::string(to_string(c.status));
    item["lhs"] = c.lhs;
    item["rhs"] = c.rhs;
    item["witness"] = c.witness;
    checks.push_back(std::move(item));
  }
  out["checks"] = std::move(checks);
  return out;
}

}  // namespace permemc
