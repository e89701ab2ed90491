#pragma once

#include <cstdint>
#include <span>
#include <string_view>

#include "permemc/report.hpp"

namespace permemc {

/// counts, spread, approx, solvers, extremal, lemma16 (in run order).
std::span<const std::string_view> suite_names();

/// Runs one suite, or every suite for "all". Randomized checks draw from a
/// std::mt19937_64 seeded with `seed`, so reports are reproducible apart
/// from elapsed_ms. Throws std::invalid_argument for an unknown name.
SuiteReport run_suite(std::string_view name, std::uint64_t seed = 0);

}  // namespace permemc
