#pragma once

#include "dpf/output.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace dpf {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
    bool informational = false;  // reported, never failing (the register)
};

/// Degrees in reporting order.
const std::vector<int>& all_degrees();

/// Full classification records for every degree, in table order.
std::vector<OutputRecord> full_classification(uint64_t seed);

/// The deterministic verification families: candidate tables, cubes,
/// exclusion exactness, the degree-5 system, the degree-4 bigness
/// discrepancy, deformation invariants, flop cross-checks, and the
/// known-inconsistency register (informational).
std::vector<CheckResult> run_verification(uint64_t seed);

/// Compares the engine against an external golden JSON file (the format of
/// `classify --all --format json`).  Throws std::runtime_error when the file
/// cannot be read or parsed.
std::vector<CheckResult> compare_with_golden_file(const std::string& path, uint64_t seed);

}  // namespace dpf
