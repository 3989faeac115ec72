#pragma once

#include "dpf/enumerate.hpp"
#include "dpf/golden.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace dpf {

inline constexpr uint64_t kDefaultSeed = 20817;  // documented --seed default

struct ExclusionContext {
    uint64_t seed = kDefaultSeed;
};

/// One mechanically checkable exclusion step.  The predicate returns the
/// evidence string when it fires.
struct ExclusionRule {
    std::string id;
    std::vector<int> degrees;
    std::function<std::optional<std::string>(const FibrationModel&, const ExclusionContext&)>
        predicate;
};

struct ExclusionVerdict {
    int row = 0;
    bool excluded = false;
    std::string rule_id;   // first matching rule (catalog order)
    std::string evidence;  // the violated quantity
};

/// The catalog, in evaluation order.
const std::vector<ExclusionRule>& rule_catalog();

/// Verdicts in table order, no golden cross-check (used by the catalog
/// permutation tests).
std::vector<ExclusionVerdict> apply_rules_with_catalog(const CandidateTable& table,
                                                       const std::vector<ExclusionRule>& catalog,
                                                       const ExclusionContext& ctx);

/// Verdicts in table order; throws ConsistencyError if the excluded rows
/// differ from the embedded golden lists.
std::vector<ExclusionVerdict> apply_rules(const CandidateTable& table,
                                          const ExclusionContext& ctx = {});

struct Survivor {
    std::string case_id;  // theorem.item id
    int table_row = 0;
    FibrationModel model;
};

/// Surviving rows in classification order (descending cube), labelled with
/// their case ids; cross-checked against the golden case data.
std::vector<Survivor> survivors(int degree, const ExclusionContext& ctx = {});

}  // namespace dpf
