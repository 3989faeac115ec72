#pragma once

#include "dpf/exclusions.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dpf {

/// One classification row, as rendered by the CLI.  Serialization is
/// deterministic; parse(emit(x)) = x for the JSON form.
struct OutputRecord {
    int degree = 0;
    std::string case_id;
    std::vector<int> weights;
    std::vector<int> twists;
    DivisorClass anti_k;
    Rat minus_k_cube;
    std::optional<CurveClass> d_class;  // unset for degrees 1 and 9
    std::string verdict;                // "candidate" | "survivor" | "excluded"
    std::optional<std::string> rule_id;
    std::optional<long long> e;
    std::optional<std::string> ray_type;
    std::optional<std::string> contraction;
};

OutputRecord record_for_row(const CandidateRow& row, int degree);

std::vector<OutputRecord> records_from_candidates(const CandidateTable& table);

/// Records in table order with verdicts; survivors carry their theorem id
/// and golden annotations, excluded rows their table id and rule.
std::vector<OutputRecord> records_from_classification(const CandidateTable& table,
                                                      const std::vector<ExclusionVerdict>& verdicts,
                                                      const std::vector<Survivor>& survivors);

std::string render_text(const std::vector<OutputRecord>& records);
std::string render_csv(const std::vector<OutputRecord>& records);
std::string render_json(const std::vector<OutputRecord>& records);

}  // namespace dpf
