#pragma once

#include <optional>
#include <string>
#include <vector>

namespace dpf {

/// One row of a candidate table as printed in the reference classification.
/// Columns that the printed table omits are left unset.
struct GoldenCandidate {
    int row = 0;
    std::vector<int> weights;                    // a_1..a_n (degree 1: {a})
    std::vector<int> twists;                     // k data (degree 9: empty)
    std::optional<std::pair<int, int>> anti_k;   // -K_V = (alpha, beta)
    std::optional<std::pair<int, int>> d_curve;  // D = (lambda, sigma)
    std::optional<long long> cube;               // (-K_V)^3
};

/// One of the 47 classification cases with its flop-side reference data.
struct GoldenCase {
    std::string id;       // "2.3.5" style: theorem.item
    int degree = 0;
    int table_row = 0;    // row in the degree's candidate table
    std::vector<int> weights;
    std::vector<int> twists;
    std::pair<int, int> anti_k;
    long long cube = 0;
    long long e = 0;            // number of K-trivial curves on a general member
    std::string e_note;         // structure of the flopping locus, when recorded
    std::string ray_type;       // extremal ray type on the flop V'
    std::string contraction;    // what the flop contracts to
};

const std::vector<GoldenCandidate>& golden_candidates(int degree);
const std::vector<int>& golden_excluded_rows(int degree);
const std::vector<GoldenCase>& golden_cases();
const GoldenCase& golden_case(const std::string& id);  // throws if unknown
std::vector<const GoldenCase*> golden_cases_for_degree(int degree);

/// Candidate-table id prefix per degree ("T1" for 8, ..., "D9" for 9).
std::string table_prefix(int degree);

/// Documented ambiguities in the reference classification that the engine
/// records but does not attempt to repair.
const std::vector<std::string>& known_inconsistencies();

}  // namespace dpf
