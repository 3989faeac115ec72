#pragma once

#include "dpf/models.hpp"

#include <array>
#include <vector>

namespace dpf {

/// Finite scan window for candidate generation.  Generous relative to the
/// tables; enumeration asserts that no admissible candidate touches the
/// boundary, so enlarging the box cannot change the result.
struct SearchBox {
    int weight_max = 6;
    int twist_min = -8;
    int twist_max = 8;

    static SearchBox standard() { return SearchBox{}; }
    SearchBox enlarged(int delta) const {
        return SearchBox{weight_max + delta, twist_min - delta, twist_max + delta};
    }
};

struct CandidateRow {
    int row = 0;  // printed row number
    FibrationModel model;
};

struct CandidateTable {
    int degree = 0;
    std::vector<CandidateRow> rows;
};

/// Exhaustively generates the admissible candidates of one degree inside the
/// box, in printed-table order.  Throws ConsistencyError on a boundary hit.
CandidateTable enumerate_degree(int degree, const SearchBox& box = SearchBox::standard());

/// Degree 5: checks that every row satisfies exactly one of the branch
/// identities a4+a5 in {2-k1, 1-k1, -k1}; optionally reports the counts.
bool verify_branch_partition(const CandidateTable& table,
                             std::array<int, 3>* counts = nullptr);

/// Branch index (0,1,2 as above) of a single degree-5 weight/twist pair, or
/// -1 when no branch identity holds.
int branch_index_d5(const std::vector<int>& upper_weights, const std::vector<int>& twists);

}  // namespace dpf
