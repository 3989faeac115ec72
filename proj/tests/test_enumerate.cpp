#include "dpf/enumerate.hpp"

#include "dpf/errors.hpp"
#include "dpf/golden.hpp"

#include <doctest.h>

using namespace dpf;

namespace {

void check_against_golden(int degree) {
    CandidateTable t = enumerate_degree(degree);
    const auto& golden = golden_candidates(degree);
    REQUIRE(t.rows.size() == golden.size());
    for (size_t i = 0; i < golden.size(); ++i) {
        const FibrationModel& m = t.rows[i].model;
        const GoldenCandidate& g = golden[i];
        CAPTURE(degree);
        CAPTURE(g.row);
        CHECK(t.rows[i].row == g.row);
        CHECK(m.display_weights() == g.weights);
        CHECK(m.twists == g.twists);
        if (g.anti_k)
            CHECK(anticanonical(m) ==
                  DivisorClass{Rat(g.anti_k->first), Rat(g.anti_k->second)});
        if (g.d_curve)
            CHECK(d_class(m) == CurveClass{Rat(g.d_curve->first), Rat(g.d_curve->second)});
        if (g.cube) CHECK(anticanonical_cube(m) == Rat(*g.cube));
    }
}

}  // namespace

TEST_CASE("candidate tables reproduce the golden rows") {
    for (int d : {9, 8, 2, 3, 4, 5, 1}) check_against_golden(d);
}

TEST_CASE("candidate counts per degree") {
    CHECK(enumerate_degree(8).rows.size() == 12);
    CHECK(enumerate_degree(2).rows.size() == 6);
    CHECK(enumerate_degree(3).rows.size() == 10);
    CHECK(enumerate_degree(4).rows.size() == 17);
    CHECK(enumerate_degree(5).rows.size() == 38);
    CHECK(enumerate_degree(1).rows.size() == 4);
    CHECK(enumerate_degree(9).rows.size() == 4);
    CHECK_THROWS_AS(enumerate_degree(7), std::invalid_argument);
}

TEST_CASE("first rows match the printed tables") {
    CandidateTable q = enumerate_degree(8);
    CHECK(q.rows[0].model.upper_weights() == std::vector<int>{1, 1, 1});
    CHECK(q.rows[0].model.twists == std::vector<int>{-2});

    CandidateTable p = enumerate_degree(5);
    CHECK(p.rows[0].model.upper_weights() == std::vector<int>{0, 0, 0, 0, 2});
    CHECK(p.rows[0].model.twists == std::vector<int>{0, 0, 0, 0, 0});
    CHECK(p.rows[1].model.upper_weights() == std::vector<int>{0, 0, 0, 1, 1});
    CHECK(p.rows[1].model.twists == std::vector<int>{0, 0, 0, 0, 0});

    CandidateTable w = enumerate_degree(1);
    std::vector<std::pair<int, int>> ka;
    for (const auto& r : w.rows) ka.emplace_back(r.model.twists[0], r.model.wbundle.a);
    CHECK(ka == std::vector<std::pair<int, int>>{{0, 0}, {0, 1}, {0, 2}, {1, 0}});
}

TEST_CASE("degree-3 twist regimes") {
    // rows fall into the regimes 3*a1 + k = 0, 1, 2 as printed
    CandidateTable t = enumerate_degree(3);
    auto regime = [&](int row) {
        const auto& m = t.rows[row - 1].model;
        return 3 * m.upper_weights()[0] + m.twists[0];
    };
    for (int row : {1, 2, 3, 7, 8}) CHECK(regime(row) == 0);
    for (int row : {4, 5, 9}) CHECK(regime(row) == 1);
    for (int row : {6, 10}) CHECK(regime(row) == 2);
}

TEST_CASE("degree-5 branch partition") {
    CandidateTable t = enumerate_degree(5);
    std::array<int, 3> counts{};
    CHECK(verify_branch_partition(t, &counts));
    CHECK(counts == std::array<int, 3>{2, 14, 22});

    CandidateTable empty;
    empty.degree = 5;
    CHECK(verify_branch_partition(empty));

    // a synthetic tuple outside all three branch identities
    CHECK(branch_index_d5({0, 0, 0, 0, 3}, {0, 0, 0, 0, 0}) == -1);
    CandidateTable bad;
    bad.degree = 5;
    bad.rows.push_back({1, build_model(5, {0, 0, 0, 0, 3}, {0, 0, 0, 0, 0})});
    CHECK_FALSE(verify_branch_partition(bad));

    // perturbing a mid-table row's top weight breaks the constraint system
    FibrationModel perturbed = build_model(5, {0, 0, 0, 1, 2}, {-2, -1, -1, 2, 2});
    CHECK_FALSE(inequality_values(perturbed).admissible);
}

TEST_CASE("box enlargement does not change the candidate set") {
    for (int d : {9, 8, 2, 3, 4, 5, 1}) {
        CandidateTable a = enumerate_degree(d);
        CandidateTable b = enumerate_degree(d, SearchBox::standard().enlarged(2));
        REQUIRE(a.rows.size() == b.rows.size());
        for (size_t i = 0; i < a.rows.size(); ++i) {
            CHECK(a.rows[i].model.display_weights() == b.rows[i].model.display_weights());
            CHECK(a.rows[i].model.twists == b.rows[i].model.twists);
        }
    }
}

TEST_CASE("boundary hits raise an enumeration-incomplete error") {
    // twist boundary: the degree-8 row (1,1,1 | -2) sits on twist_min = -2
    CHECK_THROWS_AS(enumerate_degree(8, SearchBox{6, -2, 2}), ConsistencyError);
    // weight boundary: degree-8 rows carry weight 1 = weight_max
    CHECK_THROWS_AS(enumerate_degree(8, SearchBox{1, -8, 8}), ConsistencyError);
}

TEST_CASE("enumeration is deterministic") {
    CandidateTable a = enumerate_degree(5);
    CandidateTable b = enumerate_degree(5);
    REQUIRE(a.rows.size() == b.rows.size());
    for (size_t i = 0; i < a.rows.size(); ++i) CHECK(a.rows[i].model == b.rows[i].model);
}
