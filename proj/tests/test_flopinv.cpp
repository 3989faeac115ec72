#include "dpf/flopinv.hpp"

#include <doctest.h>

#include <map>
#include <random>

using namespace dpf;

TEST_CASE("strict transform slope") {
    CHECK(strict_transform_slope({Rat(3), Rat(2), {}}) == Rat(3) / 2);
    CHECK(strict_transform_slope({Rat(2), Rat(1), {{Rat(0), Rat(1), 1}}}) == Rat(1));
    CHECK(strict_transform_slope({Rat(1), Rat(1), {{Rat(0), Rat(1), 1}}}) == Rat(1) / 2);
    CHECK_THROWS_AS(strict_transform_slope({Rat(1), Rat(-1), {{Rat(0), Rat(1), 1}}}),
                    std::domain_error);
}

TEST_CASE("slope monotonicity in the intersection counts") {
    std::mt19937_64 rng(43);
    std::uniform_int_distribution<int> d1(1, 6), d0(0, 5);
    for (int iter = 0; iter < 200; ++iter) {
        FlopDatum d;
        d.a = d1(rng);
        d.b = d1(rng);
        d.curves.push_back({Rat(0), Rat(d1(rng)), d0(rng)});
        d.curves.push_back({Rat(0), Rat(d1(rng)), d0(rng)});
        Rat before = strict_transform_slope(d);
        d.curves[0].count += 1 + d0(rng);
        Rat after = strict_transform_slope(d);
        CHECK(after <= before);
    }
}

TEST_CASE("deformation invariants per fibration degree") {
    for (const GoldenCase& g : golden_cases()) {
        CAPTURE(g.id);
        long long expected = -g.degree * g.degree;
        if (g.degree == 8) expected = -16;
        if (g.degree == 9) expected = -9;
        CHECK(deformation_invariant(g) == expected);
    }
    CHECK(deformation_invariant(golden_case("2.3.4")) == -16);
    CHECK(deformation_invariant(golden_case("2.5.5")) == -9);
    CHECK(deformation_invariant(golden_case("2.4.2")) == -1);
}

TEST_CASE("cube forms and their mod-4 behaviour") {
    const FibrationModel m267 = model_for_case(golden_case("2.6.7"));
    const FibrationModel m262 = model_for_case(golden_case("2.6.2"));
    const FibrationModel m239 = model_for_case(golden_case("2.3.9"));
    CHECK(cube_form(m267, 1, 0) == 8);
    CHECK(cube_form(m262, 1, 0) == 16);
    CHECK(cube_form(m239, 1, 0) == 7);
    for (long long a = -3; a <= 3; ++a)
        for (long long b = -3; b <= 3; ++b) {
            CHECK(cube_form(m267, a, b) == 4 * a * a * (2 * a + 3 * b));
            CHECK(cube_form(m262, a, b) == 4 * a * a * (4 * a + 3 * b));
            CHECK(cube_form(m267, a, b) % 4 == 0);
            CHECK(cube_form(m262, a, b) % 4 == 0);
        }
    // the two cube-16 quadric-bundle cases attain values not divisible by 4
    CHECK(cube_form(model_for_case(golden_case("2.3.7")), 1, 0) % 4 != 0);
    CHECK(cube_form(model_for_case(golden_case("2.3.8")), 1, 0) % 4 != 0);
    // the two cube-4 degree-4 cases share the residue class (separated by a
    // non-numeric embedding argument, recorded as golden data)
    const FibrationModel m269 = model_for_case(golden_case("2.6.9"));
    const FibrationModel m2610 = model_for_case(golden_case("2.6.10"));
    for (long long a = -2; a <= 2; ++a)
        for (long long b = -2; b <= 2; ++b)
            CHECK(cube_form(m269, a, b) == cube_form(m2610, a, b));
}

TEST_CASE("cube value via the alias id") {
    CHECK(golden_case("2.8.8").id == "2.7.8");
    CHECK(golden_case("2.8.9").e == 13);
    CHECK_THROWS_AS(golden_case("9.9.9"), std::out_of_range);
}

TEST_CASE("flop count cross-checks") {
    std::map<std::string, long long> got;
    for (const FlopCrossCheck& c : flop_count_crosschecks()) {
        CHECK(c.computed == c.golden);
        got[c.case_id] = c.computed;
    }
    CHECK(got.at("2.3.5") == 4);
    CHECK(got.at("2.3.7") == 8);
    CHECK(got.at("2.5.6") == 9);
    CHECK(got.at("2.5.7") == 27);
    CHECK(got.at("2.6.9") == 16);
    CHECK(got.at("2.6.10") == 16);
    CHECK(got.at("2.7.8") == 8);
    CHECK(got.at("2.7.9") == 13);
}

TEST_CASE("golden e totals per degree") {
    std::map<int, long long> sums;
    for (const GoldenCase& g : golden_cases()) sums[g.degree] += g.e;
    CHECK(sums[8] == 34);  // 0+1+0+2+4+0+8+1+18
    CHECK(sums[9] == 1);
    CHECK(sums[2] == 3);
    CHECK(sums[3] == 41);
    CHECK(sums[4] == 87);
    CHECK(sums[5] == 99);
    CHECK(sums[1] == 1);
}

TEST_CASE("golden case cubes agree with the engine") {
    for (const GoldenCase& g : golden_cases()) {
        CAPTURE(g.id);
        FibrationModel m = model_for_case(g);
        CHECK(anticanonical_cube(m) == Rat(g.cube));
        CHECK(anticanonical(m) == DivisorClass{Rat(g.anti_k.first), Rat(g.anti_k.second)});
    }
}
