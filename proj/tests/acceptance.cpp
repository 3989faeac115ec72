// Acceptance suite: exercises every contract the engine must meet, one
// criterion per line.  All arithmetic is exact, so every comparison is an
// equality; there are no tolerances anywhere.

#include "dpf/errors.hpp"
#include "dpf/flopinv.hpp"
#include "dpf/output.hpp"
#include "dpf/verify.hpp"

#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace dpf;

namespace {

int failures = 0;

void report(int criterion, const std::string& name, bool pass, const std::string& detail = "") {
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << criterion << ": " << name;
    if (!detail.empty()) std::cout << " -- " << detail;
    std::cout << "\n";
    if (!pass) ++failures;
}

void from_check(int criterion, const CheckResult& c) { report(criterion, c.name, c.pass, c.detail); }

CheckResult find_check(const std::vector<CheckResult>& results, const std::string& name) {
    for (const CheckResult& c : results)
        if (c.name == name) return c;
    return {name, false, "check missing", false};
}

// --- criterion 8 helpers ----------------------------------------------------

bool ring_axioms_1000() {
    std::mt19937_64 rng(101);
    std::uniform_int_distribution<int> dn(1, 6), dw(0, 4), dc(-4, 4);
    for (int iter = 0; iter < 1000; ++iter) {
        std::vector<int> upper(dn(rng));
        for (int& w : upper) w = dw(rng);
        BundleSpec b = BundleSpec::from_upper(upper);
        auto rnd = [&] {
            ChowClass r(b.n());
            for (int p = 0; p <= b.n(); ++p)
                for (int q = 0; q <= 1; ++q) r.coeff(p, q) = dc(rng);
            return r;
        };
        ChowClass x = rnd(), y = rnd(), z = rnd();
        if (!(mul(x, y, b) == mul(y, x, b))) return false;
        if (!(mul(mul(x, y, b), z, b) == mul(x, mul(y, z, b), b))) return false;
        if (!(mul(x + y, z, b) == mul(x, z, b) + mul(y, z, b))) return false;
    }
    return true;
}

bool h0_oracle_grid() {
    // all bundles with n <= 5, weights <= 3, |b| <= 6, H-powers 0..4
    std::function<bool(std::vector<int>&)> rec = [&](std::vector<int>& upper) -> bool {
        BundleSpec b = BundleSpec::from_upper(upper);
        for (int a = 0; a <= 4; ++a)
            for (long long bb = -6; bb <= 6; ++bb) {
                long long brute = 0;
                std::vector<int> expo(b.n() + 1, 0);
                std::function<void(int, int)> walk = [&](int var, int left) {
                    if (var == b.n()) {
                        expo[var] = left;
                        long long tw = bb;
                        for (int i = 0; i <= b.n(); ++i)
                            tw += static_cast<long long>(expo[i]) * b.weights[i];
                        for (long long s = 0; s <= tw; ++s) ++brute;
                        return;
                    }
                    for (int e = 0; e <= left; ++e) {
                        expo[var] = e;
                        walk(var + 1, left - e);
                    }
                };
                walk(0, a);
                if (h0(b, a, bb) != brute) return false;
            }
        return true;
    };
    std::vector<int> upper;
    std::function<bool(int, int)> gen = [&](int len, int from) -> bool {
        if (!upper.empty() && !rec(upper)) return false;
        if (len == 5) return true;
        for (int w = from; w <= 3; ++w) {
            upper.push_back(w);
            if (!gen(len + 1, w)) return false;
            upper.pop_back();
        }
        return true;
    };
    return gen(0, 0);
}

bool slope_properties() {
    std::mt19937_64 rng(103);
    std::uniform_int_distribution<int> d1(1, 8), d0(0, 6);
    for (int iter = 0; iter < 500; ++iter) {
        FlopDatum d;
        d.a = d1(rng);
        d.b = d1(rng);
        const int ncurves = 1 + d0(rng) % 3;
        for (int i = 0; i < ncurves; ++i) d.curves.push_back({Rat(0), Rat(d1(rng)), d0(rng)});
        // identity: the formula evaluates to (a + sum n a_i) / (b + sum n b_i)
        Rat num = d.a, den = d.b;
        for (const auto& c : d.curves) {
            num += Rat(c.count) * c.alpha;
            den += Rat(c.count) * c.beta;
        }
        if (strict_transform_slope(d) != num / den) return false;
        // monotonicity: raising any n_i with alpha_i = 0, beta_i > 0 never
        // increases the slope
        Rat before = strict_transform_slope(d);
        d.curves[0].count += 1 + d0(rng);
        if (strict_transform_slope(d) > before) return false;
    }
    return true;
}

bool box_stability() {
    for (int d : {9, 8, 2, 3, 4, 5, 1}) {
        CandidateTable a = enumerate_degree(d);
        CandidateTable b = enumerate_degree(d, SearchBox::standard().enlarged(2));
        if (a.rows.size() != b.rows.size()) return false;
        for (size_t i = 0; i < a.rows.size(); ++i)
            if (!(a.rows[i].model == b.rows[i].model)) return false;
    }
    return true;
}

bool determinism() {
    auto a = full_classification(kDefaultSeed);
    auto b = full_classification(kDefaultSeed);
    return render_text(a) == render_text(b) && render_csv(a) == render_csv(b) &&
           render_json(a) == render_json(b);
}

}  // namespace

int main() {
    try {
        const auto results = run_verification(kDefaultSeed);

        // 1. candidate tables reproduce the printed rows, columns included
        from_check(1, find_check(results, "candidate-tables"));
        // 2. every printed anticanonical cube matches the Chow engine
        from_check(2, find_check(results, "anticanonical-cubes"));
        // 3. exclusion exactness and the 47-case split
        from_check(3, find_check(results, "exclusion-exactness"));
        // 4. the degree-5 auxiliary system and branch partition
        from_check(4, find_check(results, "d5-system"));
        // 5. the documented degree-4 bigness discrepancy
        from_check(5, find_check(results, "big4-discrepancy"));
        // 6. deformation invariants and mod-4 separation
        from_check(6, find_check(results, "deformation-invariants"));
        // 7. mechanical flopping-curve counts
        from_check(7, find_check(results, "flop-crosschecks"));
        // 8. property suites
        report(8, "ring axioms on 1000 randomized triples", ring_axioms_1000());
        report(8, "h0 vs explicit monomial enumeration on the full grid", h0_oracle_grid());
        report(8, "slope identity and monotonicity on randomized data", slope_properties());
        report(8, "box enlargement (+2) stability per degree", box_stability());
        report(8, "byte-identical repeated runs", determinism());
        // 9. the known-inconsistency register is reported without failing
        int notes = 0;
        for (const CheckResult& c : results)
            if (c.informational && c.name == "known-inconsistency") {
                ++notes;
                std::cout << "NOTE " << c.detail << "\n";
            }
        report(9, "known-inconsistency register", notes == 3,
               std::to_string(notes) + " registered ambiguities");
    } catch (const ConsistencyError& e) {
        std::cout << "FAIL consistency: " << e.what() << "\n";
        ++failures;
    } catch (const std::exception& e) {
        std::cout << "FAIL unexpected error: " << e.what() << "\n";
        ++failures;
    }
    if (failures) {
        std::cout << failures << " acceptance failure(s)\n";
        return 1;
    }
    std::cout << "acceptance suite: all criteria satisfied\n";
    return 0;
}
