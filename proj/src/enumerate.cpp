#include "dpf/enumerate.hpp"

#include "dpf/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace dpf {

namespace {

// All weakly increasing tuples of the given length with entries in [0, hi].
std::vector<std::vector<int>> sorted_tuples(int length, int lo, int hi) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(length);
    std::function<void(int, int)> rec = [&](int idx, int from) {
        if (idx == length) {
            out.push_back(cur);
            return;
        }
        for (int v = from; v <= hi; ++v) {
            cur[idx] = v;
            rec(idx + 1, v);
        }
    };
    rec(0, lo);
    return out;
}

// Nef-equality family filter, applied before tabling for degrees 8 and 4.
// When the nef pairing vanishes, D is K-trivial; it moves in a positive
// dimensional family exactly when the subbundle defining D does, i.e. when
// the smallest dropped weight equals the largest kept one.
bool nef_family_drop_hypersurface(const std::vector<int>& u, long long nef) {
    const int n = static_cast<int>(u.size());  // upper weights a_1..a_n
    return nef == 0 && u[n - 2] == (n >= 3 ? u[n - 3] : 0);
}

bool touches(int v, const SearchBox& box, bool is_weight) {
    if (is_weight) return v >= box.weight_max;
    return v <= box.twist_min || v >= box.twist_max;
}

void assert_interior(const FibrationModel& m, const SearchBox& box, int degree) {
    bool hit = false;
    for (int w : m.upper_weights()) hit |= touches(w, box, true);
    for (int k : m.twists) hit |= touches(k, box, false);
    if (hit) {
        std::ostringstream os;
        os << "enumeration incomplete: degree-" << degree
           << " admissible candidate touches the search box boundary";
        throw ConsistencyError(os.str());
    }
}

long long vec_sum(const std::vector<int>& v) {
    return std::accumulate(v.begin(), v.end(), 0LL);
}

struct Raw {
    std::vector<int> a;
    std::vector<int> k;
    long long cube = 0;
};

// Common tail: build models, check box interior, cross-check the fast
// integer filter against the intrinsic constraint report, number the rows.
CandidateTable finish(int degree, std::vector<Raw> raws, const SearchBox& box) {
    CandidateTable table;
    table.degree = degree;
    int row = 1;
    for (Raw& r : raws) {
        FibrationModel m = build_model(degree, r.a, r.k);
        assert_interior(m, box, degree);
        ConstraintReport rep = inequality_values(m);
        if (!rep.admissible)
            throw ConsistencyError("enumerate: fast filter admitted a candidate the intrinsic "
                                   "constraint system rejects (degree " + std::to_string(degree) + ")");
        if (r.cube != 0 && anticanonical_cube(m) != r.cube)
            throw ConsistencyError("enumerate: closed-form cube disagrees with Chow cube");
        table.rows.push_back({row++, std::move(m)});
    }
    return table;
}

bool lex_less(const std::vector<int>& x, const std::vector<int>& y) {
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

// Reverse-lexicographic comparison (top weight first), used by the degree-5
// tables which list weight tuples in decreasing rev-lex order.
bool revlex_less(const std::vector<int>& x, const std::vector<int>& y) {
    return std::lexicographical_compare(x.rbegin(), x.rend(), y.rbegin(), y.rend());
}

CandidateTable enum_hypersurface(int degree, const SearchBox& box) {
    // degrees 8 (V in |2H+kF|) and 3 (V in |3H+kF|) on P[0,a1,a2,a3]
    std::vector<Raw> raws;
    for (const auto& a : sorted_tuples(3, 0, box.weight_max)) {
        const long long s = vec_sum(a);
        for (int k = box.twist_min; k <= box.twist_max; ++k) {
            long long nef, eff, cube;
            if (degree == 8) {
                nef = 2 * (a[0] + 2 - a[1] - a[2]);
                eff = 2 * a[0] + k;
                cube = 8 * (6 - s - 2 * k);
            } else {
                nef = 6 - 3 * a[1] - 3 * a[2] - 2 * k;
                eff = 3 * a[0] + k;
                cube = 2 * (9 - 3 * s - 4 * k);
            }
            if (nef < 0 || eff < 0 || cube <= 0) continue;
            if (degree == 8 && nef_family_drop_hypersurface(a, nef)) continue;
            // Degree 3 drops members forced singular along s0 before tabling
            // (order >= 2 vanishing: no monomial with x0-exponent >= 2).
            if (degree == 3 && k < 0 && a[2] + k < 0) continue;
            raws.push_back({a, {k}, cube});
        }
    }
    std::sort(raws.begin(), raws.end(), [](const Raw& x, const Raw& y) {
        if (x.cube != y.cube) return x.cube > y.cube;
        if (x.a != y.a) return lex_less(x.a, y.a);
        return x.k < y.k;
    });
    return finish(degree, std::move(raws), box);
}

CandidateTable enum_degree2(const SearchBox& box) {
    std::vector<Raw> raws;
    for (const auto& a : sorted_tuples(2, 0, box.weight_max)) {
        for (int k = box.twist_min; k <= box.twist_max; ++k) {
            const long long nef = 2 - a[0] - a[1] - k;
            const long long cube = 2 * (6 - 2 * a[0] - 2 * a[1] - 3 * k);
            if (nef < 0 || cube <= 0) continue;
            if (a[1] + 2 * k < 0) continue;  // branch divisor smooth along s0
            // nef equality with a movable minimal section: family of
            // K-trivial curves, dropped before tabling.
            if (nef == 0 && a[0] == 0) continue;
            raws.push_back({a, {k}, cube});
        }
    }
    std::sort(raws.begin(), raws.end(), [](const Raw& x, const Raw& y) {
        if (x.cube != y.cube) return x.cube > y.cube;
        if (x.a != y.a) return lex_less(x.a, y.a);
        return x.k < y.k;
    });
    return finish(2, std::move(raws), box);
}

CandidateTable enum_degree4(const SearchBox& box) {
    std::vector<Raw> raws;
    for (const auto& a : sorted_tuples(4, 0, box.weight_max)) {
        const long long s = vec_sum(a);
        for (int k1 = box.twist_min; k1 <= box.twist_max; ++k1) {
            if (a[3] + k1 < 0) continue;
            for (int k2 = k1; k2 <= box.twist_max; ++k2) {
                if (a[3] + k2 < 0) continue;
                const long long kb = k1 + k2;
                const long long nef = 2 * (4 - kb - 2 * (a[2] + a[3]));
                const long long eff = 2 * (2 * (a[0] + a[1]) + kb);
                const long long cube = 24 - 8 * s - 10 * kb;
                if (nef < 0 || eff < 0 || cube <= 0) continue;
                if (nef == 0 && a[2] == a[1]) continue;  // K-trivial family
                raws.push_back({a, {k1, k2}, cube});
            }
        }
    }
    std::sort(raws.begin(), raws.end(), [](const Raw& x, const Raw& y) {
        if (x.cube != y.cube) return x.cube > y.cube;
        if (x.a != y.a) return lex_less(x.a, y.a);
        return lex_less(x.k, y.k);
    });
    return finish(4, std::move(raws), box);
}

CandidateTable enum_degree5(const SearchBox& box) {
    std::vector<Raw> raws;
    const auto weight_tuples = sorted_tuples(5, 0, box.weight_max);
    std::vector<int> k(5);
    std::function<void(int, int)> scan_k = [&](int idx, int from) {
        if (idx < 5) {
            for (int v = from; v <= box.twist_max; ++v) {
                k[idx] = v;
                scan_k(idx + 1, v);
            }
            return;
        }
        const long long s = vec_sum(k);
        if (s % 2 != 0) return;
        const long long t = s / 2;
        if (t > 2) return;                       // bigness needs 30 - 12t > 0
        if (t - k[0] - k[1] < 0) return;         // w12 >= 0
        const long long w14 = t - k[0] - k[3];
        const long long w23 = t - k[1] - k[2];
        const long long w25 = t - k[1] - k[4];
        const long long w34 = t - k[2] - k[3];
        const long long w35 = t - k[2] - k[4];
        const long long w45 = t - k[3] - k[4];
        for (const auto& a : weight_tuples) {
            const long long sa = vec_sum(a);
            if (30 - 12 * t - 10 * sa <= 0) continue;                 // big
            if (10 - 5 * (a[3] + a[4]) - 2 * t < 0) continue;         // nef
            if (5 * (a[0] + a[1] + a[2]) + 3 * t < 0) continue;       // eff
            if (a[4] + w35 < 0) continue;
            if (a[1] + w14 < 0) continue;
            if (a[3] + w25 < 0) continue;
            if (a[3] + w34 < 0) continue;
            if (w14 < 0 && a[4] + w45 < 0) continue;
            if (a[0] + w14 < 0) continue;
            if (a[0] + w23 < 0) continue;
            raws.push_back({a, k, 30 - 12 * t - 10 * sa});
        }
    };
    scan_k(0, box.twist_min);
    std::sort(raws.begin(), raws.end(), [](const Raw& x, const Raw& y) {
        const int bx = branch_index_d5(x.a, x.k);
        const int by = branch_index_d5(y.a, y.k);
        if (bx != by) return bx < by;
        if (x.a != y.a) return revlex_less(y.a, x.a);  // weights descending
        return lex_less(x.k, y.k);
    });
    for (const Raw& r : raws)
        if (branch_index_d5(r.a, r.k) < 0)
            throw ConsistencyError("degree 5: admissible tuple outside the three branches");
    return finish(5, std::move(raws), box);
}

CandidateTable enum_degree1(const SearchBox& box) {
    std::vector<Raw> raws;
    for (int kk = box.twist_min; kk <= box.twist_max; ++kk) {
        for (int a = 0; a <= box.weight_max; ++a) {
            if (a + kk < 0) continue;
            if (a + 6 * kk < 0 && kk < 0) continue;
            if (2 - a - 2 * kk < 0) continue;  // section-nef bound 2(1-k) >= a
            if (6 - 2 * a - 4 * kk <= 0) continue;
            raws.push_back({{a}, {kk}, 6 - 2 * a - 4 * kk});
        }
    }
    // printed order: twist ascending, then weight ascending
    return finish(1, std::move(raws), box);
}

CandidateTable enum_degree9(const SearchBox& box) {
    std::vector<Raw> raws;
    for (const auto& a : sorted_tuples(2, 0, box.weight_max)) {
        if (2 - a[0] - a[1] < 0) continue;
        raws.push_back({a, {}, 54});
    }
    std::sort(raws.begin(), raws.end(),
              [](const Raw& x, const Raw& y) { return lex_less(x.a, y.a); });
    return finish(9, std::move(raws), box);
}

}  // namespace

int branch_index_d5(const std::vector<int>& u, const std::vector<int>& k) {
    const long long a45 = u[3] + u[4];
    if (a45 == 2 - k[0]) return 0;
    if (a45 == -k[0]) return 1;
    if (a45 == 1 - k[0]) return 2;
    return -1;
}

bool verify_branch_partition(const CandidateTable& table, std::array<int, 3>* counts) {
    std::array<int, 3> local{0, 0, 0};
    bool ok = true;
    for (const CandidateRow& r : table.rows) {
        const int b = branch_index_d5(r.model.upper_weights(), r.model.twists);
        if (b < 0)
            ok = false;
        else
            ++local[b];
    }
    if (counts) *counts = local;
    return ok;
}

CandidateTable enumerate_degree(int degree, const SearchBox& box) {
    switch (degree) {
        case 8:
        case 3: return enum_hypersurface(degree, box);
        case 2: return enum_degree2(box);
        case 4: return enum_degree4(box);
        case 5: return enum_degree5(box);
        case 1: return enum_degree1(box);
        case 9: return enum_degree9(box);
        default:
            throw std::invalid_argument("enumerate_degree: degree must be in {1,2,3,4,5,8,9}");
    }
}

}  // namespace dpf
