#include "dpf/exclusions.hpp"

#include "dpf/errors.hpp"
#include "dpf/polyfp.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace dpf {

namespace {

using Fired = std::optional<std::string>;

bool all_zero(const std::vector<int>& v) {
    return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
}

std::string join(const std::vector<int>& v) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
    return os.str();
}

// ---- R-TRIVIAL-RANK -------------------------------------------------------
// All weights and twists zero: the model is a product (degree-d del Pezzo
// surface) x P^1 with Picard rank 11 - d > 2.  Degree 9 is exempt: there the
// product P^2 x P^1 has rank exactly 2 and is one of the listed cases.
Fired trivial_rank(const FibrationModel& m, const ExclusionContext&) {
    if (!all_zero(m.upper_weights()) || !all_zero(m.twists)) return std::nullopt;
    return "trivial bundle: product with a degree-" + std::to_string(m.degree) +
           " del Pezzo surface, Picard rank " + std::to_string(11 - m.degree) + " > 2";
}

// ---- R-SING-S0 (hypersurface degrees 3, 8) --------------------------------
// V in |mH+kF| with k < 0 and a_n + k < 0: every monomial of the defining
// equation has x0-exponent <= m-2, so every member vanishes to order >= 2
// along the minimal section.
Fired sing_s0(const FibrationModel& m, const ExclusionContext&) {
    const int k = m.twists[0];
    const int an = m.bundle.weights.back();
    if (k < 0 && an + k < 0) {
        std::ostringstream os;
        os << "every member singular along s0: k=" << k << "<0 and a_n+k=" << an + k << "<0";
        return os.str();
    }
    return std::nullopt;
}

// Shared: index of a variable dividing every admissible monomial, or -1.
int forced_common_variable(const BundleSpec& bundle, int a, long long b) {
    const auto mons = admissible_monomials(bundle, a, b);
    if (mons.empty()) return -1;
    for (int j = 0; j <= bundle.n(); ++j) {
        bool everywhere = true;
        for (const auto& mon : mons)
            if (mon[j] == 0) {
                everywhere = false;
                break;
            }
        if (everywhere) return j;
    }
    return -1;
}

// ---- R-FORCED-FACTOR (degree 2) -------------------------------------------
// Every admissible monomial of the branch system |4H+2kF| carries a common
// variable, so the branch divisor is reducible and cannot be smooth.
Fired forced_factor(const FibrationModel& m, const ExclusionContext&) {
    const int j = forced_common_variable(m.bundle, 4, 2LL * m.twists[0]);
    if (j < 0) return std::nullopt;
    std::ostringstream os;
    os << "branch divisor reducible: x" << j << " divides every admissible monomial"
       << " (component H-" << m.bundle.weights[j] << "F splits off)";
    return os.str();
}

// ---- R-KTRIV-SURFACE (degree 8) -------------------------------------------
// L = zero-weight sub-P^2-bundle; deg((-K_V)^2 . [V cap L]) = 0 makes
// |-K_V| fiber the surface V cap L, a 1-dimensional K-trivial family.
Fired ktriv_surface(const FibrationModel& m, const ExclusionContext&) {
    if (m.bundle.zero_multiplicity() < 3) return std::nullopt;
    std::vector<int> keep;  // a rank-3 zero-weight subbundle (P^2-bundle)
    for (int i = 0; i <= m.bundle.n() && keep.size() < 3; ++i)
        if (m.bundle.weights[i] == 0) keep.push_back(i);
    const ChowClass L = subbundle_class(m.bundle, keep);
    const DivisorClass mk = anticanonical(m);
    const int n = m.bundle.n();
    ChowClass x = mul(mk.to_chow(n), mk.to_chow(n), m.bundle);
    x = mul(x, L, m.bundle);
    x = mul(x, m.v_cycle, m.bundle);
    if (degree(x, m.bundle) != 0) return std::nullopt;
    return "deg((-K_V)^2 . [V cap P[0^3]]) = 0: K-trivial surface fibration";
}

// ---- R3-PIC (degree 3) -----------------------------------------------------
// The restriction of V to the subbundle dropping the top weight is supported
// on a single equal-weight block with constant coefficients, hence splits
// into sub-P^1-bundle components whose classes leave <H_V, F_V>.
Fired r3_pic(const FibrationModel& m, const ExclusionContext&) {
    const auto u = m.upper_weights();  // a1 <= a2 <= a3
    BundleSpec sub = BundleSpec::from_upper({u[0], u[1]});
    const int k = m.twists[0];
    const auto mons = admissible_monomials(sub, 3, k);
    if (mons.empty()) return std::nullopt;
    // block of top-weight variables inside the subbundle (excluding x0)
    const int wtop = sub.weights.back();
    if (wtop == 0) return std::nullopt;
    std::vector<int> block;
    for (int i = 1; i <= sub.n(); ++i)
        if (sub.weights[i] == wtop) block.push_back(i);
    if (block.size() < 2) return std::nullopt;
    for (const auto& mon : mons) {
        long long tw = k;
        for (int i = 0; i <= sub.n(); ++i) {
            if (mon[i] > 0 && std::find(block.begin(), block.end(), i) == block.end())
                return std::nullopt;  // support leaves the block
            tw += static_cast<long long>(mon[i]) * sub.weights[i];
        }
        if (tw != 0) return std::nullopt;  // non-constant coefficient
    }
    // component class: keep x0 and one block member, drop the rest
    ChowClass comp = subbundle_class(m.bundle, {0, 1});
    const Rat p = comp.coeff(2, 0), q = comp.coeff(1, 1);
    // H_V = H.(3H+kF) = (3, k) and F_V = (0, 3) as 2-cycles
    if (integrally_expressible(p, q, Rat(3), Rat(m.twists[0]), Rat(0), Rat(3)))
        return std::nullopt;
    return "V restricted to P[0," + std::to_string(u[0]) + "," + std::to_string(u[1]) +
           "] splits into three ruled-surface components outside <H_V,F_V>";
}

// ---- R-SUBBUNDLE-PICARD (degree 4) ----------------------------------------
// T = P[0^2] lies in W1 cap W2 but its 2-cycle class has no integral
// expression in H_V, F_V, so Pic(V) cannot have rank 2.
Fired subbundle_picard(const FibrationModel& m, const ExclusionContext&) {
    if (m.bundle.zero_multiplicity() < 2) return std::nullopt;
    for (int i = 0; i < 2; ++i) {
        // every admissible monomial of W_i must contain a positive-weight variable
        for (const auto& mon : admissible_monomials(m.bundle, 2, m.twists[i])) {
            long long wsum = 0;
            for (int j = 0; j <= m.bundle.n(); ++j)
                wsum += static_cast<long long>(mon[j]) * m.bundle.weights[j];
            if (wsum == 0) return std::nullopt;  // supported on the zero block
        }
    }
    const ChowClass T = subbundle_class(m.bundle, {0, 1});
    const Rat p = T.coeff(3, 0), q = T.coeff(2, 1);
    const long long kb = m.twists[0] + m.twists[1];
    if (integrally_expressible(p, q, Rat(4), Rat(2 * kb), Rat(0), Rat(4)))
        return std::nullopt;
    return "P[0^2] lies in V; its class " + T.str() + " is not an integral combination of "
           "H_V and F_V";
}

// ---- R-DIM1-SING (degree 4) ------------------------------------------------
// Some W_i vanishes on a subbundle T = P[I] (|I| >= 2) and its linear part
// along T has a positive-dimensional zero locus, which the other divisor
// meets: the generic complete intersection is singular.
Fired dim1_sing(const FibrationModel& m, const ExclusionContext&) {
    const int n = m.bundle.n();
    const auto& a = m.bundle.weights;
    for (int i = 0; i < 2; ++i) {
        const auto mons = admissible_monomials(m.bundle, 2, m.twists[i]);
        for (int mask = 0; mask < (1 << (n + 1)); ++mask) {
            const int size = __builtin_popcount(static_cast<unsigned>(mask));
            if (size < 2 || size > n) continue;
            bool contained = true;  // all monomials in the ideal of P[mask]?
            for (const auto& mon : mons) {
                bool outside = false;
                for (int j = 0; j <= n; ++j)
                    if (mon[j] > 0 && !(mask & (1 << j))) outside = true;
                if (!outside) {
                    contained = false;
                    break;
                }
            }
            if (!contained) continue;
            int maxa = 0;
            for (int j = 0; j <= n; ++j)
                if (mask & (1 << j)) maxa = std::max(maxa, a[j]);
            int r = 0;
            for (int j = 0; j <= n; ++j)
                if (!(mask & (1 << j)) && maxa + a[j] + m.twists[i] >= 0) ++r;
            if (size - r >= 1) {
                std::ostringstream os;
                os << "W" << i + 1 << " vanishes on a rank-" << size
                   << " subbundle with singular locus of dimension " << size - r
                   << " meeting the other divisor";
                return os.str();
            }
        }
    }
    return std::nullopt;
}

// ---- R-CI-SING-S0 (degree 4) -----------------------------------------------
// Both k_i < 0 force s0 into W1 cap W2; smoothness along s0 needs the 2 x n
// matrix of linear-part coefficients to have rank 2 everywhere on P^1.
// Decided by a randomized exact evaluation over F_p with the documented seed:
// fires iff all 2x2 minors vanish identically or share a root.
Fired ci_sing_s0(const FibrationModel& m, const ExclusionContext& ctx) {
    if (m.twists[0] >= 0 || m.twists[1] >= 0) return std::nullopt;
    const int n = m.bundle.n();
    const auto& a = m.bundle.weights;
    std::mt19937_64 rng(ctx.seed);
    std::vector<std::vector<fp::Poly>> A(2, std::vector<fp::Poly>(n));
    for (int i = 0; i < 2; ++i)
        for (int j = 1; j <= n; ++j) A[i][j - 1] = fp::random_poly(a[j] + m.twists[i], rng);
    bool any_nonzero = false;
    fp::Poly g;
    for (int j = 0; j < n; ++j)
        for (int jp = j + 1; jp < n; ++jp) {
            fp::Poly minor = fp::sub(fp::mul(A[0][j], A[1][jp]), fp::mul(A[0][jp], A[1][j]));
            if (minor.zero()) continue;
            g = any_nonzero ? fp::gcd(g, minor) : minor;
            any_nonzero = true;
        }
    if (!any_nonzero)
        return "linear parts along s0 have rank <= 1 identically: V singular along s0";
    if (g.deg() >= 1) {
        std::ostringstream os;
        os << "generic linear parts along s0 drop rank at a point (common minor factor of "
              "degree " << g.deg() << ")";
        return os.str();
    }
    return std::nullopt;
}

// ---- R5-NEGK (degree 5) ----------------------------------------------------
// w23 < 0 makes every m_ij with i != 1 vanish on s0, hence s0 in V; then
// (-K_V . s0) = 2 - sum(a) - t < 0 contradicts nefness.
Fired r5_negk(const FibrationModel& m, const ExclusionContext&) {
    const long long w23 = wij(m, 2, 3);
    const long long pairing = 2 - m.bundle.c1() - m.t();
    if (w23 < 0 && pairing < 0) {
        std::ostringstream os;
        os << "s0 in V (w23=" << w23 << "<0) and (-K_V.s0)=" << pairing << "<0";
        return os.str();
    }
    return std::nullopt;
}

// ---- R5 helpers ------------------------------------------------------------

bool m45_identically_zero(const FibrationModel& m) {
    return m.bundle.weights.back() + wij(m, 4, 5) < 0;
}

// After m45 = 0, the sections m15, m25, m35 cut a rank-3 subbundle of class
// prod_i (H + w_i5 F); f5 restricts to a surface S in V of class
// 2H^4 + q H^3F which must lie in the integral span of H_V, F_V.
Fired r5_surface_tail(const FibrationModel& m, const std::string& how) {
    for (int i = 1; i <= 3; ++i)
        if (h0(m.bundle, 1, wij(m, i, 5)) < 1) return std::nullopt;
    const int n = m.bundle.n();
    ChowClass S = DivisorClass{Rat(2), Rat(m.twists[4])}.to_chow(n);
    for (int i = 1; i <= 3; ++i)
        S = mul(S, DivisorClass{Rat(1), Rat(wij(m, i, 5))}.to_chow(n), m.bundle);
    const Rat p = S.coeff(4, 0), q = S.coeff(3, 1);
    if (picard_expressible(m, p, q)) return std::nullopt;
    std::ostringstream os;
    os << how << "; V contains a surface of class " << to_frac_string(p) << "H^4 + "
       << to_frac_string(q) << "H^3F outside <H_V,F_V>";
    return os.str();
}

// ---- R5-REDUCIBLE (degree 5, the m23-kernel pattern) -----------------------
// m24, m25, m34, m35 vanish on the zero block, m45 vanishes identically and
// m23 has constant coefficients there: the kernel sub-P^2-bundle of m23 lies
// in V, which is therefore reducible.
Fired r5_reducible(const FibrationModel& m, const ExclusionContext&) {
    if (m.bundle.zero_multiplicity() < 4) return std::nullopt;
    if (!m45_identically_zero(m)) return std::nullopt;
    if (wij(m, 2, 4) >= 0 || wij(m, 2, 5) >= 0 || wij(m, 3, 4) >= 0 || wij(m, 3, 5) >= 0)
        return std::nullopt;
    if (wij(m, 2, 3) != 0) return std::nullopt;
    return "m24, m25, m34, m35 vanish on the zero block, m45 = 0 and m23 is constant there: "
           "a sub-P^2-bundle lies in V, so V is reducible";
}

// ---- R5-TRIPLE (degree 5, m45 identically zero) ----------------------------
Fired r5_triple(const FibrationModel& m, const ExclusionContext&) {
    if (!m45_identically_zero(m)) return std::nullopt;
    return r5_surface_tail(m, "m45 = 0 by twist");
}

// ---- R5-COLLAPSE (degree 5, m45 = 0 after a symmetric transform) -----------
// Rows sharing k with row 4 place their column-5 entries in a section space
// of dimension <= rows - 1; a linear transform among those rows then kills
// m45 and the surface argument applies unchanged.
Fired r5_collapse(const FibrationModel& m, const ExclusionContext&) {
    if (m45_identically_zero(m)) return std::nullopt;
    int rows = 0;
    for (int i = 1; i <= 4; ++i)
        if (m.twists[i - 1] == m.twists[3]) ++rows;
    const long long h = h0(m.bundle, 1, wij(m, 4, 5));
    if (h > rows - 1) return std::nullopt;
    std::ostringstream os;
    os << "h0(E(w45)) = " << h << " <= " << rows - 1
       << " equal-twist rows: transform makes m45 = 0";
    return r5_surface_tail(m, os.str());
}

// ---- R-NEF-EQUALITY-FAMILY (post-table instances) ---------------------------
// The nef pairing vanishes and the K-trivial locus moves in a family.  The
// movability witness is degree specific: a positive-dimensional family of
// minimal sections, or a product structure forced by constant coefficients.
Fired nef_equality_family(const FibrationModel& m, const ExclusionContext&) {
    switch (m.degree) {
        case 9: {
            const auto u = m.upper_weights();
            if (2 - u[0] - u[1] == 0 && m.bundle.zero_multiplicity() >= 2)
                return "(-K.s0)=0 with a movable minimal section: K-trivial family";
            return std::nullopt;
        }
        case 3: {
            if (m.bundle.zero_multiplicity() < 3) return std::nullopt;
            const DivisorClass mk = anticanonical(m);
            ChowClass S = subbundle_class(m.bundle, {0, 1});
            ChowClass Z = mul(S, m.v_cycle, m.bundle);
            const CurveClass c = curve_coordinates(Z, m.bundle);
            if (pair(mk, c) != 0) return std::nullopt;
            return "K-trivial curves V cap P[0^2] move with the P[0^2]-family";
        }
        case 5: {
            if (2 - m.bundle.c1() - m.t() != 0) return std::nullopt;
            if (m.bundle.zero_multiplicity() < 5) return std::nullopt;
            for (int i = 1; i <= 5; ++i)
                for (int j = i + 1; j <= 5; ++j)
                    if (wij(m, i, j) > 0) return std::nullopt;
            return "(-K.s0)=0 and the restriction to P[0^5] is constant: "
                   "V cap P[0^5] = C x P1, a K-trivial family";
        }
        case 1: {
            const int k = m.twists[0];
            if (2 - m.wbundle.a - 2 * k == 0 && k == 0)
                return "(-K.s)=0 and V cap Lambda = C x P1: sections are non-isolated";
            return std::nullopt;
        }
        default: return std::nullopt;
    }
}

}  // namespace

const std::vector<ExclusionRule>& rule_catalog() {
    static const std::vector<ExclusionRule> catalog = {
        {"R-TRIVIAL-RANK", {1, 2, 3, 4, 5, 8}, trivial_rank},
        {"R-SING-S0", {3, 8}, sing_s0},
        {"R-FORCED-FACTOR", {2}, forced_factor},
        {"R-KTRIV-SURFACE", {8}, ktriv_surface},
        {"R3-PIC", {3}, r3_pic},
        {"R-SUBBUNDLE-PICARD", {4}, subbundle_picard},
        {"R-DIM1-SING", {4}, dim1_sing},
        {"R-CI-SING-S0", {4}, ci_sing_s0},
        {"R5-NEGK", {5}, r5_negk},
        {"R5-REDUCIBLE", {5}, r5_reducible},
        {"R5-TRIPLE", {5}, r5_triple},
        {"R5-COLLAPSE", {5}, r5_collapse},
        {"R-NEF-EQUALITY-FAMILY", {9, 3, 5, 1}, nef_equality_family},
    };
    return catalog;
}

std::vector<ExclusionVerdict> apply_rules_with_catalog(const CandidateTable& table,
                                                       const std::vector<ExclusionRule>& catalog,
                                                       const ExclusionContext& ctx) {
    std::vector<ExclusionVerdict> out;
    out.reserve(table.rows.size());
    for (const CandidateRow& row : table.rows) {
        ExclusionVerdict v;
        v.row = row.row;
        for (const ExclusionRule& rule : catalog) {
            if (std::find(rule.degrees.begin(), rule.degrees.end(), table.degree) ==
                rule.degrees.end())
                continue;
            if (auto evidence = rule.predicate(row.model, ctx)) {
                v.excluded = true;
                v.rule_id = rule.id;
                v.evidence = *evidence;
                break;
            }
        }
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<ExclusionVerdict> apply_rules(const CandidateTable& table,
                                          const ExclusionContext& ctx) {
    auto verdicts = apply_rules_with_catalog(table, rule_catalog(), ctx);
    std::vector<int> excluded;
    for (const auto& v : verdicts)
        if (v.excluded) excluded.push_back(v.row);
    if (excluded != golden_excluded_rows(table.degree)) {
        std::ostringstream os;
        os << "exclusion verdicts diverge from the golden list for degree " << table.degree
           << ": engine excluded rows {" << join(excluded) << "}, expected {"
           << join(golden_excluded_rows(table.degree)) << "}";
        throw ConsistencyError(os.str());
    }
    return verdicts;
}

std::vector<Survivor> survivors(int degree, const ExclusionContext& ctx) {
    CandidateTable table = enumerate_degree(degree);
    auto verdicts = apply_rules(table, ctx);
    std::vector<const CandidateRow*> alive;
    for (size_t i = 0; i < table.rows.size(); ++i)
        if (!verdicts[i].excluded) alive.push_back(&table.rows[i]);
    std::stable_sort(alive.begin(), alive.end(), [](const CandidateRow* x, const CandidateRow* y) {
        return anticanonical_cube(x->model) > anticanonical_cube(y->model);
    });
    const auto golden = golden_cases_for_degree(degree);
    if (alive.size() != golden.size())
        throw ConsistencyError("survivor count mismatch for degree " + std::to_string(degree));
    std::vector<Survivor> out;
    for (size_t i = 0; i < alive.size(); ++i) {
        const FibrationModel& m = alive[i]->model;
        const GoldenCase& g = *golden[i];
        if (m.display_weights() != g.weights || m.twists != g.twists ||
            anticanonical_cube(m) != Rat(g.cube) || alive[i]->row != g.table_row) {
            throw ConsistencyError("survivor " + g.id + " does not match the golden record");
        }
        out.push_back({g.id, alive[i]->row, m});
    }
    return out;
}

}  // namespace dpf
