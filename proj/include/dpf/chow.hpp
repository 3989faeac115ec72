#pragma once

#include "dpf/rational.hpp"

#include <string>
#include <vector>

namespace dpf {

/// A split bundle  E = O ⊕ O(a_1) ⊕ ... ⊕ O(a_n)  on P^1, describing the
/// P^n-bundle X = P(E).  Weights are stored with the leading 0 and kept
/// sorted ascending; c1 = sum of the weights is always derived.
struct BundleSpec {
    std::vector<int> weights;  // a_0..a_n, a_0 == 0, ascending

    /// Builds the spec from the upper weights (a_1..a_n); prepends a_0 = 0
    /// and sorts.  Negative weights are rejected.
    static BundleSpec from_upper(std::vector<int> upper);

    int n() const { return static_cast<int>(weights.size()) - 1; }
    long long c1() const;
    /// Multiplicity of weight 0 in the full list (always >= 1).
    int zero_multiplicity() const;

    bool operator==(const BundleSpec&) const = default;
};

/// The weighted bundle P[0,a; b; c] over P^1 with fiber P(1,1,2,3): two
/// weight-1 generators of twists 0 and a, a weight-2 generator of twist b
/// and a weight-3 generator of twist c.
struct WeightedBundleSpec {
    int a = 0;
    int b = 0;
    int c = 0;

    bool operator==(const WeightedBundleSpec&) const = default;
};

/// An element of CH(X) for X = P(E) in reduced normal form on the basis
/// H^p F^q, 0 <= p <= n, q in {0,1}, under the relations F^2 = 0 and
/// H^{n+1} = c1 * H^n F.  deg(H^n F) = 1.
class ChowClass {
public:
    ChowClass() = default;
    explicit ChowClass(int n) : n_(n), c_(2 * (n + 1)) {}

    int n() const { return n_; }
    const Rat& coeff(int p, int q) const { return c_.at(2 * p + q); }
    Rat& coeff(int p, int q) { return c_.at(2 * p + q); }

    bool is_zero() const;
    bool operator==(const ChowClass&) const = default;

    ChowClass operator+(const ChowClass& o) const;
    ChowClass operator-(const ChowClass& o) const;
    ChowClass operator*(const Rat& s) const;

    std::string str() const;  // e.g. "2*H^3 + -9*H^2*F"

private:
    int n_ = 0;
    std::vector<Rat> c_;
};

ChowClass chow_zero(int n);
ChowClass chow_one(int n);
/// H^p F^q as a reduced class (p <= n, q <= 1).
ChowClass chow_monomial(int n, int p, int q);

/// Reduced product in CH(X); degree-(> dim X) terms are dropped and
/// H^{n+1} folds to c1 * H^n F.  Throws on dimension mismatch.
ChowClass mul(const ChowClass& x, const ChowClass& y, const BundleSpec& bundle);

/// Re-applies the normal-form relations; the identity on reduced classes.
ChowClass reduce(const ChowClass& x, const BundleSpec& bundle);

/// Coefficient of the point class H^n F.  Non-top classes give 0.
Rat degree(const ChowClass& x, const BundleSpec& bundle);

/// alpha*H + beta*F, the divisor lattice of X (and of V via restriction).
struct DivisorClass {
    Rat alpha;
    Rat beta;

    ChowClass to_chow(int n) const;
    bool operator==(const DivisorClass&) const = default;
    std::string str() const;  // "2H+F" style
};

/// lambda*l + sigma*s0 in the dual basis of (H, F):
/// deg(H.l) = 1, deg(F.l) = 0, deg(H.s0) = 0, deg(F.s0) = 1.
struct CurveClass {
    Rat lambda;
    Rat sigma;

    bool operator==(const CurveClass&) const = default;
    std::string str() const;  // "2l+3s0" style
};

/// Pairing deg((alpha H + beta F) . (lambda l + sigma s0)) = alpha*lambda + beta*sigma.
Rat pair(const DivisorClass& d, const CurveClass& z);

/// The class of a line in a fiber: H^{n-1} F.
ChowClass line_class(const BundleSpec& bundle);
/// The minimal section s0 = prod_{i>=1} (H - a_i F).
ChowClass minimal_section_class(const BundleSpec& bundle);
/// Class of the coordinate subbundle P[{a_i : i in keep}]:
/// prod over dropped i of (H - a_i F).
ChowClass subbundle_class(const BundleSpec& bundle, const std::vector<int>& keep);

/// Reads off (lambda, sigma) of a 1-cycle class by pairing with H and F.
CurveClass curve_coordinates(const ChowClass& one_cycle, const BundleSpec& bundle);

/// h^0(X, O(aH + bF)) = sum over |I| = a of max(0, <I,weights> + b + 1).
long long h0(const BundleSpec& bundle, long long a, long long b);

/// All exponent vectors I with |I| = a and <I,weights> + b >= 0.
std::vector<std::vector<int>> admissible_monomials(const BundleSpec& bundle, int a, long long b);

/// Multiplication arena for weighted-bundle divisor products: a formal
/// rank-5 ambient in which no H-power reduction can trigger below H^5.
BundleSpec weighted_arena();

/// Q-degree map of P[0,a;b;c]: deg(H^3 F) = 1/6 and
/// deg(H^4) = (a + b/2 + c/3)/6.  `x` is a class on weighted_arena().
Rat weighted_degree(const ChowClass& x, const WeightedBundleSpec& wb);

}  // namespace dpf
