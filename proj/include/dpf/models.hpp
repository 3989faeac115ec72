#pragma once

#include "dpf/chow.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace dpf {

/// One candidate del Pezzo fibration of degree d in {1,2,3,4,5,8,9}:
///   d=8: quadric bundle V in |2H+kF| on a P^3-bundle
///   d=3: cubic bundle V in |3H+kF| on a P^3-bundle
///   d=4: V = W1 cap W2, W_i in |2H+k_iF| on a P^4-bundle
///   d=5: Pfaffian model on a P^5-bundle, twists k_1<=...<=k_5, sum even
///   d=2: double cover of a P^2-bundle branched in |4H+2kF|
///   d=9: V = X itself, a P^2-bundle
///   d=1: V in |6H+6kF| on the weighted bundle P[0,a;-2k;-3k]
struct FibrationModel {
    int degree = 0;
    BundleSpec bundle;            // ambient bundle (d=1: weighted_arena())
    WeightedBundleSpec wbundle;   // degree 1 only
    std::vector<int> twists;      // arity depends on degree (d=9: empty)

    ChowClass v_cycle;            // [V] in CH(X) (1 for d in {2,9}; 6H+6kF for d=1)
    int cover_factor = 1;         // 2 for the degree-2 double cover

    /// Upper weights a_1..a_n (d=1: the single weight a).
    std::vector<int> upper_weights() const;
    /// Weights as printed in the tables (d=1: the triple {a, b, c}).
    std::vector<int> display_weights() const;
    /// Twist half-sum t = (sum k_i)/2 for degree 5.
    long long t() const;

    bool operator==(const FibrationModel&) const = default;
};

/// Validates arity/parity, canonicalizes (sorts weights and twists where the
/// model is symmetric in them) and precomputes the fundamental cycle.
/// Throws std::invalid_argument on bad input (wrong rank, odd degree-5 twist
/// sum, negative weights).
FibrationModel build_model(int degree, std::vector<int> weights, std::vector<int> twists);

/// -K_V in the (H,F) lattice.
DivisorClass anticanonical(const FibrationModel& m);

/// deg((-K_V)^3 . [V]); includes the covering factor for d=2 and uses the
/// weighted degree map for d=1.  Always an integer for valid models.
Rat anticanonical_cube(const FibrationModel& m);

/// deg(D1.D2.D3.[V]) with the same degree conventions as the cube.
Rat triple_product(const FibrationModel& m, const DivisorClass& d1, const DivisorClass& d2,
                   const DivisorClass& d3);

/// The D-curve: T.[V] for T the subbundle dropping the top two weights
/// (degree 2 uses T = s0).  Defined for degrees {2,3,4,5,8} only.
CurveClass d_class(const FibrationModel& m);

enum class Relation { GeZero, GtZero, ForcedEq };

struct Constraint {
    std::string id;
    Rat value;           // primary (intrinsic) value
    Relation rel = Relation::GeZero;
    bool satisfied = false;
    std::optional<Rat> printed;  // closed form from the classification write-up
    std::optional<Rat> factor;   // printed * factor == value, where asserted
};

struct ConstraintReport {
    std::vector<Constraint> items;
    bool admissible = false;

    const Constraint& at(const std::string& id) const;
};

/// Nef/effectivity/bigness system per degree.  Nef and eff come from the
/// intrinsic pairings deg(-K.D) and deg(H.D) (section pairings for d=1, 9);
/// big is the anticanonical cube.  Printed closed forms are attached as
/// regression values; for d=4 the tabulated cube is authoritative and the
/// printed big form is a documented discrepancy (see KnownInconsistencies).
ConstraintReport inequality_values(const FibrationModel& m);

/// w_ij = t - k_i - k_j for sorted k with even sum; throws on odd sums.
std::array<std::array<long long, 5>, 5> twist_matrix(const std::array<int, 5>& k);
long long wij(const FibrationModel& m, int i, int j);  // 1-based, degree 5

/// Degree 5: whether p*H^4 + q*H^3F lies in the integer span of
/// H_V = 5H^4 + 3t H^3F and F_V = 5 H^3F.
bool picard_expressible(const FibrationModel& m, const Rat& p, const Rat& q);

/// Integer span test in a rank-2 cycle lattice: target = x*g1 + y*g2 with
/// x, y integers.
bool integrally_expressible(const Rat& tp, const Rat& tq, const Rat& g1p, const Rat& g1q,
                            const Rat& g2p, const Rat& g2q);

}  // namespace dpf
