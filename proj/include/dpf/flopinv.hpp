#pragma once

#include "dpf/golden.hpp"
#include "dpf/models.hpp"

#include <vector>

namespace dpf {

/// A K-trivial curve hit by a strict transform: its (H, F) degrees and the
/// number of intersection points with the transformed curve.
struct FlopCurve {
    Rat alpha;
    Rat beta;
    long long count = 0;
};

/// Input to the strict-transform slope formula: a curve Z with degrees
/// (a, b) and the flopping curves it meets.
struct FlopDatum {
    Rat a;
    Rat b;
    std::vector<FlopCurve> curves;
};

/// mu(Z') = (a + sum n_i alpha_i) / (b + sum n_i beta_i).
/// Throws std::domain_error when the denominator vanishes (infinite slope).
Rat strict_transform_slope(const FlopDatum& d);

/// Builds the model behind a golden case.
FibrationModel model_for_case(const GoldenCase& g);

/// d(V) = det [ (-K.H^2) (-K.H.F) ; (-K.H.F) (-K.F^2) ].  Since (-K.F^2)=0
/// this is -(-K.H.F)^2 = -d^2 for a degree-d fibration (-16 for quadric
/// bundles).
long long deformation_invariant(const GoldenCase& g);

/// deg((aH+bF)^3 . [V]), the cubic intersection form on the case's lattice.
long long cube_form(const FibrationModel& m, long long a, long long b);

/// One mechanically recomputable flopping-curve count.
struct FlopCrossCheck {
    std::string case_id;
    long long computed = 0;
    long long golden = 0;
    std::string method;
};

/// The curated subset of cases whose e is a fiberwise complete-intersection
/// count or an explicit surface pairing; throws ConsistencyError on any
/// mismatch with the golden e.
std::vector<FlopCrossCheck> flop_count_crosschecks();

}  // namespace dpf
