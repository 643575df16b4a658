#pragma once

#include <array>

namespace f2add {

/// sqrt(x) * (sqrt(y) + sqrt(1-y)) on [0,1]^2. Near-minimal values of this
/// profile over a slice pair force the slice fractions toward 1/2 or the
/// endpoints; the refinement step exploits the contrapositive.
double doubling_profile(double x, double y);

/// Sum over the eight (j1..j4) with j1+j2+j3+j4 = 0 of
/// prod_i a_{i,j_i}^(3/4), where a_{i,0} = a_i and a_{i,1} = 1 - a_i.
/// Bounded by 1 everywhere on [0,1]^4.
double energy_profile(const std::array<double, 4>& a);

enum class DichotomyBranch {
    NearHalf,
    NearEndpoints,
    HypothesisFails,
};

struct ProfileDichotomy {
    DichotomyBranch branch = DichotomyBranch::HypothesisFails;
    /// Doubling case: max of the eight symmetry-closed profile values.
    /// Energy case: the profile value itself.
    double value = 0.0;
};

/// If every value of the doubling profile over the symmetry closure of
/// (alpha, beta) — both swaps alpha<->1-alpha, beta<->1-beta and the
/// argument interchange, eight values total — is at most 1+eps, then either
/// both fractions are within 4*eps of 1/2 (NearHalf) or both within 2*eps
/// of an endpoint (NearEndpoints). Requires 0 < eps <= 1/100.
ProfileDichotomy doubling_profile_dichotomy(double alpha, double beta, double eps);

/// If the energy profile is at least 1-eps, then either all four fractions
/// are within 3*sqrt(eps) of 1/2 or all of min(a_i, 1-a_i) are at most
/// 10*eps. Requires 0 < eps <= 1/1000.
ProfileDichotomy energy_profile_dichotomy(const std::array<double, 4>& a, double eps);

/// Comparison slack for the radius checks; the profiles gate only which
/// combinatorial branch a pipeline takes, and every branch re-verifies its
/// output with exact integer certificates.
inline constexpr double kDichotomyTolerance = 1e-9;

}  // namespace f2add
