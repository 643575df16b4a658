#include "f2add/analytic.hpp"

#include "f2add/errors.hpp"

#include <algorithm>
#include <cmath>

namespace f2add {

namespace {

void require_unit(double x, const char* who) {
    if (!(x >= 0.0 && x <= 1.0)) throw DomainError(std::string(who) + ": argument outside [0,1]");
}

}  // namespace

double doubling_profile(double x, double y) {
    require_unit(x, "doubling_profile");
    require_unit(y, "doubling_profile");
    return std::sqrt(x) * (std::sqrt(y) + std::sqrt(1.0 - y));
}

double energy_profile(const std::array<double, 4>& a) {
    for (double v : a) require_unit(v, "energy_profile");
    double pow34[4][2];
    for (int i = 0; i < 4; ++i) {
        pow34[i][0] = std::pow(a[i], 0.75);
        pow34[i][1] = std::pow(1.0 - a[i], 0.75);
    }
    double sum = 0.0;
    for (int j = 0; j < 16; ++j) {
        const int j1 = (j >> 3) & 1, j2 = (j >> 2) & 1, j3 = (j >> 1) & 1, j4 = j & 1;
        if ((j1 ^ j2 ^ j3 ^ j4) != 0) continue;
        sum += pow34[0][j1] * pow34[1][j2] * pow34[2][j3] * pow34[3][j4];
    }
    return sum;
}

ProfileDichotomy doubling_profile_dichotomy(double alpha, double beta, double eps) {
    require_unit(alpha, "doubling_profile_dichotomy");
    require_unit(beta, "doubling_profile_dichotomy");
    if (!(eps > 0.0 && eps <= 0.01)) {
        throw DomainError("doubling_profile_dichotomy: eps outside (0, 1/100]");
    }
    double worst = 0.0;
    for (double u : {alpha, 1.0 - alpha}) {
        for (double v : {beta, 1.0 - beta}) {
            worst = std::max(worst, doubling_profile(u, v));
            worst = std::max(worst, doubling_profile(v, u));
        }
    }
    if (worst > 1.0 + eps) return {DichotomyBranch::HypothesisFails, worst};

    const double tol = kDichotomyTolerance;
    const bool near_half = std::abs(alpha - 0.5) <= 4 * eps + tol &&
                           std::abs(beta - 0.5) <= 4 * eps + tol;
    const bool near_ends = std::min(alpha, 1.0 - alpha) <= 2 * eps + tol &&
                           std::min(beta, 1.0 - beta) <= 2 * eps + tol;
    if (near_half) return {DichotomyBranch::NearHalf, worst};
    if (near_ends) return {DichotomyBranch::NearEndpoints, worst};
    throw CertificateViolation("doubling profile dichotomy violated");
}

ProfileDichotomy energy_profile_dichotomy(const std::array<double, 4>& a, double eps) {
    if (!(eps > 0.0 && eps <= 0.001)) {
        throw DomainError("energy_profile_dichotomy: eps outside (0, 1/1000]");
    }
    const double g = energy_profile(a);
    if (g < 1.0 - eps) return {DichotomyBranch::HypothesisFails, g};

    const double tol = kDichotomyTolerance;
    bool near_half = true, near_ends = true;
    for (double v : a) {
        near_half = near_half && std::abs(v - 0.5) <= 3 * std::sqrt(eps) + tol;
        near_ends = near_ends && std::min(v, 1.0 - v) <= 10 * eps + tol;
    }
    if (near_half) return {DichotomyBranch::NearHalf, g};
    if (near_ends) return {DichotomyBranch::NearEndpoints, g};
    throw CertificateViolation("energy profile dichotomy violated");
}

}  // namespace f2add
