#pragma once

#include "f2add/exact.hpp"
#include "f2add/gf2.hpp"

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace f2add {

/// Exact integer Walsh coefficients of an indicator function:
/// walsh[xi] = sum_{x in A} (-1)^(xi.x), so walsh[0] = |A| and
/// sum_xi walsh[xi]^2 = 2^n |A| (Plancherel, integer-exact).
struct FourierTable {
    int dim = 0;
    std::int64_t source_cardinality = 0;
    std::vector<std::int64_t> walsh;
};

/// Fast butterfly transform, n*2^n integer additions. Stages with disjoint
/// index pairs are parallelised for large n; the result is bit-identical to
/// the serial path on every input.
FourierTable walsh_transform(const DenseSet& a);

/// Same contract, forced single-threaded. Kept as the comparison baseline.
FourierTable walsh_transform_serial(const DenseSet& a);

/// Literal O(4^n) double sum straight from the definition; correctness
/// oracle for the butterfly. Capped at n <= 14.
FourierTable naive_walsh(const DenseSet& a);

/// A spectrum cutoff alpha carried as the exact rational alpha^8, so that
/// membership |W| >= alpha*|A| is the integer test W^8*den >= num*|A|^8
/// even when only alpha^2, alpha^4 or alpha^8 is rational (the pipelines
/// use alpha = 1/sqrt(2K) with K itself a square or fourth root).
class SpectrumThreshold {
public:
    static SpectrumThreshold from_alpha(const Rational& alpha);
    static SpectrumThreshold from_alpha_squared(const Rational& alpha2);
    static SpectrumThreshold from_alpha_fourth(const Rational& alpha4);
    static SpectrumThreshold from_alpha_eighth(const Rational& alpha8);

    const Rational& alpha8() const { return alpha8_; }

    /// Smallest integer magnitude that passes |W| >= alpha*set_size.
    std::uint64_t walsh_cutoff(std::uint64_t set_size) const;

private:
    explicit SpectrumThreshold(Rational alpha8);
    Rational alpha8_;
};

/// { xi : |walsh[xi]| >= alpha|A| }, ascending. Always contains 0.
std::vector<GF2Vector> spectrum(const DenseSet& a, const SpectrumThreshold& alpha);
std::vector<GF2Vector> spectrum(const FourierTable& table, const SpectrumThreshold& alpha);

/// Whether the proportion of A on the hyperplane xi.x = 0 falls outside
/// ((1-alpha)/2, (1+alpha)/2), with the closed boundary matching the
/// spectrum definition. Computed by a direct masked count, independently of
/// any Walsh table, so it cross-checks spectrum membership.
bool bias_check(const DenseSet& a, GF2Vector xi, const SpectrumThreshold& alpha);

/// Debug dump, one "xi,walsh" row per frequency.
void dump_walsh_csv(const FourierTable& table, std::ostream& os);

}  // namespace f2add
