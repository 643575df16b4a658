#pragma once

#include "f2add/exact.hpp"
#include "f2add/flatness.hpp"
#include "f2add/gf2.hpp"
#include "f2add/stats.hpp"

#include <array>
#include <optional>
#include <utility>
#include <vector>

namespace f2add {

/// Output of the coherently-flat extraction: the subspace H (orthogonal
/// complement of the joint high spectrum), one translate per set maximising
/// the coset intersection, and the two exactly verified size inequalities:
///   hlower:  |H|^4 * 5^4 >= 4^4 * prod |A_i|
///   alower:  prod |A_i ∩ (x_i+H)| * 16 * K^4 >= |H|^4
/// The parameter is carried as the exact rational K^4; K^2 is included
/// whenever it is itself rational (always, except on the adaptive energy
/// path where K = 1/w has only a rational fourth power).
struct ExtractionCertificate {
    Subspace h;
    std::array<GF2Vector, 4> translates;
    std::array<std::uint64_t, 4> intersections{};
    Rational k_fourth;
    std::optional<Rational> k_squared;
    bool hlower = false;
    bool alower = false;
    std::uint64_t lambda_size = 0;
    std::array<std::uint64_t, 4> set_sizes{};

    ExtractionCertificate() : h(1) {}
};

/// Coset representative x maximising |A ∩ (x+H)| and that maximum, ties
/// broken toward the lexicographically smallest representative. Counts by a
/// single tally pass over the elements of A.
std::pair<GF2Vector, std::uint64_t> translate_argmax(const DenseSet& a, const Subspace& h);

/// |A ∩ (x + H)| for one coset.
std::uint64_t coset_intersection(const DenseSet& a, const Subspace& h, GF2Vector x);

/// Per-coset intersection sizes indexed like coset_representatives(h),
/// computed by the word-parallel AND/popcount route. Agrees with the tally
/// in translate_argmax; kept as the comparison kernel.
std::vector<std::uint64_t> coset_intersection_profile(const DenseSet& a, const Subspace& h);

/// Extraction for a coherently flat quadruple with energy at least 1/K.
/// Both preconditions are re-verified exactly (PreconditionNotFlat,
/// PreconditionLowEnergy). Failures of the concluding inequalities indicate
/// implementation faults and throw CertificateViolation.
ExtractionCertificate extract_flat(const std::array<const DenseSet*, 4>& sets,
                                   const Rational& k_fourth);

}  // namespace f2add
