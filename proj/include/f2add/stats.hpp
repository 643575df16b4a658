#pragma once

#include "f2add/exact.hpp"
#include "f2add/fourier.hpp"
#include "f2add/gf2.hpp"

#include <array>
#include <cstdint>

namespace f2add {

/// { a + b : a in A, b in B }. Computed as a union of XOR-translates of the
/// larger set, one word-parallel OR per element of the smaller set.
DenseSet sumset(const DenseSet& a, const DenseSet& b);

/// Literal elementwise double loop; reference for the kernel above.
DenseSet sumset_reference(const DenseSet& a, const DenseSet& b);

/// Dbl(A,B) = |A+B| / sqrt(|A||B|), carried as the exact size triple.
/// Dbl itself is irrational in general; comparisons use the rational square.
struct DoublingValue {
    std::uint64_t sumset_size = 0;
    std::uint64_t size_a = 0;
    std::uint64_t size_b = 0;

    Rational squared() const {
        return Rational(BigInt(sumset_size) * sumset_size, BigInt(size_a) * size_b);
    }
    double approx() const;
};

DoublingValue doubling(const DenseSet& a, const DenseSet& b);

/// Count of (a1,a2,a3,a4) with a1+a2+a3+a4 = 0 together with the set sizes.
/// The normalised energy w = count / prod(sizes)^(3/4) lies in [0,1]; its
/// exact fourth power is rational and is what certificates compare.
struct EnergyValue {
    BigInt quadruple_count;
    std::array<std::uint64_t, 4> sizes{};

    Rational omega4() const;
    /// (1/w)^4; requires a non-zero count.
    Rational inverse_omega4() const;
    double omega_approx() const;
};

/// Quadruple count via the transform identity
/// sum_xi W1(xi) W2(xi) W3(xi) W4(xi) = 2^n * count.
EnergyValue energy(const DenseSet& a1, const DenseSet& a2, const DenseSet& a3,
                   const DenseSet& a4);

/// Same count by the literal triple loop (a4 forced); oracle for energy().
/// Guarded to |A1||A2||A3| <= 10^8.
BigInt brute_energy(const DenseSet& a1, const DenseSet& a2, const DenseSet& a3,
                    const DenseSet& a4);

/// Exact two sides of w(A,B,A,B) >= sqrt(|A||B|)/|A+B|, cross-multiplied:
/// lhs = count * |A+B|, rhs = (|A||B|)^2. holds is always true; a false
/// return would indicate a counting bug.
struct CauchySchwarzReport {
    BigInt lhs;
    BigInt rhs;
    bool holds = false;
};

CauchySchwarzReport cauchy_schwarz_bound(const DenseSet& a, const DenseSet& b);

}  // namespace f2add
