#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace f2add {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// All certificate inequalities in this project are decided in exact integer
// arithmetic. Quantities like Dbl(A,B) = |A+B|/sqrt(|A||B|) and the
// normalised energy are algebraic, not rational, so comparisons against them
// are rearranged until both sides are rational; the helpers below package
// the rearrangements that need a radical isolated and squared more than once.

// floor(x^(1/k)) for x >= 0.
BigInt kth_root_floor(const BigInt& x, unsigned k);

// Smallest non-negative integer m with m^k >= r (r >= 0).
BigInt kth_root_ceil_of_rational(const Rational& r, unsigned k);

// ceil(r) as an integer.
BigInt ceil_rational(const Rational& r);

// Exact membership threshold for a spectrum test |W| >= alpha*|set_size|,
// where alpha is given by its 8th power: the smallest T >= 0 such that
// T^8 * den(alpha8) >= num(alpha8) * set_size^8. Membership is then the
// plain integer comparison |W| >= T.
std::uint64_t walsh_threshold(std::uint64_t set_size, const Rational& alpha8);

// Decides sqrt(d2) <= sqrt(k2) - (k2)^(1/4)/100 exactly (d2, k2 >= 0).
// This is the doubling-decrement target "Dbl' <= K - sqrt(K)/100" expressed
// through the rational squares d2 = Dbl'^2 and k2 = K^2.
bool doubling_decrement_holds(const Rational& d2, const Rational& k2);

// Decides a^(1/4) + 1/10^4 <= b^(1/4) exactly (a, b > 0).
// This is the energy-increment target "1/w' <= 1/w - 10^-4" expressed
// through the rational fourth powers a = (1/w')^4 and b = (1/w)^4.
bool energy_increment_holds(const Rational& a, const Rational& b);

// sqrt(r) if it is rational, nullopt otherwise.
std::optional<Rational> exact_sqrt(const Rational& r);

std::string rational_to_string(const Rational& r);    // "p/q" (or "p" when q == 1)
Rational rational_from_string(const std::string& s);  // accepts "p/q", "p", and plain decimals

}  // namespace f2add
