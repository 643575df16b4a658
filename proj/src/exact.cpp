#include "f2add/exact.hpp"

#include "f2add/errors.hpp"

#include <stdexcept>

namespace f2add {

namespace {

BigInt pow_int(const BigInt& x, unsigned k) {
    BigInt r = 1;
    for (unsigned i = 0; i < k; ++i) r *= x;
    return r;
}

}  // namespace

BigInt kth_root_floor(const BigInt& x, unsigned k) {
    if (x < 0) throw DomainError("kth_root_floor: negative argument");
    if (k == 0) throw DomainError("kth_root_floor: zeroth root");
    if (x == 0 || x == 1 || k == 1) return x;

    // Newton iteration with a bit-length based starting point.
    const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(x)) + 1;
    BigInt r = BigInt(1) << (bits / k + 1);
    while (true) {
        BigInt rk1 = pow_int(r, k - 1);
        BigInt next = ((k - 1) * r + x / rk1) / k;
        if (next >= r) break;
        r = next;
    }
    while (pow_int(r, k) > x) --r;
    while (pow_int(r + 1, k) <= x) ++r;
    return r;
}

BigInt kth_root_ceil_of_rational(const Rational& r, unsigned k) {
    if (r < 0) throw DomainError("kth_root_ceil_of_rational: negative argument");
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    BigInt m = kth_root_floor(num / den, k);
    while (pow_int(m, k) * den < num) ++m;
    return m;
}

BigInt ceil_rational(const Rational& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    BigInt q = num / den;  // truncates toward zero
    if (q * den < num) ++q;
    return q;
}

std::uint64_t walsh_threshold(std::uint64_t set_size, const Rational& alpha8) {
    if (alpha8 <= 0) throw DomainError("walsh_threshold: alpha must be positive");
    const BigInt num = boost::multiprecision::numerator(alpha8);
    const BigInt den = boost::multiprecision::denominator(alpha8);
    const BigInt rhs = num * pow_int(BigInt(set_size), 8);
    BigInt t = kth_root_floor(rhs / den, 8);
    while (pow_int(t, 8) * den < rhs) ++t;
    return static_cast<std::uint64_t>(t);
}

// The radical chain: with k = sqrt(k2), d = sqrt(d2), t = k2^(1/4),
//   d <= k - t/100
// requires k >= d, then squares to
//   2*sqrt(k2*d2) + sqrt(k2)/10^4 <= k2 + d2,
// squares again (the cross term rationalises to k2*sqrt(d2)) to
//   (4*k2/10^4)*sqrt(d2) <= (k2+d2)^2 - 4*k2*d2 - k2/10^8 =: L,
// and a final squaring decides it. Every step preserves equivalence because
// both sides are non-negative at the point of squaring.
bool doubling_decrement_holds(const Rational& d2, const Rational& k2) {
    if (d2 < 0 || k2 < 0) throw DomainError("doubling_decrement_holds: negative square");
    if (d2 > k2) return false;
    const Rational L = (k2 + d2) * (k2 + d2) - 4 * k2 * d2 - k2 / 100000000;
    if (L < 0) return false;
    const Rational R2 = 16 * k2 * k2 / 100000000;  // (4*k2/10^4)^2
    return L * L >= R2 * d2;
}

// With u = a^(1/4) and c = 10^-4, expanding (u + c)^4 <= b leaves
//   4c*u^3 + 6c^2*u^2 + 4c^3*u <= b - a - c^4 =: D.
// Substituting u^2 = sqrt(a) and isolating the remaining radical twice gives
// a rational comparison; sign guards keep each squaring an equivalence.
bool energy_increment_holds(const Rational& a, const Rational& b) {
    if (a <= 0 || b <= 0) throw DomainError("energy_increment_holds: non-positive argument");
    const Rational c(1, 10000);
    const Rational A = 4 * c, B = 6 * c * c, C = 4 * c * c * c;
    const Rational D = b - a - c * c * c * c;
    if (D < 0) return false;
    // u*(A*u^2 + C) <= D - B*sqrt(a); the right side must be non-negative.
    if (D * D < B * B * a) return false;
    const Rational E = A * A * a + C * C + 2 * B * D;
    const Rational F = D * D + B * B * a - 2 * A * C * a;
    if (F < 0) return false;
    return E * E * a <= F * F;
}

std::optional<Rational> exact_sqrt(const Rational& r) {
    if (r < 0) return std::nullopt;
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    const BigInt sn = kth_root_floor(num, 2);
    const BigInt sd = kth_root_floor(den, 2);
    if (sn * sn != num || sd * sd != den) return std::nullopt;
    return Rational(sn, sd);
}

std::string rational_to_string(const Rational& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Rational rational_from_string(const std::string& s) {
    if (s.empty()) throw BadSpec("empty rational literal");
    const auto slash = s.find('/');
    try {
        if (slash != std::string::npos) {
            BigInt num(s.substr(0, slash));
            BigInt den(s.substr(slash + 1));
            if (den == 0) throw BadSpec("zero denominator: " + s);
            return Rational(num, den);
        }
        const auto dot = s.find('.');
        if (dot != std::string::npos) {
            // decimal literal: digits.digits
            std::string head = s.substr(0, dot), tail = s.substr(dot + 1);
            bool neg = !head.empty() && head[0] == '-';
            if (neg) head = head.substr(1);
            if (head.empty()) head = "0";
            BigInt scale = 1;
            for (std::size_t i = 0; i < tail.size(); ++i) scale *= 10;
            BigInt num = BigInt(head) * scale + (tail.empty() ? BigInt(0) : BigInt(tail));
            if (neg) num = -num;
            return Rational(num, scale);
        }
        return Rational(BigInt(s));
    } catch (const std::exception& e) {
        throw BadSpec("bad rational literal '" + s + "': " + e.what());
    }
}

}  // namespace f2add
