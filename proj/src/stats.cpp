#include "f2add/stats.hpp"

#include "f2add/errors.hpp"

#include <cmath>

namespace f2add {

namespace {

void require_pair(const DenseSet& a, const DenseSet& b, const char* who) {
    if (a.dim() != b.dim()) throw DimensionMismatch(std::string(who) + ": dims differ");
    if (a.empty() || b.empty()) throw EmptySet(std::string(who) + ": empty set");
}

using Int128 = __int128;

}  // namespace

DenseSet sumset(const DenseSet& a, const DenseSet& b) {
    require_pair(a, b, "sumset");
    const DenseSet& big = (a.size() >= b.size()) ? a : b;
    const DenseSet& small = (a.size() >= b.size()) ? b : a;
    const auto elems = small.elements();
    const std::size_t nwords = big.words().size();
    std::vector<std::uint64_t> acc(nwords, 0);
#pragma omp parallel if (elems.size() >= 64 && big.dim() >= 14)
    {
        std::vector<std::uint64_t> local(nwords, 0);
#pragma omp for schedule(static) nowait
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(elems.size()); ++i) {
            const DenseSet shifted = big.translated(elems[i]);
            const auto& w = shifted.words();
            for (std::size_t k = 0; k < nwords; ++k) local[k] |= w[k];
        }
#pragma omp critical
        {
            for (std::size_t k = 0; k < nwords; ++k) acc[k] |= local[k];
        }
    }
    return DenseSet::from_words(big.dim(), std::move(acc));
}

DenseSet sumset_reference(const DenseSet& a, const DenseSet& b) {
    require_pair(a, b, "sumset");
    DenseSet out(a.dim());
    for (auto x : a.elements()) {
        for (auto y : b.elements()) out.insert(x ^ y);
    }
    return out;
}

double DoublingValue::approx() const {
    return sumset_size / std::sqrt(double(size_a) * double(size_b));
}

DoublingValue doubling(const DenseSet& a, const DenseSet& b) {
    require_pair(a, b, "doubling");
    return DoublingValue{sumset(a, b).size(), a.size(), b.size()};
}

Rational EnergyValue::omega4() const {
    BigInt prod = 1;
    for (auto s : sizes) prod *= s;
    const BigInt c4 = quadruple_count * quadruple_count * quadruple_count * quadruple_count;
    return Rational(c4, prod * prod * prod);
}

Rational EnergyValue::inverse_omega4() const {
    if (quadruple_count == 0) throw DomainError("inverse_omega4: zero energy");
    BigInt prod = 1;
    for (auto s : sizes) prod *= s;
    const BigInt c4 = quadruple_count * quadruple_count * quadruple_count * quadruple_count;
    return Rational(prod * prod * prod, c4);
}

double EnergyValue::omega_approx() const {
    double prod = 1;
    for (auto s : sizes) prod *= double(s);
    return quadruple_count.convert_to<double>() / std::pow(prod, 0.75);
}

EnergyValue energy(const DenseSet& a1, const DenseSet& a2, const DenseSet& a3,
                   const DenseSet& a4) {
    const DenseSet* sets[4] = {&a1, &a2, &a3, &a4};
    for (auto* s : sets) {
        if (s->dim() != a1.dim()) throw DimensionMismatch("energy: dims differ");
        if (s->empty()) throw EmptySet("energy: empty set");
    }
    const FourierTable t1 = walsh_transform(a1);
    const FourierTable t2 = walsh_transform(a2);
    const FourierTable t3 = walsh_transform(a3);
    const FourierTable t4 = walsh_transform(a4);
    const std::int64_t n = static_cast<std::int64_t>(t1.walsh.size());

    // |W| <= 2^24, so a term fits in 96 bits and the sum in 120; plain
    // integer addition keeps any thread schedule bit-exact.
    Int128 total = 0;
#pragma omp parallel if (n >= (1 << 16))
    {
        Int128 local = 0;
#pragma omp for schedule(static) nowait
        for (std::int64_t xi = 0; xi < n; ++xi) {
            const Int128 p = Int128(t1.walsh[xi]) * t2.walsh[xi];
            local += p * t3.walsh[xi] * t4.walsh[xi];
        }
#pragma omp critical
        total += local;
    }

    if (total < 0 || (total & (n - 1)) != 0) {
        throw CertificateViolation("energy: transform identity gave a non-integral count");
    }
    const Int128 count = total >> a1.dim();
    BigInt big = BigInt(static_cast<std::uint64_t>(count >> 64)) << 64 |
                 BigInt(static_cast<std::uint64_t>(count));
    return EnergyValue{std::move(big), {a1.size(), a2.size(), a3.size(), a4.size()}};
}

BigInt brute_energy(const DenseSet& a1, const DenseSet& a2, const DenseSet& a3,
                    const DenseSet& a4) {
    const DenseSet* sets[4] = {&a1, &a2, &a3, &a4};
    for (auto* s : sets) {
        if (s->dim() != a1.dim()) throw DimensionMismatch("brute_energy: dims differ");
        if (s->empty()) throw EmptySet("brute_energy: empty set");
    }
    if (BigInt(a1.size()) * a2.size() * a3.size() > 100000000) {
        throw TooLarge("brute_energy: loop bound above 10^8");
    }
    const auto e1 = a1.elements();
    const auto e2 = a2.elements();
    const auto e3 = a3.elements();
    std::uint64_t count = 0;
    for (auto x : e1) {
        for (auto y : e2) {
            const std::uint32_t xy = x ^ y;
            for (auto z : e3) {
                count += a4.contains(xy ^ z);
            }
        }
    }
    return BigInt(count);
}

CauchySchwarzReport cauchy_schwarz_bound(const DenseSet& a, const DenseSet& b) {
    require_pair(a, b, "cauchy_schwarz_bound");
    const EnergyValue e = energy(a, b, a, b);
    const std::uint64_t s = sumset(a, b).size();
    const BigInt ab = BigInt(a.size()) * b.size();
    CauchySchwarzReport r;
    r.lhs = e.quadruple_count * s;
    r.rhs = ab * ab;
    r.holds = r.lhs >= r.rhs;
    return r;
}

}  // namespace f2add
