#include "f2add/fourier.hpp"

#include "f2add/errors.hpp"

#include <bit>
#include <ostream>

namespace f2add {

namespace {

// Below this size the butterfly is memory-trivial and threading only adds
// overhead.
constexpr int kParallelDim = 16;

std::vector<std::int64_t> indicator(const DenseSet& a) {
    const std::uint32_t n = a.domain_size();
    std::vector<std::int64_t> f(n, 0);
    const auto& words = a.words();
    for (std::size_t wi = 0; wi < words.size(); ++wi) {
        std::uint64_t w = words[wi];
        while (w) {
            const int b = std::countr_zero(w);
            f[(wi << 6) | b] = 1;
            w &= w - 1;
        }
    }
    return f;
}

void butterfly(std::vector<std::int64_t>& f, int dim, bool parallel) {
    const std::int64_t pairs = std::int64_t(f.size()) / 2;
    for (int s = 0; s < dim; ++s) {
        const std::uint32_t half = 1u << s;
#pragma omp parallel for schedule(static) if (parallel)
        for (std::int64_t j = 0; j < pairs; ++j) {
            const std::uint32_t i =
                ((static_cast<std::uint32_t>(j) >> s) << (s + 1)) |
                (static_cast<std::uint32_t>(j) & (half - 1));
            const std::int64_t lo = f[i];
            const std::int64_t hi = f[i + half];
            f[i] = lo + hi;
            f[i + half] = lo - hi;
        }
    }
}

FourierTable transform_impl(const DenseSet& a, bool parallel) {
    auto f = indicator(a);
    butterfly(f, a.dim(), parallel && a.dim() >= kParallelDim);
    return FourierTable{a.dim(), static_cast<std::int64_t>(a.size()), std::move(f)};
}

}  // namespace

FourierTable walsh_transform(const DenseSet& a) { return transform_impl(a, true); }

FourierTable walsh_transform_serial(const DenseSet& a) { return transform_impl(a, false); }

FourierTable naive_walsh(const DenseSet& a) {
    if (a.dim() > 14) throw DimensionTooLarge("naive_walsh: oracle capped at n <= 14");
    const std::uint32_t n = a.domain_size();
    const auto elems = a.elements();
    std::vector<std::int64_t> w(n, 0);
    for (std::uint32_t xi = 0; xi < n; ++xi) {
        std::int64_t s = 0;
        for (auto x : elems) {
            s += (std::popcount(x & xi) & 1) ? -1 : 1;
        }
        w[xi] = s;
    }
    return FourierTable{a.dim(), static_cast<std::int64_t>(a.size()), std::move(w)};
}

SpectrumThreshold::SpectrumThreshold(Rational alpha8) : alpha8_(std::move(alpha8)) {
    if (alpha8_ <= 0 || alpha8_ > 1) {
        throw DomainError("spectrum threshold: alpha must lie in (0, 1]");
    }
}

SpectrumThreshold SpectrumThreshold::from_alpha(const Rational& alpha) {
    Rational a2 = alpha * alpha;
    return SpectrumThreshold(a2 * a2 * a2 * a2);
}

SpectrumThreshold SpectrumThreshold::from_alpha_squared(const Rational& alpha2) {
    return SpectrumThreshold(alpha2 * alpha2 * alpha2 * alpha2);
}

SpectrumThreshold SpectrumThreshold::from_alpha_fourth(const Rational& alpha4) {
    return SpectrumThreshold(alpha4 * alpha4);
}

SpectrumThreshold SpectrumThreshold::from_alpha_eighth(const Rational& alpha8) {
    return SpectrumThreshold(alpha8);
}

std::uint64_t SpectrumThreshold::walsh_cutoff(std::uint64_t set_size) const {
    return walsh_threshold(set_size, alpha8_);
}

std::vector<GF2Vector> spectrum(const FourierTable& table, const SpectrumThreshold& alpha) {
    if (table.source_cardinality == 0) throw EmptySet("spectrum: empty set");
    const std::int64_t cutoff =
        static_cast<std::int64_t>(alpha.walsh_cutoff(table.source_cardinality));
    std::vector<GF2Vector> out;
    for (std::uint32_t xi = 0; xi < table.walsh.size(); ++xi) {
        const std::int64_t w = table.walsh[xi];
        if (w >= cutoff || -w >= cutoff) out.push_back(GF2Vector{xi, table.dim});
    }
    return out;
}

std::vector<GF2Vector> spectrum(const DenseSet& a, const SpectrumThreshold& alpha) {
    if (a.empty()) throw EmptySet("spectrum: empty set");
    return spectrum(walsh_transform(a), alpha);
}

bool bias_check(const DenseSet& a, GF2Vector xi, const SpectrumThreshold& alpha) {
    if (xi.bits == 0) throw ZeroFrequency("bias_check: zero frequency");
    if (a.empty()) throw EmptySet("bias_check: empty set");
    const std::uint64_t s0 = slice(a, xi, 0).size();
    const std::int64_t m = static_cast<std::int64_t>(a.size());
    // The Walsh coefficient at xi equals 2*s0 - |A|, so the bias condition
    // and spectrum membership are the same integer inequality.
    const std::int64_t dev = 2 * static_cast<std::int64_t>(s0) - m;
    const std::int64_t cutoff = static_cast<std::int64_t>(alpha.walsh_cutoff(a.size()));
    return dev >= cutoff || -dev >= cutoff;
}

void dump_walsh_csv(const FourierTable& table, std::ostream& os) {
    os << "xi,walsh\n";
    for (std::uint32_t xi = 0; xi < table.walsh.size(); ++xi) {
        os << xi << ',' << table.walsh[xi] << '\n';
    }
}

}  // namespace f2add
