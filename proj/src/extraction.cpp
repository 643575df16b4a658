#include "f2add/extraction.hpp"

#include "f2add/errors.hpp"

#include <bit>

namespace f2add {

namespace {

// Packs the free (non-pivot) bits of a canonical representative into a
// dense index; ascending index order matches ascending representatives.
struct CosetIndexer {
    std::vector<int> free_pos;

    explicit CosetIndexer(const Subspace& h) {
        for (int i = 0; i < h.dim(); ++i) {
            if (!((h.pivot_mask() >> i) & 1u)) free_pos.push_back(i);
        }
    }
    std::size_t count() const { return std::size_t(1) << free_pos.size(); }
    std::size_t index_of(std::uint32_t rep) const {
        std::size_t idx = 0;
        for (std::size_t b = 0; b < free_pos.size(); ++b) {
            idx |= std::size_t((rep >> free_pos[b]) & 1u) << b;
        }
        return idx;
    }
    std::uint32_t rep_of(std::size_t idx) const {
        std::uint32_t rep = 0;
        for (std::size_t b = 0; b < free_pos.size(); ++b) {
            if ((idx >> b) & 1u) rep |= 1u << free_pos[b];
        }
        return rep;
    }
};

}  // namespace

std::pair<GF2Vector, std::uint64_t> translate_argmax(const DenseSet& a, const Subspace& h) {
    if (a.empty()) throw EmptySet("translate_argmax: empty set");
    if (a.dim() != h.dim()) throw DimensionMismatch("translate_argmax: dims differ");
    const CosetIndexer idx(h);
    std::vector<std::uint64_t> counts(idx.count(), 0);
    for (auto x : a.elements()) {
        ++counts[idx.index_of(h.reduce(x))];
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < counts.size(); ++i) {
        if (counts[i] > counts[best]) best = i;
    }
    return {GF2Vector{idx.rep_of(best), a.dim()}, counts[best]};
}

std::uint64_t coset_intersection(const DenseSet& a, const Subspace& h, GF2Vector x) {
    if (a.dim() != h.dim() || x.dim != h.dim()) {
        throw DimensionMismatch("coset_intersection: dims differ");
    }
    return a.intersection_size(h.to_dense().translated(x.bits));
}

std::vector<std::uint64_t> coset_intersection_profile(const DenseSet& a, const Subspace& h) {
    if (a.dim() != h.dim()) throw DimensionMismatch("coset_intersection_profile: dims differ");
    const auto reps = coset_representatives(h);
    const DenseSet hd = h.to_dense();
    std::vector<std::uint64_t> counts(reps.size(), 0);
#pragma omp parallel for schedule(static) if (reps.size() >= 64 && a.dim() >= 14)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(reps.size()); ++i) {
        counts[i] = a.intersection_size(hd.translated(reps[i].bits));
    }
    return counts;
}

ExtractionCertificate extract_flat(const std::array<const DenseSet*, 4>& sets,
                                   const Rational& k_fourth) {
    if (k_fourth < 1) throw DomainError("extract_flat: K must be at least 1");
    const int n = sets[0]->dim();
    for (auto* s : sets) {
        if (s->dim() != n) throw DimensionMismatch("extract_flat: dims differ");
        if (s->empty()) throw EmptySet("extract_flat: empty set");
    }

    // delta = 1/sqrt(2K), carried as delta^8 = 1/(16 K^4).
    const SpectrumThreshold delta =
        SpectrumThreshold::from_alpha_eighth(Rational(1) / (16 * k_fourth));
    const FlatnessReport flat = coherent_flatness(sets, delta);
    if (!flat.is_flat) {
        throw PreconditionNotFlat("extract_flat: quadruple is not flat at 1/sqrt(2K)",
                                  flat.witness->bits);
    }

    const EnergyValue e = energy(*sets[0], *sets[1], *sets[2], *sets[3]);
    BigInt size_prod = 1;
    for (auto* s : sets) size_prod *= s->size();
    {
        // w >= 1/K  <=>  count^4 * K^4 >= (prod sizes)^3
        const BigInt c = e.quadruple_count;
        const BigInt lhs = c * c * c * c * boost::multiprecision::numerator(k_fourth);
        const BigInt rhs =
            size_prod * size_prod * size_prod * boost::multiprecision::denominator(k_fourth);
        if (lhs < rhs) throw PreconditionLowEnergy("extract_flat: energy below 1/K");
    }

    // Joint 9/10 spectrum; flatness forces it closed under addition.
    const SpectrumThreshold high = spec_high_threshold();
    std::array<FourierTable, 4> tables;
    std::array<std::int64_t, 4> cut{};
    for (int i = 0; i < 4; ++i) {
        tables[i] = walsh_transform(*sets[i]);
        cut[i] = static_cast<std::int64_t>(high.walsh_cutoff(sets[i]->size()));
    }
    std::vector<GF2Vector> lambda;
    for (std::uint32_t xi = 0; xi < (1u << n); ++xi) {
        bool all = true;
        for (int i = 0; i < 4 && all; ++i) {
            const std::int64_t w = tables[i].walsh[xi];
            all = (w < 0 ? -w : w) >= cut[i];
        }
        if (all) lambda.push_back(GF2Vector{xi, n});
    }
    if (!is_closed_under_addition(lambda)) {
        throw SubspaceClosureViolation("extract_flat: joint spectrum not closed under addition");
    }
    const Subspace lambda_space = span_closure(lambda, n);
    if (lambda_space.size() != lambda.size()) {
        throw SubspaceClosureViolation("extract_flat: joint spectrum is not its own span");
    }

    // Plancherel cap: |Lambda|^4 * 4^4 * prod|A_i| <= 5^4 * 2^(4n).
    {
        const BigInt l4 = BigInt(lambda.size()) * lambda.size() * lambda.size() * lambda.size();
        const BigInt rhs = BigInt(625) << (4 * n);
        if (l4 * 256 * size_prod > rhs) {
            throw CertificateViolation("extract_flat: joint spectrum exceeds Plancherel cap");
        }
    }

    ExtractionCertificate cert;
    cert.h = orthogonal_complement(lambda_space);
    cert.lambda_size = lambda.size();
    cert.k_fourth = k_fourth;
    cert.k_squared = exact_sqrt(k_fourth);
    if ((std::uint64_t(1) << n) != cert.h.size() * lambda_space.size()) {
        throw CertificateViolation("extract_flat: |H| * |Lambda| != 2^n");
    }

    BigInt inter_prod = 1;
    for (int i = 0; i < 4; ++i) {
        auto [x, count] = translate_argmax(*sets[i], cert.h);
        cert.translates[i] = x;
        cert.intersections[i] = count;
        cert.set_sizes[i] = sets[i]->size();
        inter_prod *= count;
    }

    const BigInt h4 = BigInt(cert.h.size()) * cert.h.size() * cert.h.size() * cert.h.size();
    cert.hlower = h4 * 625 >= 256 * size_prod;
    cert.alower = inter_prod * 16 * boost::multiprecision::numerator(k_fourth) >=
                  h4 * boost::multiprecision::denominator(k_fourth);
    if (!cert.hlower || !cert.alower) {
        throw CertificateViolation("extract_flat: concluding inequality failed");
    }
    return cert;
}

}  // namespace f2add
