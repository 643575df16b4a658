#include "f2add/flatness.hpp"

#include "f2add/errors.hpp"

#include <cstdlib>
#include <limits>

namespace f2add {

namespace {

constexpr std::uint32_t kNoWitness = std::numeric_limits<std::uint32_t>::max();

struct ScanInput {
    std::array<FourierTable, 4> tables;
    std::array<std::int64_t, 4> cut_high;
    std::array<std::int64_t, 4> cut_delta;
    int dim = 0;
};

ScanInput prepare(const std::array<const DenseSet*, 4>& sets, const SpectrumThreshold& delta) {
    // (4/5)^8: larger deltas would break the closure of the joint 9/10
    // spectrum under addition.
    static const Rational kMaxDelta8(65536, 390625);
    if (delta.alpha8() > kMaxDelta8) {
        throw DomainError("coherent_flatness: delta must be at most 4/5");
    }
    const int dim = sets[0]->dim();
    for (auto* s : sets) {
        if (s->dim() != dim) throw DimensionMismatch("coherent_flatness: dims differ");
        if (s->empty()) throw EmptySet("coherent_flatness: empty set");
    }
    ScanInput in;
    in.dim = dim;
    const SpectrumThreshold high = spec_high_threshold();
    for (int i = 0; i < 4; ++i) {
        in.tables[i] = walsh_transform(*sets[i]);
        in.cut_high[i] = static_cast<std::int64_t>(high.walsh_cutoff(sets[i]->size()));
        in.cut_delta[i] = static_cast<std::int64_t>(delta.walsh_cutoff(sets[i]->size()));
    }
    return in;
}

inline bool violates(const ScanInput& in, std::uint32_t xi) {
    bool all_high = true, any_delta = false;
    for (int i = 0; i < 4; ++i) {
        const std::int64_t w = in.tables[i].walsh[xi];
        const std::int64_t m = w < 0 ? -w : w;
        all_high = all_high && m >= in.cut_high[i];
        any_delta = any_delta || m >= in.cut_delta[i];
    }
    return !all_high && any_delta;
}

FlatnessReport report_for(const ScanInput& in, std::uint32_t witness) {
    FlatnessReport r;
    if (witness == kNoWitness) return r;
    r.is_flat = false;
    r.witness = GF2Vector{witness, in.dim};
    for (int i = 0; i < 4; ++i) {
        const std::int64_t w = in.tables[i].walsh[witness];
        const std::int64_t m = w < 0 ? -w : w;
        r.witness_data[i] = WitnessSetData{w, m >= in.cut_high[i], m >= in.cut_delta[i]};
    }
    return r;
}

}  // namespace

SpectrumThreshold spec_high_threshold() {
    return SpectrumThreshold::from_alpha_squared(Rational(81, 100));
}

FlatnessReport coherent_flatness(const std::array<const DenseSet*, 4>& sets,
                                 const SpectrumThreshold& delta) {
    const ScanInput in = prepare(sets, delta);
    const std::int64_t n = std::int64_t(1) << in.dim;
    std::uint32_t witness = kNoWitness;
#pragma omp parallel for schedule(static) reduction(min : witness) if (n >= (1 << 16))
    for (std::int64_t xi = 0; xi < n; ++xi) {
        const auto x = static_cast<std::uint32_t>(xi);
        if (x < witness && violates(in, x)) witness = x;
    }
    return report_for(in, witness);
}

FlatnessReport coherent_flatness_serial(const std::array<const DenseSet*, 4>& sets,
                                        const SpectrumThreshold& delta) {
    const ScanInput in = prepare(sets, delta);
    const std::uint32_t n = 1u << in.dim;
    for (std::uint32_t xi = 0; xi < n; ++xi) {
        if (violates(in, xi)) return report_for(in, xi);
    }
    return report_for(in, kNoWitness);
}

bool flatness_invariance_check(const std::array<const DenseSet*, 4>& sets,
                               const std::array<GF2Vector, 4>& translates,
                               const SpectrumThreshold& delta) {
    const FlatnessReport before = coherent_flatness(sets, delta);
    std::array<DenseSet, 4> moved;
    for (int i = 0; i < 4; ++i) {
        if (translates[i].dim != sets[i]->dim()) {
            throw DimensionMismatch("flatness_invariance_check: dims differ");
        }
        moved[i] = sets[i]->translated(translates[i].bits);
    }
    const FlatnessReport after =
        coherent_flatness({&moved[0], &moved[1], &moved[2], &moved[3]}, delta);
    return before.is_flat == after.is_flat;
}

}  // namespace f2add
