#pragma once

#include "f2add/fourier.hpp"
#include "f2add/gf2.hpp"

#include <array>
#include <optional>

namespace f2add {

/// Per-set data recorded at a flatness witness frequency.
struct WitnessSetData {
    std::int64_t walsh = 0;
    bool in_spec_high = false;   // |W| >= (9/10)|A_i|
    bool in_spec_delta = false;  // |W| >= delta|A_i|
};

struct FlatnessReport {
    bool is_flat = true;
    std::optional<GF2Vector> witness;  // smallest violating frequency
    std::array<WitnessSetData, 4> witness_data{};
};

/// The 9/10 spectrum level of the coherent-flatness definition, fixed as the
/// exact rational 81/100 on squares.
SpectrumThreshold spec_high_threshold();

/// A quadruple is coherently delta-flat when every frequency is either in
/// all four 9/10-spectra or outside all four delta-spectra. The scan visits
/// frequencies in ascending order; a non-flat verdict carries the smallest
/// violator. delta may not exceed 4/5, the level the subspace-closure
/// argument needs (the pipelines use delta = 1/sqrt(2K) <= 1/sqrt(2)).
FlatnessReport coherent_flatness(const std::array<const DenseSet*, 4>& sets,
                                 const SpectrumThreshold& delta);

/// Same verdict computed under the partitioned scan even when OpenMP is off;
/// baseline for tests and the benchmark.
FlatnessReport coherent_flatness_serial(const std::array<const DenseSet*, 4>& sets,
                                        const SpectrumThreshold& delta);

/// Verdict must be unchanged when each set is translated; exposed as a test
/// hook (Walsh magnitudes are translation invariant).
bool flatness_invariance_check(const std::array<const DenseSet*, 4>& sets,
                               const std::array<GF2Vector, 4>& translates,
                               const SpectrumThreshold& delta);

}  // namespace f2add
