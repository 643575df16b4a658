#pragma once

#include "f2add/exact.hpp"
#include "f2add/extraction.hpp"
#include "f2add/flatness.hpp"
#include "f2add/gf2.hpp"
#include "f2add/stats.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace f2add {

enum class PipelineKind { FreimanPair, FreimanSingle, Bsg };

std::string pipeline_kind_name(PipelineKind kind);

/// One refinement step: the witness frequency, which slices were kept, and
/// the exact progress metric (Dbl^2 on the doubling path, w^4 on the energy
/// path).
struct TraceStep {
    GF2Vector witness;
    std::array<WitnessSetData, 4> witness_data{};
    std::array<int, 4> chosen{-1, -1, -1, -1};
    std::vector<std::uint64_t> sizes_before;
    std::vector<std::uint64_t> sizes_after;
    Rational metric_before;
    Rational metric_after;
};

struct RefinementTrace {
    std::vector<TraceStep> steps;
    std::uint64_t iterations = 0;
    std::uint64_t budget = 0;
    bool terminal_flat = false;
    /// |H| / |input set|, one per input; reported, not asserted.
    std::vector<Rational> h_ratio;
};

struct TheoremCertificate {
    BigInt lhs;
    BigInt rhs;
    bool passed = false;
    std::string form;
};

struct TheoremResult {
    PipelineKind kind = PipelineKind::FreimanPair;
    int dim = 0;
    bool fixed_k = false;
    Subspace h;
    std::vector<GF2Vector> translates;
    std::vector<std::uint64_t> intersections;  // against the original inputs
    /// Exact parameter of the final certificate: Dbl(A,B)^2 for the
    /// doubling pipelines, the user K for the energy pipeline.
    Rational k_squared;
    std::optional<Rational> k_rational;  // present on the energy pipeline
    RefinementTrace trace;
    ExtractionCertificate extraction;
    std::vector<DenseSet> inputs;
    std::vector<DenseSet> refined;  // terminal flat sets behind the extraction
    TheoremCertificate certificate;

    TheoremResult() : h(1) {}
};

struct PipelineOptions {
    /// Keep the flatness level and extraction parameter at the initial K
    /// instead of the current one. The adaptive default tests flatness at
    /// the weaker current level and certifies with the stronger current
    /// parameter; fixed mode can fail a step contract on adversarial inputs
    /// (DecrementUnavailable) where adaptive proceeds.
    bool fixed_k = false;
};

/// One doubling-decrement step: slices both sets along the witness
/// hyperplane, keeps the pair minimising Dbl^2 over the four non-empty
/// combinations, and verifies Dbl' <= K - sqrt(K)/100 exactly against
/// K = Dbl(A,B). Requires the witness from a failed flatness scan of
/// (A,B,A,B) at 1/sqrt(2K).
struct DoublingStepResult {
    DenseSet a;
    DenseSet b;
    TraceStep step;
};
DoublingStepResult doubling_decrement_step(const DenseSet& a, const DenseSet& b,
                                           GF2Vector witness);

/// One energy-increment step: among the eight even-parity slice tuples,
/// keeps the all-non-empty tuple maximising the energy and verifies
/// 1/w' <= 1/w - 10^-4 exactly.
struct EnergyStepResult {
    std::array<DenseSet, 4> sets;
    TraceStep step;
};
EnergyStepResult energy_increment_step(const std::array<const DenseSet*, 4>& sets,
                                       GF2Vector witness);

/// Doubling pipeline: refine (A,B) until (A_t,B_t,A_t,B_t) is coherently
/// flat at the current level, extract H and translates, and certify
/// |A∩(x+H)| * |B∩(y+H)| * (2K0)^2 >= |H|^2 with K0 = Dbl(A,B) exactly.
TheoremResult freiman_pipeline(const DenseSet& a, const DenseSet& b,
                               const PipelineOptions& options = {});

/// Single-set corollary: runs the pair pipeline on (A,A) and certifies
/// |A∩(x+H)| * 2K0 >= |H| with the better of the two translates.
TheoremResult single_set_freiman(const DenseSet& a, const PipelineOptions& options = {});

/// Energy pipeline: requires w(A1..A4) >= 1/K for the given rational K >= 1,
/// refines until flat, extracts, and certifies
/// prod |A_i∩(x_i+H)| * (2K)^4 >= |H|^4.
TheoremResult bsg_pipeline(const std::array<const DenseSet*, 4>& sets, const Rational& k,
                           const PipelineOptions& options = {});

}  // namespace f2add
