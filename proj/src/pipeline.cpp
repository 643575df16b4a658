#include "f2add/pipeline.hpp"

#include "f2add/errors.hpp"

namespace f2add {

namespace {

Rational square(const Rational& r) { return r * r; }

BigInt fourth_power(const BigInt& x) { return x * x * x * x; }

// w >= 1/K with K given by its rational fourth power:
// count^4 * num(K^4) >= (prod sizes)^3 * den(K^4).
bool energy_at_least_inverse(const EnergyValue& e, const Rational& k_fourth) {
    BigInt prod = 1;
    for (auto s : e.sizes) prod *= s;
    const BigInt lhs = fourth_power(e.quadruple_count) * boost::multiprecision::numerator(k_fourth);
    const BigInt rhs = prod * prod * prod * boost::multiprecision::denominator(k_fourth);
    return lhs >= rhs;
}

// Strict w(x) > w(y) via count_x^4 (prod_y)^3 > count_y^4 (prod_x)^3.
bool omega_greater(const EnergyValue& x, const EnergyValue& y) {
    BigInt px = 1, py = 1;
    for (auto s : x.sizes) px *= s;
    for (auto s : y.sizes) py *= s;
    return fourth_power(x.quadruple_count) * (py * py * py) >
           fourth_power(y.quadruple_count) * (px * px * px);
}

GF2Vector better_translate(const DenseSet& original, const Subspace& h, GF2Vector t1,
                           GF2Vector t2, std::uint64_t& count_out) {
    const std::uint64_t c1 = coset_intersection(original, h, t1);
    const std::uint64_t c2 = coset_intersection(original, h, t2);
    if (c2 > c1 || (c2 == c1 && t2.bits < t1.bits)) {
        count_out = c2;
        return t2;
    }
    count_out = c1;
    return t1;
}

std::uint64_t doubling_budget(const Rational& k2_initial) {
    // ceil(200 * sqrt(K0)) + 1, with sqrt(K0) = k2^(1/4).
    const BigInt m = kth_root_ceil_of_rational(k2_initial * BigInt(1600000000), 4);
    return m.convert_to<std::uint64_t>() + 1;
}

}  // namespace

std::string pipeline_kind_name(PipelineKind kind) {
    switch (kind) {
        case PipelineKind::FreimanPair: return "freiman";
        case PipelineKind::FreimanSingle: return "freiman_single";
        case PipelineKind::Bsg: return "bsg";
    }
    return "unknown";
}

DoublingStepResult doubling_decrement_step(const DenseSet& a, const DenseSet& b,
                                           GF2Vector witness) {
    if (witness.dim != a.dim()) throw DimensionMismatch("doubling step: dims differ");
    if (witness.bits == 0) throw ZeroFrequency("doubling step: zero witness");
    const Rational k2 = doubling(a, b).squared();

    const DenseSet a_slices[2] = {slice(a, witness, 0), slice(a, witness, 1)};
    const DenseSet b_slices[2] = {slice(b, witness, 0), slice(b, witness, 1)};

    int best_i = -1, best_j = -1;
    Rational best_d2;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            if (a_slices[i].empty() || b_slices[j].empty()) continue;
            const Rational d2 = doubling(a_slices[i], b_slices[j]).squared();
            if (best_i < 0 || d2 < best_d2) {
                best_i = i;
                best_j = j;
                best_d2 = d2;
            }
        }
    }
    if (best_i < 0) throw EmptySlices("doubling step: every slice pair is empty");
    if (!doubling_decrement_holds(best_d2, k2)) {
        throw DecrementUnavailable(
            "doubling step: no slice pair meets Dbl' <= K - sqrt(K)/100; "
            "input was flat at this level or there is a counting bug");
    }

    TraceStep step;
    step.witness = witness;
    step.chosen = {best_i, best_j, -1, -1};
    step.sizes_before = {a.size(), b.size()};
    step.sizes_after = {a_slices[best_i].size(), b_slices[best_j].size()};
    step.metric_before = k2;
    step.metric_after = best_d2;
    return DoublingStepResult{a_slices[best_i], b_slices[best_j], std::move(step)};
}

EnergyStepResult energy_increment_step(const std::array<const DenseSet*, 4>& sets,
                                       GF2Vector witness) {
    if (witness.dim != sets[0]->dim()) throw DimensionMismatch("energy step: dims differ");
    if (witness.bits == 0) throw ZeroFrequency("energy step: zero witness");
    const EnergyValue before = energy(*sets[0], *sets[1], *sets[2], *sets[3]);
    if (before.quadruple_count == 0) {
        throw IncrementUnavailable("energy step: input quadruple has zero energy");
    }

    std::array<std::array<DenseSet, 2>, 4> slices;
    for (int i = 0; i < 4; ++i) {
        slices[i][0] = slice(*sets[i], witness, 0);
        slices[i][1] = slice(*sets[i], witness, 1);
    }

    int best_mask = -1;
    EnergyValue best;
    for (int mask = 0; mask < 16; ++mask) {
        const int j1 = (mask >> 3) & 1, j2 = (mask >> 2) & 1, j3 = (mask >> 1) & 1,
                  j4 = mask & 1;
        if ((j1 ^ j2 ^ j3 ^ j4) != 0) continue;
        if (slices[0][j1].empty() || slices[1][j2].empty() || slices[2][j3].empty() ||
            slices[3][j4].empty()) {
            continue;
        }
        EnergyValue e = energy(slices[0][j1], slices[1][j2], slices[2][j3], slices[3][j4]);
        if (best_mask < 0 || omega_greater(e, best)) {
            best_mask = mask;
            best = std::move(e);
        }
    }
    if (best_mask < 0) throw EmptySlices("energy step: every admissible slice tuple is empty");
    if (best.quadruple_count == 0 ||
        !energy_increment_holds(best.inverse_omega4(), before.inverse_omega4())) {
        throw IncrementUnavailable(
            "energy step: no slice tuple meets 1/w' <= 1/w - 10^-4; "
            "input was flat at this level or there is a counting bug");
    }

    TraceStep step;
    step.witness = witness;
    step.chosen = {(best_mask >> 3) & 1, (best_mask >> 2) & 1, (best_mask >> 1) & 1,
                   best_mask & 1};
    step.sizes_before = {sets[0]->size(), sets[1]->size(), sets[2]->size(), sets[3]->size()};
    step.sizes_after = {best.sizes[0], best.sizes[1], best.sizes[2], best.sizes[3]};
    step.metric_before = before.omega4();
    step.metric_after = best.omega4();

    EnergyStepResult out;
    out.sets = {std::move(slices[0][step.chosen[0]]), std::move(slices[1][step.chosen[1]]),
                std::move(slices[2][step.chosen[2]]), std::move(slices[3][step.chosen[3]])};
    out.step = std::move(step);
    return out;
}

TheoremResult freiman_pipeline(const DenseSet& a, const DenseSet& b,
                               const PipelineOptions& options) {
    if (a.dim() != b.dim()) throw DimensionMismatch("freiman_pipeline: dims differ");
    if (a.empty() || b.empty()) throw EmptySet("freiman_pipeline: empty input");

    const Rational k2_initial = doubling(a, b).squared();
    const std::uint64_t budget = doubling_budget(k2_initial);

    TheoremResult result;
    result.kind = PipelineKind::FreimanPair;
    result.dim = a.dim();
    result.fixed_k = options.fixed_k;
    result.k_squared = k2_initial;
    result.inputs = {a, b};
    result.trace.budget = budget;

    DenseSet cur_a = a, cur_b = b;
    while (true) {
        const Rational k2_t = doubling(cur_a, cur_b).squared();
        const Rational k4 = options.fixed_k ? square(k2_initial) : square(k2_t);
        const SpectrumThreshold delta =
            SpectrumThreshold::from_alpha_eighth(Rational(1) / (16 * k4));
        const std::array<const DenseSet*, 4> quad = {&cur_a, &cur_b, &cur_a, &cur_b};
        const FlatnessReport flat = coherent_flatness(quad, delta);

        if (flat.is_flat) {
            // w(A,B,A,B) >= 1/Dbl(A,B) is the Cauchy-Schwarz route; it must
            // hold identically, and with it the extraction precondition.
            const CauchySchwarzReport cs = cauchy_schwarz_bound(cur_a, cur_b);
            if (!cs.holds) {
                throw CertificateViolation("freiman_pipeline: Cauchy-Schwarz route failed");
            }
            result.extraction = extract_flat(quad, k4);
            result.refined = {cur_a, cur_b};
            result.trace.terminal_flat = true;

            std::uint64_t ia = 0, ib = 0;
            const GF2Vector x = better_translate(a, result.extraction.h,
                                                 result.extraction.translates[0],
                                                 result.extraction.translates[2], ia);
            const GF2Vector y = better_translate(b, result.extraction.h,
                                                 result.extraction.translates[1],
                                                 result.extraction.translates[3], ib);
            result.h = result.extraction.h;
            result.translates = {x, y};
            result.intersections = {ia, ib};

            const BigInt h2 = BigInt(result.h.size()) * result.h.size();
            result.certificate.lhs =
                BigInt(ia) * ib * 4 * boost::multiprecision::numerator(k2_initial);
            result.certificate.rhs = h2 * boost::multiprecision::denominator(k2_initial);
            result.certificate.passed = result.certificate.lhs >= result.certificate.rhs;
            result.certificate.form = "|A∩(x+H)|·|B∩(y+H)|·(2K)² ≥ |H|²";
            if (!result.certificate.passed) {
                throw CertificateViolation("freiman_pipeline: final certificate failed");
            }
            result.trace.h_ratio = {Rational(result.h.size(), a.size()),
                                    Rational(result.h.size(), b.size())};
            return result;
        }

        DoublingStepResult stepped = doubling_decrement_step(cur_a, cur_b, *flat.witness);
        stepped.step.witness_data = flat.witness_data;
        result.trace.steps.push_back(std::move(stepped.step));
        cur_a = std::move(stepped.a);
        cur_b = std::move(stepped.b);
        if (++result.trace.iterations > budget) {
            throw IterationBudgetExceeded("freiman_pipeline: exceeded ceil(200*sqrt(K))+1 steps");
        }
    }
}

TheoremResult single_set_freiman(const DenseSet& a, const PipelineOptions& options) {
    TheoremResult result = freiman_pipeline(a, a, options);
    result.kind = PipelineKind::FreimanSingle;
    result.inputs = {a};

    std::uint64_t best_count = 0;
    const GF2Vector best = better_translate(a, result.h, result.translates[0],
                                            result.translates[1], best_count);
    result.translates = {best};
    result.intersections = {best_count};
    const BigInt h2 = BigInt(result.h.size()) * result.h.size();
    result.certificate.lhs = BigInt(best_count) * best_count * 4 *
                             boost::multiprecision::numerator(result.k_squared);
    result.certificate.rhs = h2 * boost::multiprecision::denominator(result.k_squared);
    result.certificate.passed = result.certificate.lhs >= result.certificate.rhs;
    result.certificate.form = "|A∩(x+H)|·2K ≥ |H| (squared)";
    if (!result.certificate.passed) {
        throw CertificateViolation("single_set_freiman: final certificate failed");
    }
    result.trace.h_ratio = {Rational(result.h.size(), a.size())};
    return result;
}

TheoremResult bsg_pipeline(const std::array<const DenseSet*, 4>& sets, const Rational& k,
                           const PipelineOptions& options) {
    if (k < 1) throw BadSpec("bsg_pipeline: K must be at least 1");
    const int n = sets[0]->dim();
    for (auto* s : sets) {
        if (s->dim() != n) throw DimensionMismatch("bsg_pipeline: dims differ");
        if (s->empty()) throw EmptySet("bsg_pipeline: empty input");
    }
    const Rational k4_user = square(square(k));
    {
        const EnergyValue e0 = energy(*sets[0], *sets[1], *sets[2], *sets[3]);
        if (!energy_at_least_inverse(e0, k4_user)) {
            throw PreconditionLowEnergy("bsg_pipeline: energy below 1/K");
        }
    }
    const std::uint64_t budget =
        ceil_rational((k - 1) * 10000).convert_to<std::uint64_t>() + 1;

    TheoremResult result;
    result.kind = PipelineKind::Bsg;
    result.dim = n;
    result.fixed_k = options.fixed_k;
    result.k_rational = k;
    result.k_squared = square(k);
    result.inputs = {*sets[0], *sets[1], *sets[2], *sets[3]};
    result.trace.budget = budget;

    std::array<DenseSet, 4> cur = {*sets[0], *sets[1], *sets[2], *sets[3]};
    while (true) {
        const std::array<const DenseSet*, 4> quad = {&cur[0], &cur[1], &cur[2], &cur[3]};
        const EnergyValue e_t = energy(cur[0], cur[1], cur[2], cur[3]);
        // Adaptive parameter K_t = 1/w_t; only its fourth power is rational.
        const Rational k4 = options.fixed_k ? k4_user : e_t.inverse_omega4();
        const SpectrumThreshold delta =
            SpectrumThreshold::from_alpha_eighth(Rational(1) / (16 * k4));
        const FlatnessReport flat = coherent_flatness(quad, delta);

        if (flat.is_flat) {
            result.extraction = extract_flat(quad, k4);
            result.refined = {cur[0], cur[1], cur[2], cur[3]};
            result.trace.terminal_flat = true;
            result.h = result.extraction.h;

            BigInt prod = 1;
            result.translates.clear();
            result.intersections.clear();
            for (int i = 0; i < 4; ++i) {
                const GF2Vector x = result.extraction.translates[i];
                const std::uint64_t c = coset_intersection(result.inputs[i], result.h, x);
                result.translates.push_back(x);
                result.intersections.push_back(c);
                prod *= c;
                result.trace.h_ratio.push_back(Rational(result.h.size(), sets[i]->size()));
            }
            const BigInt h4 = fourth_power(BigInt(result.h.size()));
            result.certificate.lhs = prod * 16 * boost::multiprecision::numerator(k4_user);
            result.certificate.rhs = h4 * boost::multiprecision::denominator(k4_user);
            result.certificate.passed = result.certificate.lhs >= result.certificate.rhs;
            result.certificate.form = "∏|A_i∩(x_i+H)|·(2K)⁴ ≥ |H|⁴";
            if (!result.certificate.passed) {
                throw CertificateViolation("bsg_pipeline: final certificate failed");
            }
            return result;
        }

        EnergyStepResult stepped = energy_increment_step(quad, *flat.witness);
        stepped.step.witness_data = flat.witness_data;
        result.trace.steps.push_back(std::move(stepped.step));
        cur = std::move(stepped.sets);
        if (++result.trace.iterations > budget) {
            throw IterationBudgetExceeded("bsg_pipeline: exceeded ceil(10^4(K-1))+1 steps");
        }
    }
}

}  // namespace f2add
