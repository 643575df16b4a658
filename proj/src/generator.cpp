#include "f2add/generator.hpp"

#include "f2add/errors.hpp"

#include <set>

namespace f2add {

std::uint64_t rng_below(std::mt19937_64& g, std::uint64_t bound) {
    if (bound == 0) throw DomainError("rng_below: zero bound");
    // std::uniform_int_distribution is implementation-defined; plain
    // rejection keeps corpora reproducible across standard libraries.
    const std::uint64_t limit = ~std::uint64_t(0) - (~std::uint64_t(0) % bound);
    std::uint64_t v;
    do {
        v = g();
    } while (v >= limit);
    return v % bound;
}

std::string family_name(Family f) {
    switch (f) {
        case Family::Subspace: return "subspace";
        case Family::Affine: return "affine";
        case Family::CosetUnion: return "coset_union";
        case Family::SubspacePlusNoise: return "subspace_plus_noise";
        case Family::IndependentVectors: return "independent_vectors";
        case Family::Random: return "random";
    }
    return "unknown";
}

Family family_from_string(const std::string& s) {
    if (s == "subspace") return Family::Subspace;
    if (s == "affine") return Family::Affine;
    if (s == "coset_union") return Family::CosetUnion;
    if (s == "subspace_plus_noise") return Family::SubspacePlusNoise;
    if (s == "independent_vectors") return Family::IndependentVectors;
    if (s == "random") return Family::Random;
    throw BadSpec("unknown generator family: " + s);
}

namespace {

Subspace random_subspace(std::mt19937_64& g, int dim, int rank) {
    Subspace s(dim);
    const std::uint64_t domain = std::uint64_t(1) << dim;
    std::vector<std::uint32_t> gens;
    while (static_cast<int>(Subspace::span_of(dim, gens).rank()) < rank) {
        gens.push_back(static_cast<std::uint32_t>(rng_below(g, domain)));
    }
    return Subspace::span_of(dim, gens);
}

}  // namespace

DenseSet generate(const GeneratorSpec& spec) {
    check_dim(spec.dim);
    const std::uint64_t domain = std::uint64_t(1) << spec.dim;
    const int rank = spec.rank < 0 ? spec.dim / 2 : spec.rank;
    if (rank < 0 || rank > spec.dim) throw BadSpec("generate: rank outside [0, dim]");
    std::mt19937_64 g(spec.seed);

    switch (spec.family) {
        case Family::Subspace: {
            return random_subspace(g, spec.dim, rank).to_dense();
        }
        case Family::Affine: {
            const Subspace h = random_subspace(g, spec.dim, rank);
            const std::uint32_t t = static_cast<std::uint32_t>(rng_below(g, domain));
            return h.to_dense().translated(t);
        }
        case Family::CosetUnion: {
            if (spec.cosets < 1) throw BadSpec("generate: coset_union needs >= 1 coset");
            const Subspace h = random_subspace(g, spec.dim, rank);
            if ((std::uint64_t(spec.cosets) << rank) > domain) {
                throw BadSpec("generate: more cosets than the space holds");
            }
            const DenseSet base = h.to_dense();
            std::set<std::uint32_t> reps;
            while (reps.size() < static_cast<std::size_t>(spec.cosets)) {
                reps.insert(h.reduce(static_cast<std::uint32_t>(rng_below(g, domain))));
            }
            DenseSet out(spec.dim);
            for (auto r : reps) {
                for (auto x : base.translated(r).elements()) out.insert(x);
            }
            return out;
        }
        case Family::SubspacePlusNoise: {
            if (spec.noise < 0) throw BadSpec("generate: negative noise count");
            DenseSet out = random_subspace(g, spec.dim, rank).to_dense();
            if (out.size() + spec.noise > domain) throw BadSpec("generate: noise overflows space");
            int added = 0;
            while (added < spec.noise) {
                const auto x = static_cast<std::uint32_t>(rng_below(g, domain));
                if (!out.contains(x)) {
                    out.insert(x);
                    ++added;
                }
            }
            return out;
        }
        case Family::IndependentVectors: {
            const int m = spec.count < 0 ? spec.dim : spec.count;
            if (m < 1 || m > spec.dim) throw BadSpec("generate: vector count outside [1, dim]");
            DenseSet out(spec.dim);
            for (int i = 0; i < m; ++i) out.insert(1u << i);
            return out;
        }
        case Family::Random: {
            if (spec.density <= 0 || spec.density > 1) {
                throw BadSpec("generate: density outside (0, 1]");
            }
            const BigInt num = boost::multiprecision::numerator(spec.density);
            const BigInt den = boost::multiprecision::denominator(spec.density);
            if (den > BigInt(1) << 62) throw BadSpec("generate: density denominator too large");
            const auto num64 = num.convert_to<std::uint64_t>();
            const auto den64 = den.convert_to<std::uint64_t>();
            DenseSet out(spec.dim);
            for (std::uint64_t x = 0; x < domain; ++x) {
                if (rng_below(g, den64) < num64) out.insert(static_cast<std::uint32_t>(x));
            }
            if (out.empty()) out.insert(static_cast<std::uint32_t>(rng_below(g, domain)));
            return out;
        }
    }
    throw BadSpec("generate: unknown family");
}

}  // namespace f2add
