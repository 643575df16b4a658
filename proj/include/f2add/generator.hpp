#pragma once

#include "f2add/exact.hpp"
#include "f2add/gf2.hpp"

#include <cstdint>
#include <random>
#include <string>

namespace f2add {

/// PRNG identifier reported in every generated corpus: the standard
/// mt19937_64 stream, with bounded draws by rejection so results are
/// identical across platforms and standard libraries.
inline constexpr const char* kPrngId = "mt19937_64";

std::uint64_t rng_below(std::mt19937_64& g, std::uint64_t bound);

enum class Family {
    Subspace,
    Affine,
    CosetUnion,
    SubspacePlusNoise,
    IndependentVectors,
    Random,
};

std::string family_name(Family f);
Family family_from_string(const std::string& s);

/// Deterministic set description: identical spec gives an identical set.
struct GeneratorSpec {
    Family family = Family::Subspace;
    int dim = 8;
    std::uint64_t seed = 0;
    int rank = -1;    // subspace/affine/coset_union/noise families; default dim/2
    int cosets = 2;   // coset_union
    int noise = 4;    // subspace_plus_noise
    int count = -1;   // independent_vectors; default dim
    Rational density = Rational(1, 2);  // random
};

DenseSet generate(const GeneratorSpec& spec);

}  // namespace f2add
