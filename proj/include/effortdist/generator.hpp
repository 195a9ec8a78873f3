#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "effortdist/instance.hpp"

namespace effortdist {

enum class Family { Uniform, Convex, M2 };

Family family_from_string(const std::string& name);  // throws BadParams
const char* family_name(Family family);

struct GenParams {
    int n = 1;
    int m = 1;
    std::uint64_t seed = 0;
    Revenue lo = -100;
    Revenue hi = 100;
    Family family = Family::Uniform;
};

// Deterministic instance from the seed; identical parameters give identical
// tables on every platform. Convex rows are built from sorted increments so
// is_convex holds by construction; family M2 requires m == 2.
Instance generate_instance(const GenParams& params);  // throws BadParams

// Bounded draw with rejection sampling on top of the fully specified
// mt19937_64 stream, stable across standard libraries.
std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi);

}  // namespace effortdist
