#pragma once

#include <cstdint>
#include <random>

namespace fjsp {

/// Master engine for every stochastic draw. std::mt19937_64's output
/// sequence is fixed by the standard; the draw helpers below are written out
/// because the std distributions are not portable across standard libraries.
using Rng = std::mt19937_64;

/// Uniform double in [0, 1) from the top 53 bits of one engine output.
inline double uniform_unit(Rng &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform integer in [lo, hi] (inclusive) by rejection on the 64-bit range.
inline std::int64_t uniform_int(Rng &rng, std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return lo + static_cast<std::int64_t>(rng()); // full 64-bit range
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t draw = rng();
    while (draw >= limit) draw = rng();
    return lo + static_cast<std::int64_t>(draw % span);
}

} // namespace fjsp
