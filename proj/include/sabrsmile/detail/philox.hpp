#pragma once

/**
 * @file philox.hpp
 * @brief Philox4x32-10 counter-based generator (Salmon et al., SC'11 family).
 *
 * Each (seed, stream, tick) triple maps statelessly to one 128-bit block,
 * so a path's draws are independent of execution order and thread schedule.
 */

#include <array>
#include <cmath>
#include <cstdint>
#include <utility>

namespace sabrsmile::detail {

inline std::array<std::uint32_t, 4> philox4x32(std::uint64_t seed, std::uint64_t stream,
                                               std::uint64_t tick) {
    constexpr std::uint32_t kMult0 = 0xD2511F53u;
    constexpr std::uint32_t kMult1 = 0xCD9E8D57u;
    constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
    constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

    std::uint32_t c0 = static_cast<std::uint32_t>(tick);
    std::uint32_t c1 = static_cast<std::uint32_t>(tick >> 32);
    std::uint32_t c2 = static_cast<std::uint32_t>(stream);
    std::uint32_t c3 = static_cast<std::uint32_t>(stream >> 32);
    std::uint32_t k0 = static_cast<std::uint32_t>(seed);
    std::uint32_t k1 = static_cast<std::uint32_t>(seed >> 32);

    for (int round = 0; round < 10; ++round) {
        const std::uint64_t p0 = static_cast<std::uint64_t>(kMult0) * c0;
        const std::uint64_t p1 = static_cast<std::uint64_t>(kMult1) * c2;
        const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
        const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
        const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
        const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
        c0 = hi1 ^ c1 ^ k0;
        c1 = lo1;
        c2 = hi0 ^ c3 ^ k1;
        c3 = lo0;
        k0 += kWeyl0;
        k1 += kWeyl1;
    }
    return {c0, c1, c2, c3};
}

/// Uniform in the open interval (0, 1) from 64 random bits.
inline double to_unit_interval(std::uint32_t lo, std::uint32_t hi) {
    const std::uint64_t bits = (static_cast<std::uint64_t>(hi) << 32) | lo;
    return static_cast<double>(bits >> 11) * 0x1.0p-53 + 0x1.0p-54;
}

/// Two independent standard normals per (seed, stream, tick), via Box-Muller.
inline std::pair<double, double> gaussian_pair(std::uint64_t seed, std::uint64_t stream,
                                               std::uint64_t tick) {
    const auto r = philox4x32(seed, stream, tick);
    const double u1 = to_unit_interval(r[0], r[1]);
    const double u2 = to_unit_interval(r[2], r[3]);
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 6.283185307179586477 * u2;
    return {radius * std::cos(angle), radius * std::sin(angle)};
}

}  // namespace sabrsmile::detail
