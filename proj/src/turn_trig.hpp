#pragma once

#include <cmath>
#include <numbers>

namespace embgo::detail {

// sin(2 pi r) and cos(2 pi r), exact at multiples of a quarter turn.
inline double sin_turn(double r)
{
    const double q = 4.0 * r;
    if (q == std::floor(q)) {
        constexpr double table[4] = {0.0, 1.0, 0.0, -1.0};
        return table[static_cast<int>(std::fmod(std::fmod(q, 4.0) + 4.0, 4.0))];
    }
    return std::sin(2.0 * std::numbers::pi * r);
}

inline double cos_turn(double r)
{
    const double q = 4.0 * r;
    if (q == std::floor(q)) {
        constexpr double table[4] = {1.0, 0.0, -1.0, 0.0};
        return table[static_cast<int>(std::fmod(std::fmod(q, 4.0) + 4.0, 4.0))];
    }
    return std::cos(2.0 * std::numbers::pi * r);
}

} // namespace embgo::detail
