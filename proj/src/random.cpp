#include "embgo/random.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "embgo/error.hpp"

namespace embgo {

RngStream::RngStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

double RngStream::uniform()
{
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double RngStream::normal()
{
    if (spare_normal_) {
        double z = *spare_normal_;
        spare_normal_.reset();
        return z;
    }
    // 1 - uniform() lies in (0, 1], so the log is finite.
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_normal_ = radius * std::sin(angle);
    return radius * std::cos(angle);
}

std::size_t RngStream::below(std::size_t n)
{
    if (n == 0)
        throw Error(ErrorKind::Domain, "below(0)");
    const std::uint64_t bound = static_cast<std::uint64_t>(n);
    // Reject the low (2^64 mod n) words so every residue is equally likely.
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        const std::uint64_t word = engine_();
        if (word >= threshold)
            return static_cast<std::size_t>(word % bound);
    }
}

} // namespace embgo
