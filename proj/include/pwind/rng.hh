#pragma once

#include <cstdint>
#include <random>

namespace pwind
{
    /// Seeded source over std::mt19937_64. Only raw 64-bit outputs are consumed and
    /// mapped to ranges with the fixed rules below, so fixtures are identical on every
    /// platform (standard distributions are implementation-defined).
    class Rng
    {
    public:
        explicit Rng(std::uint64_t seed) : _engine(seed) {}

        auto next_u64() -> std::uint64_t { return _engine(); }

        /// Uniform in [0, bound) by 128-bit multiply-shift.
        auto below(std::uint64_t bound) -> std::uint64_t
        {
            return static_cast<std::uint64_t>((static_cast<unsigned __int128>(_engine()) * bound) >> 64);
        }

        /// Uniform in [lo, hi].
        auto between(int lo, int hi) -> int
        {
            return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
        }

        /// True with probability p, from the top 53 bits.
        auto chance(double p) -> bool
        {
            return static_cast<double>(_engine() >> 11) * 0x1.0p-53 < p;
        }

    private:
        std::mt19937_64 _engine;
    };
}
