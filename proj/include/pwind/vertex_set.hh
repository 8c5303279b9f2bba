#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace pwind
{
    /// Fixed-universe bitset over vertices 0..universe-1.
    class VertexSet
    {
    public:
        VertexSet() = default;
        explicit VertexSet(int universe);

        static auto of(int universe, std::initializer_list<int> vs) -> VertexSet;
        static auto of(int universe, std::span<const int> vs) -> VertexSet;
        static auto full(int universe) -> VertexSet;

        auto universe() const -> int { return _universe; }

        auto insert(int v) -> void { _words[v >> 6] |= (std::uint64_t{1} << (v & 63)); }
        auto erase(int v) -> void { _words[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
        auto contains(int v) const -> bool
        {
            return v >= 0 && v < _universe && ((_words[v >> 6] >> (v & 63)) & 1);
        }

        auto size() const -> int;
        auto empty() const -> bool;
        auto intersects(const VertexSet & other) const -> bool;
        auto subset_of(const VertexSet & other) const -> bool;

        /// Smallest member, or -1.
        auto first() const -> int;
        /// Smallest member strictly greater than v, or -1.
        auto next(int v) const -> int;

        auto to_vector() const -> std::vector<int>;

        template <typename F>
        auto for_each(F && f) const -> void
        {
            for (std::size_t w = 0; w < _words.size(); ++w) {
                auto bits = _words[w];
                while (bits) {
                    int b = std::countr_zero(bits);
                    f(static_cast<int>(w * 64 + b));
                    bits &= bits - 1;
                }
            }
        }

        auto operator|=(const VertexSet & other) -> VertexSet &;
        auto operator&=(const VertexSet & other) -> VertexSet &;
        auto operator-=(const VertexSet & other) -> VertexSet &;

        friend auto operator|(VertexSet a, const VertexSet & b) -> VertexSet { return a |= b; }
        friend auto operator&(VertexSet a, const VertexSet & b) -> VertexSet { return a &= b; }
        friend auto operator-(VertexSet a, const VertexSet & b) -> VertexSet { return a -= b; }

        auto operator==(const VertexSet & other) const -> bool = default;
        auto operator<(const VertexSet & other) const -> bool;

        auto words() const -> const std::vector<std::uint64_t> & { return _words; }
        auto hash() const -> std::size_t;

    private:
        int _universe = 0;
        std::vector<std::uint64_t> _words;
    };

    struct VertexSetHash
    {
        auto operator()(const VertexSet & s) const -> std::size_t { return s.hash(); }
    };
}
