#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string_view>
#include <utility>

namespace pwind
{
    /// Node budget for exhaustive searches. Every expanded search node costs one unit,
    /// so results are reproducible regardless of machine speed.
    class Budget
    {
    public:
        explicit Budget(std::uint64_t limit = std::numeric_limits<std::uint64_t>::max()) : _limit(limit) {}

        static auto unlimited() -> Budget { return Budget(); }

        /// Charges one node; false once the limit has been passed.
        auto spend() -> bool { return ++_used <= _limit; }
        auto exhausted() const -> bool { return _used > _limit; }
        auto used() const -> std::uint64_t { return _used; }
        auto limit() const -> std::uint64_t { return _limit; }

    private:
        std::uint64_t _limit;
        std::uint64_t _used = 0;
    };

    enum class Outcome
    {
        Found,
        Absent,
        Exhausted
    };

    auto outcome_name(Outcome o) -> std::string_view;

    /// A search result: a witness when found, otherwise a proof of absence or a budget stop.
    template <typename T>
    struct SearchResult
    {
        Outcome outcome = Outcome::Absent;
        std::optional<T> witness;

        static auto found(T value) -> SearchResult { return {Outcome::Found, std::move(value)}; }
        static auto absent() -> SearchResult { return {Outcome::Absent, std::nullopt}; }
        static auto exhausted() -> SearchResult { return {Outcome::Exhausted, std::nullopt}; }

        auto is_found() const -> bool { return outcome == Outcome::Found; }
        auto is_absent() const -> bool { return outcome == Outcome::Absent; }
        auto is_exhausted() const -> bool { return outcome == Outcome::Exhausted; }
    };
}
