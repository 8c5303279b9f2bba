#include <pwind/vertex_set.hh>

#include <stdexcept>

using namespace pwind;

VertexSet::VertexSet(int universe) :
    _universe(universe),
    _words((universe + 63) / 64, 0)
{
    if (universe < 0)
        throw std::invalid_argument("negative vertex set universe");
}

auto VertexSet::of(int universe, std::initializer_list<int> vs) -> VertexSet
{
    return of(universe, std::span<const int>(vs.begin(), vs.size()));
}

auto VertexSet::of(int universe, std::span<const int> vs) -> VertexSet
{
    VertexSet result(universe);
    for (int v : vs) {
        if (v < 0 || v >= universe)
            throw std::out_of_range("vertex " + std::to_string(v) + " outside 0.." + std::to_string(universe - 1));
        result.insert(v);
    }
    return result;
}

auto VertexSet::full(int universe) -> VertexSet
{
    VertexSet result(universe);
    for (auto & w : result._words)
        w = ~std::uint64_t{0};
    if (universe % 64 != 0 && ! result._words.empty())
        result._words.back() = (std::uint64_t{1} << (universe % 64)) - 1;
    return result;
}

auto VertexSet::size() const -> int
{
    int result = 0;
    for (auto w : _words)
        result += std::popcount(w);
    return result;
}

auto VertexSet::empty() const -> bool
{
    for (auto w : _words)
        if (w)
            return false;
    return true;
}

auto VertexSet::intersects(const VertexSet & other) const -> bool
{
    for (std::size_t i = 0; i < _words.size(); ++i)
        if (_words[i] & other._words[i])
            return true;
    return false;
}

auto VertexSet::subset_of(const VertexSet & other) const -> bool
{
    for (std::size_t i = 0; i < _words.size(); ++i)
        if (_words[i] & ~other._words[i])
            return false;
    return true;
}

auto VertexSet::first() const -> int
{
    for (std::size_t w = 0; w < _words.size(); ++w)
        if (_words[w])
            return static_cast<int>(w * 64 + std::countr_zero(_words[w]));
    return -1;
}

auto VertexSet::next(int v) const -> int
{
    int start = v + 1;
    if (start >= _universe)
        return -1;
    std::size_t w = start >> 6;
    auto bits = _words[w] & (~std::uint64_t{0} << (start & 63));
    while (true) {
        if (bits)
            return static_cast<int>(w * 64 + std::countr_zero(bits));
        if (++w >= _words.size())
            return -1;
        bits = _words[w];
    }
}

auto VertexSet::to_vector() const -> std::vector<int>
{
    std::vector<int> result;
    for_each([&](int v) { result.push_back(v); });
    return result;
}

auto VertexSet::operator|=(const VertexSet & other) -> VertexSet &
{
    for (std::size_t i = 0; i < _words.size(); ++i)
        _words[i] |= other._words[i];
    return *this;
}

auto VertexSet::operator&=(const VertexSet & other) -> VertexSet &
{
    for (std::size_t i = 0; i < _words.size(); ++i)
        _words[i] &= other._words[i];
    return *this;
}

auto VertexSet::operator-=(const VertexSet & other) -> VertexSet &
{
    for (std::size_t i = 0; i < _words.size(); ++i)
        _words[i] &= ~other._words[i];
    return *this;
}

auto VertexSet::operator<(const VertexSet & other) const -> bool
{
    if (_universe != other._universe)
        return _universe < other._universe;
    return to_vector() < other.to_vector();
}

auto VertexSet::hash() const -> std::size_t
{
    std::size_t h = 0xcbf29ce484222325ULL ^ static_cast<std::size_t>(_universe);
    for (auto w : _words) {
        h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}
