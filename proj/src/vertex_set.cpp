#include "kalliance/vertex_set.hpp"

#include <algorithm>
#include <ostream>
#include <string>

#include "kalliance/error.hpp"
#include "kalliance/limits.hpp"

namespace kalliance {

namespace {

void check_universe(int universe_size)
{
    if (universe_size < 0 || universe_size > kMaxVertices)
        throw CapacityError("vertex set universe of size " + std::to_string(universe_size) + " exceeds "
                            + std::to_string(kMaxVertices));
}

void check_member(int universe_size, Vertex v)
{
    if (v < 0 || v >= universe_size)
        throw InvalidInput("vertex " + std::to_string(v) + " outside universe of size "
                           + std::to_string(universe_size));
}

}  // namespace

VertexSet::VertexSet(int universe_size) : universe_(universe_size) { check_universe(universe_size); }

VertexSet::VertexSet(int universe_size, Mask bits) : universe_(universe_size), bits_(bits)
{
    check_universe(universe_size);
    if ((bits & ~low_bits(universe_size)) != 0)
        throw InvalidInput("mask has members outside universe of size " + std::to_string(universe_size));
}

VertexSet VertexSet::full(int universe_size) { return VertexSet(universe_size, low_bits(universe_size)); }

VertexSet VertexSet::of(int universe_size, std::span<const Vertex> members)
{
    VertexSet s(universe_size);
    for (Vertex v : members)
        s.insert(v);
    return s;
}

VertexSet VertexSet::of(int universe_size, std::initializer_list<Vertex> members)
{
    return of(universe_size, std::span<const Vertex>(members.begin(), members.size()));
}

void VertexSet::insert(Vertex v)
{
    check_member(universe_, v);
    bits_ |= bit(v);
}

void VertexSet::erase(Vertex v)
{
    check_member(universe_, v);
    bits_ &= ~bit(v);
}

bool VertexSet::is_subset_of(const VertexSet& other) const { return (bits_ & ~other.bits_) == 0; }

std::vector<Vertex> VertexSet::members() const
{
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(size()));
    for_each_bit(bits_, [&](Vertex v) { out.push_back(v); });
    return out;
}

namespace {

void require_match(const VertexSet& a, const VertexSet& b)
{
    if (a.universe_size() != b.universe_size())
        throw InvalidInput("vertex sets from universes of size " + std::to_string(a.universe_size()) + " and "
                           + std::to_string(b.universe_size()));
}

}  // namespace

VertexSet operator|(const VertexSet& a, const VertexSet& b)
{
    require_match(a, b);
    return VertexSet(a.universe_, a.bits_ | b.bits_);
}

VertexSet operator&(const VertexSet& a, const VertexSet& b)
{
    require_match(a, b);
    return VertexSet(a.universe_, a.bits_ & b.bits_);
}

VertexSet operator-(const VertexSet& a, const VertexSet& b)
{
    require_match(a, b);
    return VertexSet(a.universe_, a.bits_ & ~b.bits_);
}

bool lexicographic_less(const VertexSet& a, const VertexSet& b)
{
    auto ma = a.members();
    auto mb = b.members();
    return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

std::ostream& operator<<(std::ostream& os, const VertexSet& s)
{
    os << '{';
    bool first = true;
    for_each_bit(s.bits(), [&](Vertex v) {
        if (!first)
            os << ',';
        os << v;
        first = false;
    });
    return os << '}';
}

}  // namespace kalliance
