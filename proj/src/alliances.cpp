#include "kalliance/alliances.hpp"

#include <string>

#include "kalliance/error.hpp"

namespace kalliance {

std::string_view to_string(AllianceKind kind)
{
    switch (kind) {
    case AllianceKind::defensive:
        return "defensive";
    case AllianceKind::offensive:
        return "offensive";
    case AllianceKind::powerful:
        return "powerful";
    }
    return "?";
}

AllianceKind parse_alliance_kind(std::string_view text)
{
    if (text == "defensive" || text == "d")
        return AllianceKind::defensive;
    if (text == "offensive" || text == "o")
        return AllianceKind::offensive;
    if (text == "powerful" || text == "p")
        return AllianceKind::powerful;
    throw InvalidInput("unknown alliance kind '" + std::string(text) + "'");
}

KRange canonical_k_range(AllianceKind kind, int max_degree)
{
    switch (kind) {
    case AllianceKind::defensive:
        return {-max_degree, max_degree};
    case AllianceKind::offensive:
        return {2 - max_degree, max_degree};
    case AllianceKind::powerful:
        return {-max_degree, max_degree - 2};
    }
    return {};
}

bool satisfies_condition(const Graph& g, Mask s, Vertex v, int k)
{
    // delta_S(v) >= delta(v) - delta_S(v) + k
    return 2 * popcount(g.neighbors(v) & s) >= g.degree(v) + k;
}

namespace detail {

bool defensive_mask(const Graph& g, Mask s, int k)
{
    if (s == 0)
        return false;
    for (Mask rest = s; rest != 0; rest &= rest - 1) {
        if (!satisfies_condition(g, s, static_cast<Vertex>(std::countr_zero(rest)), k))
            return false;
    }
    return true;
}

Mask boundary_mask(const Graph& g, Mask s)
{
    Mask reach = 0;
    for_each_bit(s, [&](Vertex v) { reach |= g.neighbors(v); });
    return reach & ~s;
}

bool offensive_mask(const Graph& g, Mask s, int k)
{
    if (s == 0)
        return false;
    for (Mask rest = boundary_mask(g, s); rest != 0; rest &= rest - 1) {
        if (!satisfies_condition(g, s, static_cast<Vertex>(std::countr_zero(rest)), k))
            return false;
    }
    return true;
}

bool alliance_mask(const Graph& g, Mask s, int k, AllianceKind kind)
{
    switch (kind) {
    case AllianceKind::defensive:
        return defensive_mask(g, s, k);
    case AllianceKind::offensive:
        return offensive_mask(g, s, k);
    case AllianceKind::powerful:
        return defensive_mask(g, s, k) && offensive_mask(g, s, k + 2);
    }
    return false;
}

}  // namespace detail

AllianceVerdict check_alliance(const Graph& g, const VertexSet& s, int k, AllianceKind kind)
{
    require_same_universe(g, s);
    if (s.empty())
        throw InvalidInput("alliances are non-empty by definition");
    return {detail::alliance_mask(g, s.bits(), k, kind), canonical_k_range(g, kind).contains(k)};
}

bool is_defensive_alliance(const Graph& g, const VertexSet& s, int k)
{
    return check_alliance(g, s, k, AllianceKind::defensive).holds;
}

bool is_offensive_alliance(const Graph& g, const VertexSet& s, int k)
{
    return check_alliance(g, s, k, AllianceKind::offensive).holds;
}

bool is_powerful_alliance(const Graph& g, const VertexSet& s, int k)
{
    return is_defensive_alliance(g, s, k) && is_offensive_alliance(g, s, k + 2);
}

bool is_alliance(const Graph& g, const VertexSet& s, int k, AllianceKind kind)
{
    return check_alliance(g, s, k, kind).holds;
}

}  // namespace kalliance
