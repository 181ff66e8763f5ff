#include "kalliance/freesets.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

#include "kalliance/error.hpp"

namespace kalliance {

bool MinimalAllianceFamily::contained_in(const VertexSet& x) const
{
    return std::any_of(sets.begin(), sets.end(), [&](const VertexSet& s) { return (s.bits() & ~x.bits()) == 0; });
}

std::vector<Mask> MinimalAllianceFamily::masks() const
{
    std::vector<Mask> out;
    out.reserve(sets.size());
    for (const VertexSet& s : sets)
        out.push_back(s.bits());
    return out;
}

bool is_free_set(const Graph& g, const VertexSet& x, int k, AllianceKind kind, const Limits& limits)
{
    require_same_universe(g, x);
    if (x.size() > limits.free_set_budget)
        throw CapacityError("free-set check over " + std::to_string(x.size())
                            + " vertices exceeds the enumeration budget " + std::to_string(limits.free_set_budget));
    const Mask whole = x.bits();
    for (Mask sub = whole; sub != 0; sub = (sub - 1) & whole) {
        if (detail::alliance_mask(g, sub, k, kind))
            return false;
    }
    return true;
}

bool is_cover_set(const Graph& g, const VertexSet& y, int k, AllianceKind kind, const Limits& limits)
{
    require_same_universe(g, y);
    return is_free_set(g, y.complement(), k, kind, limits);
}

MinimalAllianceFamily enumerate_minimal_alliances(const Graph& g, int k, AllianceKind kind, const Limits& limits)
{
    const int n = g.order();
    if (n > limits.exact_order)
        throw CapacityError("minimal-alliance enumeration over order " + std::to_string(n)
                            + " exceeds the exact limit " + std::to_string(limits.exact_order));

    // holds[S] = 1 when S contains an alliance. Every S - {v} precedes S in
    // numeric order, so one ascending pass fills the table; S is a minimal
    // alliance exactly when it is an alliance and no S - {v} holds one.
    const std::uint64_t count = std::uint64_t{1} << n;
    std::vector<std::uint8_t> holds(count, 0);
    std::vector<Mask> minimal;
    for (Mask s = 1; s < count; ++s) {
        bool below = false;
        for (Mask rest = s; rest != 0; rest &= rest - 1) {
            if (holds[s & ~(rest & -rest)]) {
                below = true;
                break;
            }
        }
        if (below) {
            holds[s] = 1;
        } else if (detail::alliance_mask(g, s, k, kind)) {
            holds[s] = 1;
            minimal.push_back(s);
        }
    }

    std::vector<VertexSet> sets;
    sets.reserve(minimal.size());
    for (Mask m : minimal)
        sets.emplace_back(n, m);
    std::sort(sets.begin(), sets.end(), [](const VertexSet& a, const VertexSet& b) {
        if (a.size() != b.size())
            return a.size() < b.size();
        return lexicographic_less(a, b);
    });
    return {kind, k, n, std::move(sets)};
}

bool free_set_monotone_witness(const Graph& g, const VertexSet& x, int k, int k_prime, AllianceKind kind,
                               const Limits& limits)
{
    if (k >= k_prime)
        throw InvalidInput("monotone witness needs k < k'");
    if (!is_free_set(g, x, k, kind, limits))
        throw InvalidInput("set is not " + std::to_string(k) + "-free");
    return is_free_set(g, x, k_prime, kind, limits);
}

}  // namespace kalliance
