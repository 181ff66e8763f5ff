#pragma once

#include <string_view>

#include "kalliance/graph.hpp"

namespace kalliance {

enum class AllianceKind { defensive, offensive, powerful };

std::string_view to_string(AllianceKind kind);
// Accepts "defensive"/"offensive"/"powerful" and the initials d/o/p.
AllianceKind parse_alliance_kind(std::string_view text);

// Inclusive integer interval; empty when lo > hi.
struct KRange {
    int lo = 0;
    int hi = -1;

    bool empty() const { return lo > hi; }
    bool contains(int k) const { return lo <= k && k <= hi; }
    int size() const { return empty() ? 0 : hi - lo + 1; }

    friend bool operator==(const KRange&, const KRange&) = default;
};

// {-D..D} defensive, {2-D..D} offensive, {-D..D-2} powerful.
KRange canonical_k_range(AllianceKind kind, int max_degree);
inline KRange canonical_k_range(const Graph& g, AllianceKind kind)
{
    return canonical_k_range(kind, g.max_degree());
}

struct AllianceVerdict {
    bool holds = false;
    // k outside the canonical range is evaluated literally; this flags it.
    bool k_in_canonical_range = true;

    explicit operator bool() const { return holds; }
};

// Throws InvalidInput when s is empty or belongs to another universe.
AllianceVerdict check_alliance(const Graph& g, const VertexSet& s, int k, AllianceKind kind);

bool is_defensive_alliance(const Graph& g, const VertexSet& s, int k);
bool is_offensive_alliance(const Graph& g, const VertexSet& s, int k);
bool is_powerful_alliance(const Graph& g, const VertexSet& s, int k);
bool is_alliance(const Graph& g, const VertexSet& s, int k, AllianceKind kind);

// delta_S(v) >= delta_{V-S}(v) + k.
bool satisfies_condition(const Graph& g, Mask s, Vertex v, int k);

namespace detail {

// Unchecked predicates on raw masks for the enumeration loops. An empty
// mask is never an alliance.
bool defensive_mask(const Graph& g, Mask s, int k);
bool offensive_mask(const Graph& g, Mask s, int k);
bool alliance_mask(const Graph& g, Mask s, int k, AllianceKind kind);
Mask boundary_mask(const Graph& g, Mask s);

}  // namespace detail

}  // namespace kalliance
