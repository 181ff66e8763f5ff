#pragma once

#include <vector>

#include "kalliance/alliances.hpp"
#include "kalliance/limits.hpp"

namespace kalliance {

/// Inclusion-minimal alliances of one kind and k.
///
/// A set is k-free exactly when it contains no member, so the family is a
/// complete certificate for free-set questions on its graph. Members are
/// ordered by cardinality, then lexicographically.
struct MinimalAllianceFamily {
    AllianceKind kind = AllianceKind::defensive;
    int k = 0;
    int universe_size = 0;
    std::vector<VertexSet> sets;

    // True when some member is a subset of x.
    bool contained_in(const VertexSet& x) const;
    std::vector<Mask> masks() const;
};

// No non-empty subset of x is an alliance. Scans all subsets of x.
bool is_free_set(const Graph& g, const VertexSet& x, int k, AllianceKind kind, const Limits& limits = {});

// Every alliance meets y; evaluated as is_free_set on the complement.
bool is_cover_set(const Graph& g, const VertexSet& y, int k, AllianceKind kind, const Limits& limits = {});

MinimalAllianceFamily enumerate_minimal_alliances(const Graph& g, int k, AllianceKind kind, const Limits& limits = {});

// For k < k_prime and a k-free x, returns whether x is k_prime-free (which
// must hold). Throws InvalidInput if the preconditions fail.
bool free_set_monotone_witness(const Graph& g, const VertexSet& x, int k, int k_prime, AllianceKind kind,
                               const Limits& limits = {});

}  // namespace kalliance
