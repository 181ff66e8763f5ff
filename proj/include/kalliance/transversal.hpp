#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "kalliance/vertex_set.hpp"

namespace kalliance {

struct TransversalConstraints {
    Mask forced_in = 0;   // must belong to the transversal
    Mask forced_out = 0;  // must not
    // Only transversals of at most this size are accepted; negative means
    // no cap.
    int max_size = -1;
    // The search stops at the first transversal of at most this size; set it
    // to a known lower bound to turn the solve into a feasibility test.
    int stop_at = -1;
};

struct TransversalStats {
    std::uint64_t nodes = 0;
};

/// Minimum hitting set of a family of vertex masks over 0..universe-1.
///
/// Exact branch and bound: unit propagation on edges with one free vertex,
/// binary branching on the free vertex that meets most unhit edges (lowest
/// id on ties), a greedy incumbent, and a disjoint-edge packing lower bound.
/// Returns nullopt when no transversal satisfies the constraints.
std::optional<Mask> minimum_transversal(std::span<const Mask> edges, int universe,
                                        const TransversalConstraints& constraints = {},
                                        TransversalStats* stats = nullptr);

// Repeatedly takes the vertex meeting most unhit edges.
Mask greedy_transversal(std::span<const Mask> edges, Mask allowed);

bool is_transversal(std::span<const Mask> edges, Mask t);

}  // namespace kalliance
