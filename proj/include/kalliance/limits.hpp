#pragma once

namespace kalliance {

// Vertex sets are 64-bit masks, so no graph may exceed this order.
inline constexpr int kMaxVertices = 64;

struct Limits {
    int max_vertices = kMaxVertices;
    // Orders above this are refused by anything that walks all 2^n subsets.
    int exact_order = 24;
    // phi_bruteforce nests a 2^|X| scan inside a 2^n scan.
    int bruteforce_order = 14;
    // Largest |X| accepted by is_free_set.
    int free_set_budget = 24;
};

}  // namespace kalliance
