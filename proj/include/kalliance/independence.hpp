#pragma once

#include "kalliance/graph.hpp"
#include "kalliance/limits.hpp"

namespace kalliance {

struct FactorInvariants {
    int order = 0;
    int min_degree = 0;
    int max_degree = 0;
    int independence = 0;
};

// Exact alpha(G) by branch and bound on bitmasks.
FactorInvariants independence_number(const Graph& g, const Limits& limits = {});

// alpha(G1) alpha(G2) + min{n1 - alpha(G1), n2 - alpha(G2)}, a lower bound
// on alpha(G1 x G2).
int vizing_alpha_bound(const FactorInvariants& f1, const FactorInvariants& f2);

}  // namespace kalliance
