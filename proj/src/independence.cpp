#include "kalliance/independence.hpp"

#include <algorithm>
#include <string>

#include "kalliance/error.hpp"

namespace kalliance {

namespace {

void search(const Graph& g, Mask candidates, int taken, int& best)
{
    // Vertices of degree <= 1 inside the candidate set are in some maximum
    // independent set; take them without branching.
    for (bool changed = true; changed;) {
        changed = false;
        Mask rest = candidates;
        while (rest != 0) {
            Vertex v = static_cast<Vertex>(std::countr_zero(rest));
            rest &= rest - 1;
            if ((candidates & bit(v)) == 0)
                continue;
            if (popcount(g.neighbors(v) & candidates) <= 1) {
                candidates &= ~(g.neighbors(v) | bit(v));
                ++taken;
                changed = true;
            }
        }
    }

    if (candidates == 0) {
        best = std::max(best, taken);
        return;
    }
    if (taken + popcount(candidates) <= best)
        return;

    Vertex pivot = -1;
    int pivot_degree = -1;
    for_each_bit(candidates, [&](Vertex v) {
        int d = popcount(g.neighbors(v) & candidates);
        if (d > pivot_degree) {
            pivot = v;
            pivot_degree = d;
        }
    });

    search(g, candidates & ~(g.neighbors(pivot) | bit(pivot)), taken + 1, best);
    search(g, candidates & ~bit(pivot), taken, best);
}

}  // namespace

FactorInvariants independence_number(const Graph& g, const Limits& limits)
{
    if (g.order() > limits.exact_order)
        throw CapacityError("independence number requested for order " + std::to_string(g.order())
                            + " above the exact limit " + std::to_string(limits.exact_order));
    int best = 0;
    search(g, low_bits(g.order()), 0, best);
    return {g.order(), g.min_degree(), g.max_degree(), best};
}

int vizing_alpha_bound(const FactorInvariants& f1, const FactorInvariants& f2)
{
    return f1.independence * f2.independence
           + std::min(f1.order - f1.independence, f2.order - f2.independence);
}

}  // namespace kalliance
