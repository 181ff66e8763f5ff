#pragma once

#include <utility>

#include "kalliance/graph.hpp"
#include "kalliance/limits.hpp"

namespace kalliance {

// Vertex (a, b) of G1 x G2 is encoded as a * n2 + b.
struct ProductLayout {
    int n1 = 0;
    int n2 = 0;

    int order() const { return n1 * n2; }
    Vertex encode(Vertex a, Vertex b) const { return a * n2 + b; }
    Vertex first(Vertex x) const { return x / n2; }
    Vertex second(Vertex x) const { return x % n2; }
};

Graph cartesian_product(const Graph& g1, const Graph& g2, const Limits& limits = {});

// (P_V1(A), P_V2(A)).
std::pair<VertexSet, VertexSet> projections(const VertexSet& a, int n1, int n2);

enum class Axis { first = 1, second = 2 };

// Elements of A whose coordinate on `axis` equals `coordinate`.
VertexSet fiber(const VertexSet& a, int n1, int n2, Axis axis, Vertex coordinate);

// S1 x S2 in the product universe.
VertexSet set_product(const VertexSet& s1, const VertexSet& s2);

}  // namespace kalliance
