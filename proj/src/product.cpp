#include "kalliance/product.hpp"

#include <string>
#include <vector>

#include "kalliance/error.hpp"

namespace kalliance {

Graph cartesian_product(const Graph& g1, const Graph& g2, const Limits& limits)
{
    if (g1.order() == 0 || g2.order() == 0)
        throw InvalidInput("cartesian product of an empty graph");
    const long long order = static_cast<long long>(g1.order()) * g2.order();
    if (order > limits.max_vertices || order > kMaxVertices)
        throw CapacityError("product order " + std::to_string(order) + " exceeds vertex limit "
                            + std::to_string(limits.max_vertices));

    const ProductLayout layout{g1.order(), g2.order()};
    std::vector<Edge> edges;
    for (Vertex a = 0; a < g1.order(); ++a) {
        for (const Edge& e : g2.edges())
            edges.push_back({layout.encode(a, e.u), layout.encode(a, e.v)});
    }
    for (const Edge& e : g1.edges()) {
        for (Vertex b = 0; b < g2.order(); ++b)
            edges.push_back({layout.encode(e.u, b), layout.encode(e.v, b)});
    }
    return Graph(layout.order(), edges);
}

namespace {

void require_product_universe(const VertexSet& a, int n1, int n2)
{
    if (n1 <= 0 || n2 <= 0 || a.universe_size() != n1 * n2)
        throw InvalidInput("set of universe " + std::to_string(a.universe_size()) + " is not in a product of order "
                           + std::to_string(n1) + "x" + std::to_string(n2));
}

}  // namespace

std::pair<VertexSet, VertexSet> projections(const VertexSet& a, int n1, int n2)
{
    require_product_universe(a, n1, n2);
    const ProductLayout layout{n1, n2};
    VertexSet p1(n1);
    VertexSet p2(n2);
    for_each_bit(a.bits(), [&](Vertex x) {
        p1.insert(layout.first(x));
        p2.insert(layout.second(x));
    });
    return {p1, p2};
}

VertexSet fiber(const VertexSet& a, int n1, int n2, Axis axis, Vertex coordinate)
{
    require_product_universe(a, n1, n2);
    const int bound = axis == Axis::first ? n1 : n2;
    if (coordinate < 0 || coordinate >= bound)
        throw InvalidInput("fiber coordinate " + std::to_string(coordinate) + " out of range");
    const ProductLayout layout{n1, n2};
    VertexSet out(a.universe_size());
    for_each_bit(a.bits(), [&](Vertex x) {
        Vertex c = axis == Axis::first ? layout.first(x) : layout.second(x);
        if (c == coordinate)
            out.insert(x);
    });
    return out;
}

VertexSet set_product(const VertexSet& s1, const VertexSet& s2)
{
    const ProductLayout layout{s1.universe_size(), s2.universe_size()};
    VertexSet out(layout.order());
    for_each_bit(s1.bits(), [&](Vertex a) { for_each_bit(s2.bits(), [&](Vertex b) { out.insert(layout.encode(a, b)); }); });
    return out;
}

}  // namespace kalliance
