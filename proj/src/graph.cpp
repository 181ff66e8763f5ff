#include "kalliance/graph.hpp"

#include <algorithm>
#include <string>

#include "kalliance/error.hpp"
#include "kalliance/limits.hpp"

namespace kalliance {

Graph::Graph(int order) : Graph(order, std::span<const Edge>{}) {}

Graph::Graph(int order, std::span<const Edge> edges, bool known_planar) : order_(order), planar_(known_planar)
{
    if (order < 0)
        throw InvalidInput("negative vertex count");
    if (order > kMaxVertices)
        throw CapacityError("graph order " + std::to_string(order) + " exceeds " + std::to_string(kMaxVertices));

    adjacency_.assign(static_cast<std::size_t>(order), 0);
    for (const Edge& e : edges) {
        if (e.u < 0 || e.u >= order || e.v < 0 || e.v >= order)
            throw InvalidInput("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " out of range");
        if (e.u == e.v)
            throw InvalidInput("self-loop at vertex " + std::to_string(e.u));
        if (adjacent(e.u, e.v))
            throw InvalidInput("repeated edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
        adjacency_[e.u] |= bit(e.v);
        adjacency_[e.v] |= bit(e.u);
    }

    if (order > 0) {
        min_degree_ = order;
        for (Vertex v = 0; v < order; ++v) {
            min_degree_ = std::min(min_degree_, degree(v));
            max_degree_ = std::max(max_degree_, degree(v));
        }
    }
}

std::size_t Graph::edge_count() const
{
    std::size_t twice = 0;
    for (Mask m : adjacency_)
        twice += static_cast<std::size_t>(popcount(m));
    return twice / 2;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    for (Vertex u = 0; u < order_; ++u)
        for_each_bit(adjacency_[u] & ~low_bits(u + 1), [&](Vertex v) { out.push_back({u, v}); });
    return out;
}

void require_same_universe(const Graph& g, const VertexSet& s)
{
    if (s.universe_size() != g.order())
        throw InvalidInput("vertex set universe " + std::to_string(s.universe_size())
                           + " does not match graph order " + std::to_string(g.order()));
}

SetDegreeView degree_view(const Graph& g, const VertexSet& s)
{
    require_same_universe(g, s);
    const Mask in = s.bits();
    SetDegreeView view;
    view.in_degree.resize(static_cast<std::size_t>(g.order()));
    view.out_degree.resize(static_cast<std::size_t>(g.order()));
    view.boundary = VertexSet(g.order());
    int twice_induced = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
        int inside = popcount(g.neighbors(v) & in);
        view.in_degree[v] = inside;
        view.out_degree[v] = g.degree(v) - inside;
        if (s.contains(v))
            twice_induced += inside;
        else if (inside > 0)
            view.boundary.insert(v);
    }
    view.induced_edges = twice_induced / 2;
    return view;
}

int induced_edge_count(const Graph& g, const VertexSet& s)
{
    require_same_universe(g, s);
    int count = 0;
    for_each_bit(s.bits(), [&](Vertex v) { count += popcount(g.neighbors(v) & s.bits() & ~low_bits(v + 1)); });
    return count;
}

Graph induced_subgraph(const Graph& g, const VertexSet& keep)
{
    require_same_universe(g, keep);
    std::vector<Vertex> label(static_cast<std::size_t>(g.order()), -1);
    int next = 0;
    for_each_bit(keep.bits(), [&](Vertex v) { label[v] = next++; });
    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
        if (keep.contains(e.u) && keep.contains(e.v))
            edges.push_back({label[e.u], label[e.v]});
    return Graph(next, edges);
}

}  // namespace kalliance
