#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "kalliance/vertex_set.hpp"

namespace kalliance {

struct Edge {
    Vertex u;
    Vertex v;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..order-1 with bitmask adjacency.
///
/// Immutable after construction. The constructor rejects self-loops,
/// repeated edges and endpoints out of range.
class Graph {
public:
    Graph() = default;
    explicit Graph(int order);
    Graph(int order, std::span<const Edge> edges, bool known_planar = false);

    int order() const { return order_; }
    Mask neighbors(Vertex v) const { return adjacency_[v]; }
    int degree(Vertex v) const { return popcount(adjacency_[v]); }
    int min_degree() const { return min_degree_; }
    int max_degree() const { return max_degree_; }
    bool adjacent(Vertex u, Vertex v) const { return (adjacency_[u] & bit(v)) != 0; }
    bool is_regular() const { return min_degree_ == max_degree_; }

    // Set by family constructors whose output is planar by construction.
    // Never computed.
    bool known_planar() const { return planar_; }

    std::size_t edge_count() const;
    // Each edge once with u < v, sorted.
    std::vector<Edge> edges() const;
    VertexSet vertices() const { return VertexSet::full(order_); }

    // Structural equality; the planar flag is not compared.
    friend bool operator==(const Graph& a, const Graph& b)
    {
        return a.order_ == b.order_ && a.adjacency_ == b.adjacency_;
    }

private:
    int order_ = 0;
    std::vector<Mask> adjacency_;
    int min_degree_ = 0;
    int max_degree_ = 0;
    bool planar_ = false;
};

/// Split degrees of every vertex with respect to a set S.
struct SetDegreeView {
    std::vector<int> in_degree;   // neighbours inside S
    std::vector<int> out_degree;  // neighbours outside S
    VertexSet boundary;           // vertices outside S with a neighbour in S
    int induced_edges = 0;
};

SetDegreeView degree_view(const Graph& g, const VertexSet& s);

int induced_edge_count(const Graph& g, const VertexSet& s);

// Subgraph induced by `keep`, relabelled so that kept vertices stay in
// ascending order.
Graph induced_subgraph(const Graph& g, const VertexSet& keep);

void require_same_universe(const Graph& g, const VertexSet& s);

}  // namespace kalliance
