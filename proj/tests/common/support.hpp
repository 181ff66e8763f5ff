#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "kalliance/graph.hpp"

namespace testing {

using kalliance::Edge;
using kalliance::Graph;
using kalliance::VertexSet;

// Seeded generators kept apart from the library's Rng so property tests do
// not share a stream with the code under test.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : engine_(seed) {}

    int between(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(engine_); }

    Graph graph(int n, double p)
    {
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(p))
                    edges.push_back({u, v});
        return Graph(n, edges);
    }

    Graph graph(int n) { return graph(n, 0.2 + 0.1 * between(0, 6)); }

    VertexSet subset(int n, double p = 0.5)
    {
        VertexSet s(n);
        for (int v = 0; v < n; ++v)
            if (coin(p))
                s.insert(v);
        return s;
    }

private:
    std::mt19937_64 engine_;
};

// Reference alliance predicates written against plain vectors, straight from
// the definitions.
struct Naive {
    std::vector<std::vector<int>> adj;

    explicit Naive(const Graph& g) : adj(g.order())
    {
        for (const Edge& e : g.edges()) {
            adj[e.u].push_back(e.v);
            adj[e.v].push_back(e.u);
        }
    }

    int n() const { return static_cast<int>(adj.size()); }

    bool condition(const std::vector<bool>& in, int v, int k) const
    {
        int inside = 0;
        int outside = 0;
        for (int w : adj[v])
            (in[w] ? inside : outside) += 1;
        return inside >= outside + k;
    }

    bool defensive(const std::vector<bool>& in, int k) const
    {
        bool any = false;
        for (int v = 0; v < n(); ++v) {
            if (!in[v])
                continue;
            any = true;
            if (!condition(in, v, k))
                return false;
        }
        return any;
    }

    bool offensive(const std::vector<bool>& in, int k) const
    {
        bool any = false;
        for (int v = 0; v < n(); ++v) {
            if (in[v]) {
                any = true;
                continue;
            }
            bool boundary = false;
            for (int w : adj[v])
                boundary = boundary || in[w];
            if (boundary && !condition(in, v, k))
                return false;
        }
        return any;
    }

    bool alliance(const std::vector<bool>& in, int k, int kind) const
    {
        if (kind == 0)
            return defensive(in, k);
        if (kind == 1)
            return offensive(in, k);
        return defensive(in, k) && offensive(in, k + 2);
    }

    static std::vector<bool> unpack(std::uint64_t bits, int n)
    {
        std::vector<bool> in(n);
        for (int v = 0; v < n; ++v)
            in[v] = (bits >> v) & 1U;
        return in;
    }
};

}  // namespace testing
