#include "kalliance/families.hpp"

#include <functional>
#include <queue>
#include <string>
#include <vector>

#include "kalliance/error.hpp"
#include "kalliance/random.hpp"

namespace kalliance::family {

namespace {

void require(bool ok, const std::string& message)
{
    if (!ok)
        throw InvalidInput(message);
}

}  // namespace

Graph path(int n)
{
    require(n >= 1, "path needs at least one vertex");
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < n; ++v)
        edges.push_back({v, v + 1});
    return Graph(n, edges, true);
}

Graph cycle(int n)
{
    require(n >= 3, "cycle length must be at least 3");
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v)
        edges.push_back({v, (v + 1) % n});
    return Graph(n, edges, true);
}

Graph star(int t)
{
    require(t >= 0, "star needs a non-negative number of leaves");
    std::vector<Edge> edges;
    for (Vertex v = 1; v <= t; ++v)
        edges.push_back({0, v});
    return Graph(t + 1, edges, true);
}

Graph complete(int n)
{
    require(n >= 1, "complete graph needs at least one vertex");
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            edges.push_back({u, v});
    return Graph(n, edges, n <= 4);
}

Graph wheel(int m)
{
    require(m >= 3, "wheel rim must have at least 3 vertices");
    std::vector<Edge> edges;
    for (Vertex i = 1; i <= m; ++i) {
        edges.push_back({0, i});
        edges.push_back({i, i % m + 1});
    }
    return Graph(m + 1, edges, true);
}

Graph grid(int rows, int cols)
{
    require(rows >= 1 && cols >= 1, "grid dimensions must be positive");
    std::vector<Edge> edges;
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            Vertex v = i * cols + j;
            if (j + 1 < cols)
                edges.push_back({v, v + 1});
            if (i + 1 < rows)
                edges.push_back({v, v + cols});
        }
    }
    return Graph(rows * cols, edges, true);
}

Graph empty(int n)
{
    require(n >= 0, "negative vertex count");
    return Graph(n, std::span<const Edge>{}, true);
}

Graph random_tree(int n, std::uint64_t seed)
{
    require(n >= 1, "tree needs at least one vertex");
    if (n == 1)
        return Graph(1, std::span<const Edge>{}, true);
    if (n == 2) {
        const Edge e{0, 1};
        return Graph(2, std::span<const Edge>(&e, 1), true);
    }

    Rng rng(seed);
    std::vector<Vertex> code(static_cast<std::size_t>(n - 2));
    for (Vertex& c : code)
        c = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));

    std::vector<int> remaining(static_cast<std::size_t>(n), 1);
    for (Vertex c : code)
        ++remaining[c];

    std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
    for (Vertex v = 0; v < n; ++v)
        if (remaining[v] == 1)
            leaves.push(v);

    std::vector<Edge> edges;
    for (Vertex c : code) {
        Vertex leaf = leaves.top();
        leaves.pop();
        edges.push_back({leaf, c});
        if (--remaining[c] == 1)
            leaves.push(c);
    }
    Vertex a = leaves.top();
    leaves.pop();
    edges.push_back({a, leaves.top()});
    return Graph(n, edges, true);
}

Graph gnp(int n, int numerator, int denominator, std::uint64_t seed)
{
    require(n >= 0, "negative vertex count");
    require(denominator > 0 && numerator >= 0 && numerator <= denominator, "edge probability must lie in [0, 1]");
    Rng rng(seed);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng.chance(static_cast<std::uint64_t>(numerator), static_cast<std::uint64_t>(denominator)))
                edges.push_back({u, v});
    return Graph(n, edges);
}

Graph make(std::string_view kind, std::span<const int> params, std::uint64_t seed)
{
    auto need = [&](std::size_t count) {
        if (params.size() != count)
            throw InvalidInput(std::string(kind) + " takes " + std::to_string(count) + " parameter(s)");
    };
    if (kind == "path") {
        need(1);
        return path(params[0]);
    }
    if (kind == "cycle") {
        need(1);
        return cycle(params[0]);
    }
    if (kind == "star") {
        need(1);
        return star(params[0]);
    }
    if (kind == "complete") {
        need(1);
        return complete(params[0]);
    }
    if (kind == "wheel") {
        need(1);
        return wheel(params[0]);
    }
    if (kind == "grid") {
        need(2);
        return grid(params[0], params[1]);
    }
    if (kind == "empty") {
        need(1);
        return empty(params[0]);
    }
    if (kind == "random_tree") {
        need(1);
        return random_tree(params[0], seed);
    }
    if (kind == "gnp") {
        need(3);
        return gnp(params[0], params[1], params[2], seed);
    }
    throw InvalidInput("unknown graph family '" + std::string(kind) + "'");
}

}  // namespace kalliance::family
