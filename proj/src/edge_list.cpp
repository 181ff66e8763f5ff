#include "kalliance/edge_list.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

#include "kalliance/error.hpp"
#include "kalliance/limits.hpp"

namespace kalliance {

namespace {

bool blank(const std::string& line) { return line.find_first_not_of(" \t\r") == std::string::npos; }

bool comment(const std::string& line)
{
    auto pos = line.find_first_not_of(" \t");
    return pos != std::string::npos && line[pos] == '#';
}

// Reads exactly `count` integers from the line, nothing else.
bool parse_ints(const std::string& line, std::vector<long long>& out, std::size_t count)
{
    std::istringstream in(line);
    out.clear();
    long long x;
    while (in >> x)
        out.push_back(x);
    if (!in.eof())
        return false;
    return out.size() == count;
}

}  // namespace

Graph read_edge_list(std::istream& in)
{
    std::string line;
    std::size_t line_no = 0;
    long long order = -1;
    std::vector<Edge> edges;
    std::set<std::pair<Vertex, Vertex>> seen;
    std::vector<long long> values;

    while (std::getline(in, line)) {
        ++line_no;
        if (blank(line) || comment(line))
            continue;
        if (order < 0) {
            if (!parse_ints(line, values, 1) || values[0] < 0)
                throw ParseError(line_no, "expected a non-negative vertex count");
            order = values[0];
            if (order > kMaxVertices)
                throw ParseError(line_no, "vertex count " + std::to_string(order) + " exceeds "
                                              + std::to_string(kMaxVertices));
            continue;
        }
        if (!parse_ints(line, values, 2))
            throw ParseError(line_no, "expected an edge 'u v'");
        long long u = values[0];
        long long v = values[1];
        if (u < 0 || v < 0 || u >= order || v >= order)
            throw ParseError(line_no, "vertex id out of range [0, " + std::to_string(order) + ")");
        if (u == v)
            throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
        std::pair<Vertex, Vertex> key{static_cast<Vertex>(std::min(u, v)), static_cast<Vertex>(std::max(u, v))};
        if (!seen.insert(key).second)
            throw ParseError(line_no, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
        edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }
    if (order < 0)
        throw ParseError(line_no + 1, "missing vertex count");
    return Graph(static_cast<int>(order), edges);
}

Graph read_edge_list_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InvalidInput("cannot open graph file '" + path + "'");
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g)
{
    out << g.order() << '\n';
    for (const Edge& e : g.edges())
        out << e.u << ' ' << e.v << '\n';
}

void write_edge_list_file(const std::string& path, const Graph& g)
{
    std::ofstream out(path);
    if (!out)
        throw InvalidInput("cannot write graph file '" + path + "'");
    write_edge_list(out, g);
}

}  // namespace kalliance
