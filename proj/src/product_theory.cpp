#include "kalliance/product_theory.hpp"

#include <algorithm>
#include <string>

#include "kalliance/error.hpp"

namespace kalliance {

std::string_view to_string(Construction c)
{
    switch (c) {
    case Construction::column:
        return "column";
    case Construction::box:
        return "box";
    case Construction::box_plus_diagonal:
        return "box_plus_diagonal";
    case Construction::union_of_columns:
        return "union";
    }
    return "?";
}

Construction parse_construction(std::string_view text)
{
    if (text == "column")
        return Construction::column;
    if (text == "box")
        return Construction::box;
    if (text == "box_plus_diagonal")
        return Construction::box_plus_diagonal;
    if (text == "union")
        return Construction::union_of_columns;
    throw InvalidInput("unknown construction '" + std::string(text) + "'");
}

namespace {

void require_free(const Graph& g, const VertexSet& s, int k, AllianceKind kind, const Limits& limits,
                  const char* which)
{
    require_same_universe(g, s);
    if (!is_free_set(g, s, k, kind, limits))
        throw InvalidInput(std::string(which) + " is not a " + std::to_string(k) + "-"
                           + std::string(to_string(kind)) + " alliance free set");
}

void require_box_kind(AllianceKind kind)
{
    if (kind == AllianceKind::offensive)
        throw InvalidInput("box constructions are defined for defensive and powerful kinds only");
}

int box_claim(const Graph& g1, const Graph& g2, int k1, int k2, AllianceKind kind)
{
    if (kind == AllianceKind::defensive)
        return k1 + k2 - 1;
    return std::max(k1 + k2 - 1, std::min(k2 - g1.min_degree(), k1 - g2.min_degree()));
}

}  // namespace

ProductWitness column_witness(const Graph& g1, const Graph& g2, const VertexSet& s, Axis axis, int k_factor,
                              AllianceKind kind, const Limits& limits)
{
    const Graph& own = axis == Axis::first ? g1 : g2;
    const Graph& other = axis == Axis::first ? g2 : g1;
    require_free(own, s, k_factor, kind, limits, "factor set");

    ProductWitness w;
    w.construction = Construction::column;
    w.source_sets = {s};
    w.kind = kind;
    w.layout = {g1.order(), g2.order()};
    w.k_claim = kind == AllianceKind::offensive ? k_factor - other.min_degree() : k_factor + other.max_degree();
    w.result = axis == Axis::first ? set_product(s, g2.vertices()) : set_product(g1.vertices(), s);
    return w;
}

ProductWitness box_witness(const Graph& g1, const Graph& g2, const VertexSet& s1, const VertexSet& s2, int k1,
                           int k2, AllianceKind kind, const Limits& limits)
{
    require_box_kind(kind);
    require_free(g1, s1, k1, kind, limits, "first factor set");
    require_free(g2, s2, k2, kind, limits, "second factor set");

    ProductWitness w;
    w.construction = Construction::box;
    w.source_sets = {s1, s2};
    w.kind = kind;
    w.layout = {g1.order(), g2.order()};
    w.k_claim = box_claim(g1, g2, k1, k2, kind);
    w.result = set_product(s1, s2);
    return w;
}

ProductWitness box_plus_diagonal_witness(const Graph& g1, const Graph& g2, const VertexSet& s1, const VertexSet& s2,
                                         int k1, int k2, AllianceKind kind, const Limits& limits)
{
    require_box_kind(kind);
    if (k1 < 1 - g1.min_degree() || k2 < 1 - g2.min_degree())
        throw InvalidInput("diagonal construction needs k_i >= 1 - delta_i");
    ProductWitness w = box_witness(g1, g2, s1, s2, k1, k2, kind, limits);
    w.construction = Construction::box_plus_diagonal;

    const auto rest1 = s1.complement().members();
    const auto rest2 = s2.complement().members();
    const std::size_t t = std::min(rest1.size(), rest2.size());
    for (std::size_t i = 0; i < t; ++i)
        w.result.insert(w.layout.encode(rest1[i], rest2[i]));
    return w;
}

ProductWitness union_witness(const Graph& g1, const Graph& g2, const VertexSet& s1, const VertexSet& s2, int k1,
                             int k2, const Limits& limits)
{
    require_free(g1, s1, k1, AllianceKind::offensive, limits, "first factor set");
    require_free(g2, s2, k2, AllianceKind::offensive, limits, "second factor set");

    ProductWitness w;
    w.construction = Construction::union_of_columns;
    w.source_sets = {s1, s2};
    w.kind = AllianceKind::offensive;
    w.layout = {g1.order(), g2.order()};
    w.k_claim = std::max({k1 - g2.min_degree(), k2 - g1.min_degree(),
                          std::min(k2 + g1.max_degree(), k1 + g2.max_degree())});
    w.result = set_product(s1, g2.vertices()) | set_product(g1.vertices(), s2);
    return w;
}

bool verify_witness(const Graph& product, ProductWitness& witness, const Limits& limits)
{
    if (product.order() != witness.layout.order())
        throw InvalidInput("witness layout does not match the product graph");
    witness.verified = is_free_set(product, witness.result, witness.k_claim, witness.kind, limits);
    return witness.verified;
}

bool factor_recovery_daf(const Graph& g1, const Graph& g2, const VertexSet& s1, const VertexSet& s2, int k,
                         int k_prime, const Limits& limits)
{
    require_same_universe(g1, s1);
    require_same_universe(g2, s2);
    if (s2.empty() || !is_defensive_alliance(g2, s2, k_prime))
        throw InvalidInput("second set is not a defensive " + std::to_string(k_prime) + "-alliance");
    const Graph product = cartesian_product(g1, g2, limits);
    if (!is_free_set(product, set_product(s1, s2), k, AllianceKind::defensive, limits))
        throw InvalidInput("S1 x S2 is not " + std::to_string(k) + "-daf in the product");
    return is_free_set(g1, s1, k - k_prime, AllianceKind::defensive, limits);
}

std::pair<bool, bool> column_iff_regular(const Graph& g1, const Graph& g2, const VertexSet& s1, int k,
                                         const Limits& limits)
{
    require_same_universe(g1, s1);
    if (!g2.is_regular())
        throw InvalidInput("second factor is not regular");
    const int d2 = g2.min_degree();
    if (k < d2 - g1.max_degree() || k > g1.max_degree() + d2)
        throw InvalidInput("k outside {delta2 - Delta1, ..., Delta1 + delta2}");
    const Graph product = cartesian_product(g1, g2, limits);
    return {is_free_set(product, set_product(s1, g2.vertices()), k, AllianceKind::defensive, limits),
            is_free_set(g1, s1, k - d2, AllianceKind::defensive, limits)};
}

}  // namespace kalliance
