#include <doctest.h>

#include "kalliance/error.hpp"
#include "kalliance/families.hpp"
#include "kalliance/phi.hpp"
#include "kalliance/product_theory.hpp"
#include "support.hpp"

using namespace kalliance;

namespace {

constexpr auto kDef = AllianceKind::defensive;
constexpr auto kOff = AllianceKind::offensive;
constexpr auto kPow = AllianceKind::powerful;

VertexSet free_subset(testing::Gen& gen, const Graph& g, int k, AllianceKind kind)
{
    VertexSet x = gen.subset(g.order());
    while (!is_free_set(g, x, k, kind))
        x.erase(x.members()[gen.between(0, x.size() - 1)]);
    return x;
}

}  // namespace

TEST_CASE("construction names")
{
    CHECK(parse_construction("union") == Construction::union_of_columns);
    CHECK(parse_construction("box_plus_diagonal") == Construction::box_plus_diagonal);
    CHECK(to_string(Construction::column) == "column");
    CHECK_THROWS_AS(parse_construction("diagonal"), InvalidInput);
}

TEST_CASE("column witness")
{
    Graph c4 = family::cycle(4);
    Graph p3 = family::path(3);
    ProductWitness w = column_witness(c4, p3, VertexSet::of(3, {0, 1}), Axis::second, 2, kOff);
    CHECK(w.k_claim == 0);
    CHECK(w.result.size() == 8);
    CHECK(w.result == set_product(c4.vertices(), VertexSet::of(3, {0, 1})));
    Graph product = cartesian_product(c4, p3);
    CHECK(verify_witness(product, w));
    CHECK(w.verified);
    CHECK(w.result.size() == phi_value(product, 0, kOff));

    ProductWitness empty = column_witness(c4, p3, VertexSet(4), Axis::first, 0, kDef);
    CHECK(empty.result.empty());
    CHECK(empty.k_claim == 0 + p3.max_degree());
    CHECK(verify_witness(product, empty));

    CHECK_THROWS_AS(column_witness(c4, p3, VertexSet::full(3), Axis::second, 2, kOff), InvalidInput);
    CHECK_THROWS_AS(column_witness(c4, p3, VertexSet::full(4), Axis::second, 2, kOff), InvalidInput);

    testing::Gen gen(41);
    for (int trial = 0; trial < 200; ++trial) {
        Graph g1 = gen.graph(gen.between(1, 4));
        Graph g2 = gen.graph(gen.between(1, 4));
        AllianceKind kind = std::array{kDef, kOff, kPow}[gen.between(0, 2)];
        const bool first = gen.coin();
        const Graph& own = first ? g1 : g2;
        const int k = gen.between(-own.max_degree(), own.max_degree());
        VertexSet s = free_subset(gen, own, k, kind);
        ProductWitness c = column_witness(g1, g2, s, first ? Axis::first : Axis::second, k, kind);
        CHECK(c.result.size() == s.size() * (first ? g2.order() : g1.order()));
        CHECK(verify_witness(cartesian_product(g1, g2), c));
    }
}

TEST_CASE("box witness")
{
    Graph s3 = family::star(3);
    Graph p4 = family::path(4);
    VertexSet leaves = VertexSet::of(4, {1, 2, 3});
    VertexSet first_three = VertexSet::of(4, {0, 1, 2});
    REQUIRE(is_free_set(s3, leaves, 0, kDef));
    REQUIRE(is_free_set(p4, first_three, 1, kDef));
    ProductWitness w = box_witness(s3, p4, leaves, first_three, 0, 1, kDef);
    CHECK(w.k_claim == 0);
    CHECK(w.result.size() == 9);
    CHECK(verify_witness(cartesian_product(s3, p4), w));

    CHECK(box_witness(s3, p4, VertexSet(4), first_three, 0, 1, kDef).result.empty());
    CHECK_THROWS_AS(box_witness(s3, p4, leaves, first_three, 0, 1, kOff), InvalidInput);

    testing::Gen gen(42);
    for (int trial = 0; trial < 200; ++trial) {
        Graph g1 = gen.graph(gen.between(1, 4));
        Graph g2 = gen.graph(gen.between(1, 4));
        AllianceKind kind = gen.coin() ? kDef : kPow;
        const int k1 = gen.coin() ? 1 : gen.between(-g1.max_degree(), g1.max_degree());
        const int k2 = gen.coin() ? 1 : gen.between(-g2.max_degree(), g2.max_degree());
        ProductWitness b = box_witness(g1, g2, free_subset(gen, g1, k1, kind), free_subset(gen, g2, k2, kind), k1,
                                       k2, kind);
        if (kind == kDef)
            CHECK(b.k_claim == k1 + k2 - 1);
        else
            CHECK(b.k_claim
                  == std::max(k1 + k2 - 1, std::min(k2 - g1.min_degree(), k1 - g2.min_degree())));
        CHECK(verify_witness(cartesian_product(g1, g2), b));
    }
}

TEST_CASE("box plus diagonal witness")
{
    Graph s3 = family::star(3);
    Graph p4 = family::path(4);
    ProductWitness w = box_plus_diagonal_witness(s3, p4, VertexSet::of(4, {1, 2, 3}), VertexSet::of(4, {0, 1, 2}),
                                                 0, 1, kDef);
    CHECK(w.result.size() == 10);
    CHECK(w.result.contains(ProductLayout{4, 4}.encode(0, 3)));
    CHECK(verify_witness(cartesian_product(s3, p4), w));

    // A full factor set leaves no room for the diagonal.
    Graph e2 = family::empty(2);
    ProductWitness plain = box_plus_diagonal_witness(e2, p4, e2.vertices(), VertexSet::of(4, {0, 1}), 1, 1, kDef);
    CHECK(plain.result == set_product(e2.vertices(), VertexSet::of(4, {0, 1})));

    CHECK_THROWS_AS(box_plus_diagonal_witness(s3, p4, VertexSet(4), VertexSet(4), -1, 0, kDef), InvalidInput);

    testing::Gen gen(43);
    for (int trial = 0; trial < 200; ++trial) {
        Graph g1 = gen.graph(gen.between(1, 4));
        Graph g2 = gen.graph(gen.between(1, 4));
        AllianceKind kind = gen.coin() ? kDef : kPow;
        const int k1 = gen.between(1 - g1.min_degree(), std::max(1 - g1.min_degree(), g1.max_degree()));
        const int k2 = gen.between(1 - g2.min_degree(), std::max(1 - g2.min_degree(), g2.max_degree()));
        VertexSet s1 = free_subset(gen, g1, k1, kind);
        VertexSet s2 = free_subset(gen, g2, k2, kind);
        ProductWitness d = box_plus_diagonal_witness(g1, g2, s1, s2, k1, k2, kind);
        const int t = std::min(g1.order() - s1.size(), g2.order() - s2.size());
        CHECK(d.result.size() == s1.size() * s2.size() + t);
        CHECK(d.k_claim == k1 + k2 - 1);
        Graph product = cartesian_product(g1, g2);
        VertexSet diagonal = d.result - set_product(s1, s2);
        CHECK(diagonal.size() == t);
        for (Vertex x : diagonal.members())
            CHECK((product.neighbors(x) & d.result.bits()) == 0);
        if (kind == kDef)
            CHECK(verify_witness(product, d));
    }
}

TEST_CASE("union witness")
{
    Graph c3 = family::cycle(3);
    Graph p3 = family::path(3);
    PhiResult a = phi(c3, 1, kOff);
    PhiResult b = phi(p3, 2, kOff);
    REQUIRE(a.value == 1);
    REQUIRE(b.value == 2);
    ProductWitness w = union_witness(c3, p3, a.witness, b.witness, 1, 2);
    CHECK(w.k_claim == 3);
    CHECK(w.result.size() == 3 * 2 + 3 * 1 - 1 * 2);
    CHECK(verify_witness(cartesian_product(c3, p3), w));

    CHECK(union_witness(c3, p3, VertexSet(3), VertexSet(3), 1, 2).result.empty());
    CHECK_THROWS_AS(union_witness(c3, p3, c3.vertices(), VertexSet(3), 1, 2), InvalidInput);

    testing::Gen gen(44);
    for (int trial = 0; trial < 200; ++trial) {
        Graph g1 = gen.graph(gen.between(1, 4));
        Graph g2 = gen.graph(gen.between(1, 4));
        const int k1 = gen.between(2 - g1.max_degree(), g1.max_degree() + 1);
        const int k2 = gen.between(2 - g2.max_degree(), g2.max_degree() + 1);
        VertexSet s1 = free_subset(gen, g1, k1, kOff);
        VertexSet s2 = free_subset(gen, g2, k2, kOff);
        ProductWitness u = union_witness(g1, g2, s1, s2, k1, k2);
        CHECK(u.result.size() == s1.size() * g2.order() + s2.size() * g1.order() - s1.size() * s2.size());
        if (u.k_claim <= g1.max_degree() + g2.max_degree())
            CHECK(verify_witness(cartesian_product(g1, g2), u));
    }
}

TEST_CASE("factor recovery")
{
    Graph c4 = family::cycle(4);
    Graph p3 = family::path(3);
    VertexSet s1 = VertexSet::of(4, {0, 1});
    Graph product = cartesian_product(c4, p3);
    const int k = 3;
    REQUIRE(is_free_set(product, set_product(s1, p3.vertices()), k, kDef));
    CHECK(factor_recovery_daf(c4, p3, s1, p3.vertices(), k, p3.min_degree()));
    CHECK(factor_recovery_daf(c4, p3, VertexSet(4), p3.vertices(), 0, 1));
    CHECK_THROWS_AS(factor_recovery_daf(c4, p3, s1, VertexSet::of(3, {0}), k, 1), InvalidInput);
    CHECK_THROWS_AS(factor_recovery_daf(c4, p3, c4.vertices(), p3.vertices(), 0, 1), InvalidInput);

    testing::Gen gen(45);
    for (int trial = 0; trial < 300; ++trial) {
        Graph g1 = gen.graph(gen.between(1, 4));
        Graph g2 = gen.graph(gen.between(1, 4));
        VertexSet a = gen.subset(g1.order());
        VertexSet b = gen.subset(g2.order());
        const int k = gen.between(-4, 6);
        const int k_prime = gen.between(-g2.max_degree(), g2.max_degree());
        if (b.empty() || !is_defensive_alliance(g2, b, k_prime))
            continue;
        if (!is_free_set(cartesian_product(g1, g2), set_product(a, b), k, kDef))
            continue;
        CHECK(factor_recovery_daf(g1, g2, a, b, k, k_prime));
    }
}

TEST_CASE("column iff regular")
{
    auto [lhs, rhs] = column_iff_regular(family::path(2), family::cycle(3), VertexSet::of(2, {0}), 2);
    CHECK(lhs == rhs);
    auto [e1, e2] = column_iff_regular(family::path(3), family::cycle(4), VertexSet(3), 2);
    CHECK(e1);
    CHECK(e2);
    CHECK_THROWS_AS(column_iff_regular(family::path(2), family::path(3), VertexSet(2), 0), InvalidInput);
    CHECK_THROWS_AS(column_iff_regular(family::path(2), family::cycle(3), VertexSet(2), 9), InvalidInput);

    testing::Gen gen(46);
    Graph c4 = family::cycle(4);
    for (int trial = 0; trial < 100; ++trial) {
        Graph g1 = gen.graph(gen.between(1, 4));
        const int k = gen.between(2 - g1.max_degree(), g1.max_degree() + 2);
        auto [left, right] = column_iff_regular(g1, c4, gen.subset(g1.order()), k);
        CHECK(left == right);
    }
}
