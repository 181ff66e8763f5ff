#include "kalliance/audit.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <tuple>

#include "kalliance/error.hpp"
#include "kalliance/families.hpp"
#include "kalliance/independence.hpp"
#include "kalliance/phi.hpp"
#include "kalliance/product.hpp"
#include "kalliance/product_theory.hpp"
#include "kalliance/random.hpp"

namespace kalliance {

namespace {

constexpr std::array<TheoremId, 19> kTheorems{
    TheoremId::remark1,
    TheoremId::th1_i,
    TheoremId::th1_ii,
    TheoremId::cor_CoroTh1def_i,
    TheoremId::cor_CoroTh1def_ii,
    TheoremId::prop_remarktree,
    TheoremId::th_factor_recovery,
    TheoremId::cor_otrocoro,
    TheoremId::prop_iff_regular,
    TheoremId::th1of,
    TheoremId::cor_coronofensive,
    TheoremId::th_union,
    TheoremId::cor_union,
    TheoremId::phi_p_lower,
    TheoremId::th1p_i,
    TheoremId::th1p_ii,
    TheoremId::cor_coroproductpowerful_i,
    TheoremId::cor_coroproductpowerful_ii,
    TheoremId::vizing_alpha,
};

constexpr std::array<std::string_view, 19> kTheoremNames{
    "remark1",
    "th1_i",
    "th1_ii",
    "cor_CoroTh1def_i",
    "cor_CoroTh1def_ii",
    "prop_remarktree",
    "th_factor_recovery",
    "cor_otrocoro",
    "prop_iff_regular",
    "th1of",
    "cor_coronofensive",
    "th_union",
    "cor_union",
    "phi_p_lower",
    "th1p_i",
    "th1p_ii",
    "cor_coroproductpowerful_i",
    "cor_coroproductpowerful_ii",
    "vizing_alpha",
};

constexpr auto kDef = AllianceKind::defensive;
constexpr auto kOff = AllianceKind::offensive;
constexpr auto kPow = AllianceKind::powerful;

// ---------------------------------------------------------------------------
// Trial instances

enum class Universe { first, second, product };

struct NamedSet {
    std::string name;
    Universe where;
    VertexSet set;
};

// Two factor graphs plus the sets a claim talks about. Single-graph claims
// use g1 and leave g2 = K1.
struct Instance {
    Graph g1{1};
    Graph g2{1};
    std::vector<NamedSet> sets;

    const VertexSet& set(std::string_view name) const
    {
        for (const NamedSet& s : sets)
            if (s.name == name)
                return s.set;
        throw InvalidInput("instance has no set named " + std::string(name));
    }

    const Graph& factor(int i) const { return i == 1 ? g1 : g2; }
    Graph product() const { return cartesian_product(g1, g2); }
};

enum class Status { vacuous, holds, violated };

struct Outcome {
    Status status = Status::vacuous;
    long long observed = 0;
    long long expected = 0;
    std::string relation = ">=";
};

Outcome vacuous() { return {}; }

Outcome at_least(long long observed, long long expected)
{
    return {observed >= expected ? Status::holds : Status::violated, observed, expected, ">="};
}

Outcome equal(long long observed, long long expected)
{
    return {observed == expected ? Status::holds : Status::violated, observed, expected, "=="};
}

Outcome holds_if(bool conclusion) { return at_least(conclusion ? 1 : 0, 1); }

// Memoises solver calls within one trial (or one minimisation step).
class Evaluator {
public:
    int phi(const Graph& g, int k, AllianceKind kind)
    {
        auto key = std::make_tuple(graph_key(g), k, static_cast<int>(kind));
        auto it = phi_.find(key);
        if (it == phi_.end())
            it = phi_.emplace(key, phi_value(g, k, kind)).first;
        return it->second;
    }

    // Maximum free set with its lexicographically smallest witness.
    const PhiResult& phi_full(const Graph& g, int k, AllianceKind kind)
    {
        auto key = std::make_tuple(graph_key(g), k, static_cast<int>(kind));
        auto it = full_.find(key);
        if (it == full_.end())
            it = full_.emplace(key, kalliance::phi(g, k, kind)).first;
        return it->second;
    }

    bool free(const Graph& g, const VertexSet& x, int k, AllianceKind kind)
    {
        auto key = std::make_tuple(graph_key(g), x.bits(), k, static_cast<int>(kind));
        auto it = free_.find(key);
        if (it == free_.end())
            it = free_.emplace(key, is_free_set(g, x, k, kind)).first;
        return it->second;
    }

    int alpha(const Graph& g)
    {
        auto key = graph_key(g);
        auto it = alpha_.find(key);
        if (it == alpha_.end())
            it = alpha_.emplace(key, independence_number(g).independence).first;
        return it->second;
    }

private:
    using GraphKey = std::vector<Mask>;

    static GraphKey graph_key(const Graph& g)
    {
        GraphKey key{static_cast<Mask>(g.order())};
        for (Vertex v = 0; v < g.order(); ++v)
            key.push_back(g.neighbors(v));
        return key;
    }

    std::map<std::tuple<GraphKey, int, int>, int> phi_;
    std::map<std::tuple<GraphKey, int, int>, PhiResult> full_;
    std::map<std::tuple<GraphKey, Mask, int, int>, bool> free_;
    std::map<GraphKey, int> alpha_;
};

using Check = std::function<Outcome(const Instance&, Evaluator&)>;

struct Claim {
    std::string label;
    std::vector<std::pair<std::string, int>> ks;
    Check check;
};

struct Trial {
    Instance instance;
    std::vector<Claim> claims;
};

// ---------------------------------------------------------------------------
// Random ingredients

Graph random_graph(Rng& rng, int n)
{
    static constexpr std::array<int, 3> kTenths{3, 5, 7};
    const int p = kTenths[rng.below(kTenths.size())];
    return family::gnp(n, p, 10, rng.next());
}

void random_factors(Rng& rng, const AuditConfig& config, Instance& in)
{
    const int n1 = rng.between(2, std::min(config.max_factor_order, config.max_product_order / 2));
    const int n2 = rng.between(2, std::min(config.max_factor_order, config.max_product_order / n1));
    in.g1 = random_graph(rng, n1);
    in.g2 = random_graph(rng, n2);
}

VertexSet random_subset(Rng& rng, int n)
{
    VertexSet s(n);
    for (Vertex v = 0; v < n; ++v)
        if (rng.chance(1, 2))
            s.insert(v);
    return s;
}

// Removes random members until x is free for (k, kind).
VertexSet shrink_to_free(Rng& rng, const Graph& g, VertexSet x, int k, AllianceKind kind)
{
    while (!is_free_set(g, x, k, kind)) {
        auto members = x.members();
        x.erase(members[rng.below(members.size())]);
    }
    return x;
}

int random_k(Rng& rng, const Graph& g, AllianceKind kind)
{
    KRange r = canonical_k_range(g, kind);
    if (r.empty())
        return 0;
    return rng.between(r.lo, r.hi);
}

VertexSet random_free_subset(Rng& rng, const Graph& g, AllianceKind kind)
{
    return shrink_to_free(rng, g, random_subset(rng, g.order()), random_k(rng, g, kind), kind);
}

// Random subset of X1 x X2, kept non-empty when possible.
VertexSet random_product_subset(Rng& rng, const VertexSet& x1, const VertexSet& x2)
{
    const VertexSet box = set_product(x1, x2);
    VertexSet s(box.universe_size());
    for_each_bit(box.bits(), [&](Vertex v) {
        if (rng.chance(1, 2))
            s.insert(v);
    });
    if (s.empty() && !box.empty()) {
        auto members = box.members();
        s.insert(members[rng.below(members.size())]);
    }
    return s;
}

int other(int i) { return 3 - i; }

KRange range(int lo, int hi) { return {lo, hi}; }

bool is_tree(const Graph& g)
{
    if (g.order() == 0 || g.edge_count() + 1 != static_cast<std::size_t>(g.order()))
        return false;
    Mask seen = bit(0);
    Mask frontier = bit(0);
    while (frontier != 0) {
        Mask next = 0;
        for_each_bit(frontier, [&](Vertex v) { next |= g.neighbors(v); });
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == low_bits(g.order());
}

bool triangle_free(const Graph& g)
{
    for (const Edge& e : g.edges())
        if ((g.neighbors(e.u) & g.neighbors(e.v)) != 0)
            return false;
    return true;
}

// ---------------------------------------------------------------------------
// Per-theorem trials. Each claim re-derives its hypothesis from the instance
// it is handed, so the same closure also drives counterexample shrinking.

Trial draw_remark1(Rng& rng, const AuditConfig& config)
{
    Trial t;
    random_factors(rng, config, t.instance);
    const Graph& g1 = t.instance.g1;
    const Graph& g2 = t.instance.g2;
    for (int k = -(g1.max_degree() + g2.max_degree()); k <= g1.max_degree() + g2.max_degree(); ++k) {
        t.claims.push_back({"phi_d(G1xG2,k) >= vizing bound", {{"k", k}}, [k](const Instance& in, Evaluator& ev) {
                                if (!range(1 - in.g1.min_degree() - in.g2.min_degree(),
                                           in.g1.max_degree() + in.g2.max_degree())
                                         .contains(k))
                                    return vacuous();
                                FactorInvariants f1 = independence_number(in.g1);
                                FactorInvariants f2 = independence_number(in.g2);
                                return at_least(ev.phi(in.product(), k, kDef), vizing_alpha_bound(f1, f2));
                            }});
    }
    return t;
}

Trial draw_vizing_alpha(Rng& rng, const AuditConfig& config)
{
    Trial t;
    random_factors(rng, config, t.instance);
    t.claims.push_back({"alpha(G1xG2) >= vizing bound", {}, [](const Instance& in, Evaluator& ev) {
                            return at_least(ev.alpha(in.product()),
                                            vizing_alpha_bound(independence_number(in.g1),
                                                               independence_number(in.g2)));
                        }});
    return t;
}

// Theorems whose hypothesis is "P_Vi(S) is k_i-free" for one side i:
// th1_i (defensive), th1of (offensive) and th1p_i (powerful).
Trial draw_single_projection(Rng& rng, const AuditConfig& config, AllianceKind kind)
{
    Trial t;
    random_factors(rng, config, t.instance);
    const int side = rng.chance(1, 2) ? 1 : 2;
    const Graph& own = t.instance.factor(side);
    const Graph& far = t.instance.factor(other(side));
    const VertexSet x = random_free_subset(rng, own, kind);
    const VertexSet s = side == 1 ? random_product_subset(rng, x, far.vertices())
                                  : random_product_subset(rng, far.vertices(), x);
    t.instance.sets.push_back({"S", Universe::product, s});

    for (int i : {1, 2}) {
        KRange ki = canonical_k_range(t.instance.factor(i), kind);
        for (int k_i = ki.lo; k_i <= ki.hi; ++k_i) {
            auto hypothesis = [i, k_i, kind](const Instance& in) {
                auto [p1, p2] = projections(in.set("S"), in.g1.order(), in.g2.order());
                return is_free_set(in.factor(i), i == 1 ? p1 : p2, k_i, kind);
            };
            if (kind == kDef) {
                t.claims.push_back(
                    {"S is (k_i + Delta_j)-daf", {{"i", i}, {"k_i", k_i}}, [=](const Instance& in, Evaluator& ev) {
                         if (!hypothesis(in))
                             return vacuous();
                         const int k = k_i + in.factor(other(i)).max_degree();
                         return holds_if(ev.free(in.product(), in.set("S"), k, kDef));
                     }});
            } else if (kind == kOff) {
                t.claims.push_back(
                    {"S is (k - delta_j)-oaf", {{"i", i}, {"k", k_i}}, [=](const Instance& in, Evaluator& ev) {
                         if (!hypothesis(in))
                             return vacuous();
                         const int k = k_i - in.factor(other(i)).min_degree();
                         return holds_if(ev.free(in.product(), in.set("S"), k, kOff));
                     }});
            } else {
                const int hi = t.instance.g1.max_degree() + t.instance.g2.max_degree() - 2;
                for (int k = k_i + t.instance.factor(other(i)).max_degree(); k <= hi; ++k) {
                    t.claims.push_back({"S is k-paf for k in {k_i + Delta_j, ..., Delta_1 + Delta_2 - 2}",
                                        {{"i", i}, {"k_i", k_i}, {"k", k}},
                                        [=](const Instance& in, Evaluator& ev) {
                                            const int lo = k_i + in.factor(other(i)).max_degree();
                                            const int top = in.g1.max_degree() + in.g2.max_degree() - 2;
                                            if (!range(lo, top).contains(k) || !hypothesis(in))
                                                return vacuous();
                                            return holds_if(ev.free(in.product(), in.set("S"), k, kPow));
                                        }});
                }
            }
        }
    }
    return t;
}

// Both projections free: th1_ii (defensive) and th1p_ii (powerful), plus the
// box construction on the enclosing factor sets.
Trial draw_double_projection(Rng& rng, const AuditConfig& config, AllianceKind kind)
{
    Trial t;
    random_factors(rng, config, t.instance);
    const VertexSet x1 = random_free_subset(rng, t.instance.g1, kind);
    const VertexSet x2 = random_free_subset(rng, t.instance.g2, kind);
    t.instance.sets.push_back({"X1", Universe::first, x1});
    t.instance.sets.push_back({"X2", Universe::second, x2});
    t.instance.sets.push_back({"S", Universe::product, random_product_subset(rng, x1, x2)});

    const KRange r1 = canonical_k_range(t.instance.g1, kind);
    const KRange r2 = canonical_k_range(t.instance.g2, kind);
    const int top = t.instance.g1.max_degree() + t.instance.g2.max_degree() - (kind == kPow ? 2 : 0);
    for (int k1 = r1.lo; k1 <= r1.hi; ++k1) {
        for (int k2 = r2.lo; k2 <= r2.hi; ++k2) {
            auto hypothesis = [=](const Instance& in, std::string_view a, std::string_view b) {
                return is_free_set(in.g1, in.set(a), k1, kind) && is_free_set(in.g2, in.set(b), k2, kind);
            };
            auto projections_free = [=](const Instance& in) {
                auto [p1, p2] = projections(in.set("S"), in.g1.order(), in.g2.order());
                return is_free_set(in.g1, p1, k1, kind) && is_free_set(in.g2, p2, k2, kind);
            };
            auto lower = [=](const Instance& in) {
                if (kind == kDef)
                    return k1 + k2 - 1;
                return std::max(k1 + k2 - 1, std::min(k2 - in.g1.min_degree(), k1 - in.g2.min_degree()));
            };
            if (kind == kDef) {
                t.claims.push_back({"S is (k1 + k2 - 1)-daf",
                                    {{"k1", k1}, {"k2", k2}},
                                    [=](const Instance& in, Evaluator& ev) {
                                        if (!projections_free(in))
                                            return vacuous();
                                        return holds_if(ev.free(in.product(), in.set("S"), lower(in), kDef));
                                    }});
            } else {
                for (int k = std::max(k1 + k2 - 1, r1.lo + r2.lo - 1); k <= top; ++k) {
                    t.claims.push_back({"S is k-paf for k in {k', ..., Delta_1 + Delta_2 - 2}",
                                        {{"k1", k1}, {"k2", k2}, {"k", k}},
                                        [=](const Instance& in, Evaluator& ev) {
                                            const int hi = in.g1.max_degree() + in.g2.max_degree() - 2;
                                            if (!range(lower(in), hi).contains(k) || !projections_free(in))
                                                return vacuous();
                                            return holds_if(ev.free(in.product(), in.set("S"), k, kPow));
                                        }});
                }
            }
            t.claims.push_back({"box witness X1 x X2 is free at its claim",
                                {{"k1", k1}, {"k2", k2}},
                                [=](const Instance& in, Evaluator&) {
                                    if (!hypothesis(in, "X1", "X2"))
                                        return vacuous();
                                    if (kind == kPow && lower(in) > in.g1.max_degree() + in.g2.max_degree() - 2)
                                        return vacuous();
                                    ProductWitness w = box_witness(in.g1, in.g2, in.set("X1"), in.set("X2"), k1,
                                                                   k2, kind);
                                    if (w.k_claim != lower(in))
                                        return equal(w.k_claim, lower(in));
                                    return holds_if(verify_witness(in.product(), w));
                                }});
        }
    }
    return t;
}

// phi(G1 x G2, k) >= n_j phi(G_i, k - shift_j), the column corollaries.
// Defensive and powerful shift by Delta_j, offensive by -delta_j.
Trial draw_column_corollary(Rng& rng, const AuditConfig& config, AllianceKind kind)
{
    Trial t;
    random_factors(rng, config, t.instance);
    const int reach = t.instance.g1.max_degree() + t.instance.g2.max_degree() + 2;
    for (int i : {1, 2}) {
        for (int k = -reach; k <= reach; ++k) {
            auto shift = [=](const Instance& in) {
                const Graph& far = in.factor(other(i));
                return kind == kOff ? -far.min_degree() : far.max_degree();
            };
            auto stated = [=](const Instance& in) {
                const Graph& own = in.factor(i);
                const Graph& far = in.factor(other(i));
                switch (kind) {
                case kDef:
                    return range(far.max_degree() - own.max_degree(), own.max_degree() + far.max_degree());
                case kOff:
                    return range(2 - far.min_degree() - own.max_degree(), own.max_degree() - far.min_degree());
                case kPow:
                    return range(far.max_degree() - own.max_degree(), own.max_degree() + far.max_degree() - 2);
                }
                return KRange{};
            };
            t.claims.push_back({"phi(G1xG2, k) >= n_j phi(G_i, k - shift)",
                                {{"i", i}, {"k", k}},
                                [=](const Instance& in, Evaluator& ev) {
                                    if (!stated(in).contains(k))
                                        return vacuous();
                                    const int factor_phi = ev.phi(in.factor(i), k - shift(in), kind);
                                    return at_least(ev.phi(in.product(), k, kind),
                                                    static_cast<long long>(in.factor(other(i)).order()) * factor_phi);
                                }});
            t.claims.push_back({"column witness from a maximum factor set attains the bound",
                                {{"i", i}, {"k", k}},
                                [=](const Instance& in, Evaluator& ev) {
                                    if (!stated(in).contains(k))
                                        return vacuous();
                                    const PhiResult& best = ev.phi_full(in.factor(i), k - shift(in), kind);
                                    ProductWitness w = column_witness(in.g1, in.g2, best.witness,
                                                                      i == 1 ? Axis::first : Axis::second,
                                                                      k - shift(in), kind);
                                    if (w.k_claim != k)
                                        return equal(w.k_claim, k);
                                    if (!verify_witness(in.product(), w))
                                        return holds_if(false);
                                    return equal(w.result.size(),
                                                 static_cast<long long>(in.factor(other(i)).order()) * best.value);
                                }});
        }
    }
    return t;
}

// Box plus diagonal bound: defensive (cor_CoroTh1def_ii) with
// k_i in {1 - delta_i, ..., Delta_i} at k = k1 + k2 - 1, powerful
// (cor_coroproductpowerful_ii) with k_i in {1 - delta_i, ..., Delta_i - 2} and
// every k in {k1 + k2 - 1, ..., Delta_1 + Delta_2 - 2}.
Trial draw_diagonal_corollary(Rng& rng, const AuditConfig& config, AllianceKind kind)
{
    Trial t;
    random_factors(rng, config, t.instance);
    const int slack = kind == kPow ? 2 : 0;
    const Graph& a = t.instance.g1;
    const Graph& b = t.instance.g2;
    for (int k1 = 1 - a.min_degree(); k1 <= a.max_degree() - slack; ++k1) {
        for (int k2 = 1 - b.min_degree(); k2 <= b.max_degree() - slack; ++k2) {
            auto in_range = [=](const Instance& in) {
                return range(1 - in.g1.min_degree(), in.g1.max_degree() - slack).contains(k1)
                       && range(1 - in.g2.min_degree(), in.g2.max_degree() - slack).contains(k2);
            };
            auto bound = [=](const Instance& in, Evaluator& ev) {
                const long long p1 = ev.phi(in.g1, k1, kind);
                const long long p2 = ev.phi(in.g2, k2, kind);
                return p1 * p2 + std::min(in.g1.order() - p1, in.g2.order() - p2);
            };
            const int top = kind == kPow ? a.max_degree() + b.max_degree() - 2 : k1 + k2 - 1;
            for (int k = k1 + k2 - 1; k <= top; ++k) {
                t.claims.push_back({"phi(G1xG2, k) >= phi1 phi2 + min{n1 - phi1, n2 - phi2}",
                                    {{"k1", k1}, {"k2", k2}, {"k", k}},
                                    [=](const Instance& in, Evaluator& ev) {
                                        const int hi = kind == kPow ? in.g1.max_degree() + in.g2.max_degree() - 2
                                                                    : k1 + k2 - 1;
                                        if (!in_range(in) || !range(k1 + k2 - 1, hi).contains(k))
                                            return vacuous();
                                        return at_least(ev.phi(in.product(), k, kind), bound(in, ev));
                                    }});
            }
            t.claims.push_back({"box plus diagonal witness is free with the bound's size",
                                {{"k1", k1}, {"k2", k2}},
                                [=](const Instance& in, Evaluator& ev) {
                                    if (!in_range(in))
                                        return vacuous();
                                    const PhiResult& s1 = ev.phi_full(in.g1, k1, kind);
                                    const PhiResult& s2 = ev.phi_full(in.g2, k2, kind);
                                    ProductWitness w = box_plus_diagonal_witness(in.g1, in.g2, s1.witness,
                                                                                 s2.witness, k1, k2, kind);
                                    if (w.k_claim != k1 + k2 - 1)
                                        return equal(w.k_claim, k1 + k2 - 1);
                                    if (!verify_witness(in.product(), w))
                                        return holds_if(false);
                                    return equal(w.result.size(), bound(in, ev));
                                }});
        }
    }
    return t;
}

Trial draw_remarktree(Rng& rng, std::uint64_t draw_index)
{
    Trial t;
    switch (draw_index % 5) {
    case 3:
        t.instance.g1 = family::wheel(rng.between(6, 8));
        break;
    case 4:
        t.instance.g1 = rng.chance(1, 2) ? family::grid(3, 3) : family::grid(3, 4);
        break;
    default:
        t.instance.g1 = family::random_tree(rng.between(3, 8), rng.next());
        break;
    }
    for (int k = 2; k <= t.instance.g1.max_degree(); ++k) {
        t.claims.push_back({"phi_d(G, k) = n", {{"k", k}}, [k](const Instance& in, Evaluator& ev) {
                                const Graph& g = in.g1;
                                const int d = g.max_degree();
                                const bool tree = is_tree(g) && d >= 2 && range(2, d).contains(k);
                                const bool planar = g.known_planar() && d >= 6 && range(6, d).contains(k);
                                const bool planar_tf =
                                    g.known_planar() && triangle_free(g) && d >= 4 && range(4, d).contains(k);
                                if (!tree && !planar && !planar_tf)
                                    return vacuous();
                                return equal(ev.phi(g, k, kDef), g.order());
                            }});
    }
    return t;
}

Trial draw_factor_recovery(Rng& rng, const AuditConfig& config)
{
    Trial t;
    random_factors(rng, config, t.instance);
    VertexSet s2 = random_subset(rng, t.instance.g2.order());
    if (s2.empty())
        s2.insert(static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(t.instance.g2.order()))));
    t.instance.sets.push_back({"S1", Universe::first, random_subset(rng, t.instance.g1.order())});
    t.instance.sets.push_back({"S2", Universe::second, s2});

    const KRange kp = canonical_k_range(t.instance.g2, kDef);
    const int reach = t.instance.g1.max_degree() + t.instance.g2.max_degree();
    for (int k = -reach; k <= reach; ++k) {
        for (int k_prime = kp.lo; k_prime <= kp.hi; ++k_prime) {
            t.claims.push_back({"S1 is (k - k')-daf", {{"k", k}, {"k'", k_prime}},
                                [=](const Instance& in, Evaluator& ev) {
                                    const VertexSet& a = in.set("S1");
                                    const VertexSet& b = in.set("S2");
                                    if (b.empty() || !is_defensive_alliance(in.g2, b, k_prime))
                                        return vacuous();
                                    if (!ev.free(in.product(), set_product(a, b), k, kDef))
                                        return vacuous();
                                    return holds_if(factor_recovery_daf(in.g1, in.g2, a, b, k, k_prime));
                                }});
        }
    }
    return t;
}

Trial draw_otrocoro(Rng& rng, const AuditConfig& config)
{
    Trial t;
    random_factors(rng, config, t.instance);
    t.instance.sets.push_back({"S1", Universe::first, random_subset(rng, t.instance.g1.order())});
    const int reach = t.instance.g1.max_degree() + t.instance.g2.max_degree();
    for (int k = -reach; k <= reach; ++k) {
        t.claims.push_back({"S1 is (k - delta_2)-daf", {{"k", k}}, [=](const Instance& in, Evaluator& ev) {
                                const VertexSet& a = in.set("S1");
                                if (!ev.free(in.product(), set_product(a, in.g2.vertices()), k, kDef))
                                    return vacuous();
                                return holds_if(ev.free(in.g1, a, k - in.g2.min_degree(), kDef));
                            }});
    }
    return t;
}

Graph random_regular_factor(Rng& rng, int max_order)
{
    std::vector<Graph> pool;
    for (int n = 2; n <= max_order; ++n) {
        pool.push_back(family::empty(n));
        pool.push_back(family::complete(n));
        if (n >= 3)
            pool.push_back(family::cycle(n));
    }
    if (max_order >= 4) {
        const std::array<Edge, 2> matching{{{0, 1}, {2, 3}}};
        pool.emplace_back(4, matching);
    }
    return pool[rng.below(pool.size())];
}

Trial draw_iff_regular(Rng& rng, const AuditConfig& config)
{
    Trial t;
    const int n1 = rng.between(2, std::min(config.max_factor_order, config.max_product_order / 2));
    t.instance.g1 = random_graph(rng, n1);
    t.instance.g2 = random_regular_factor(rng, std::min(config.max_factor_order, config.max_product_order / n1));
    t.instance.sets.push_back({"S1", Universe::first, random_subset(rng, n1)});
    const int reach = t.instance.g1.max_degree() + t.instance.g2.max_degree();
    for (int k = -reach; k <= reach; ++k) {
        t.claims.push_back({"S1 x V2 is k-daf iff S1 is (k - delta_2)-daf", {{"k", k}},
                            [=](const Instance& in, Evaluator&) {
                                if (!in.g2.is_regular())
                                    return vacuous();
                                const int d2 = in.g2.min_degree();
                                if (!range(d2 - in.g1.max_degree(), in.g1.max_degree() + d2).contains(k))
                                    return vacuous();
                                auto [lhs, rhs] = column_iff_regular(in.g1, in.g2, in.set("S1"), k);
                                return equal(lhs ? 1 : 0, rhs ? 1 : 0);
                            }});
    }
    return t;
}

KRange union_range(const Instance& in, int k1, int k2)
{
    const int lo = std::max({k1 - in.g2.min_degree(), k2 - in.g1.min_degree(),
                             std::min(k2 + in.g1.max_degree(), k1 + in.g2.max_degree())});
    return range(lo, in.g1.max_degree() + in.g2.max_degree());
}

Trial draw_union(Rng& rng, const AuditConfig& config)
{
    Trial t;
    random_factors(rng, config, t.instance);
    t.instance.sets.push_back({"S1", Universe::first, random_free_subset(rng, t.instance.g1, kOff)});
    t.instance.sets.push_back({"S2", Universe::second, random_free_subset(rng, t.instance.g2, kOff)});
    const KRange r1 = canonical_k_range(t.instance.g1, kOff);
    const KRange r2 = canonical_k_range(t.instance.g2, kOff);
    const int top = t.instance.g1.max_degree() + t.instance.g2.max_degree();
    for (int k1 = r1.lo; k1 <= r1.hi; ++k1) {
        for (int k2 = r2.lo; k2 <= r2.hi; ++k2) {
            for (int k = -top; k <= top; ++k) {
                t.claims.push_back({"(S1 x V2) u (V1 x S2) is k-oaf",
                                    {{"k1", k1}, {"k2", k2}, {"k", k}},
                                    [=](const Instance& in, Evaluator& ev) {
                                        const VertexSet& a = in.set("S1");
                                        const VertexSet& b = in.set("S2");
                                        if (!union_range(in, k1, k2).contains(k))
                                            return vacuous();
                                        if (!ev.free(in.g1, a, k1, kOff) || !ev.free(in.g2, b, k2, kOff))
                                            return vacuous();
                                        ProductWitness w = union_witness(in.g1, in.g2, a, b, k1, k2);
                                        return holds_if(ev.free(in.product(), w.result, k, kOff));
                                    }});
            }
        }
    }
    return t;
}

Trial draw_union_corollary(Rng& rng, const AuditConfig& config)
{
    Trial t;
    random_factors(rng, config, t.instance);
    const KRange r1 = canonical_k_range(t.instance.g1, kOff);
    const KRange r2 = canonical_k_range(t.instance.g2, kOff);
    const int top = t.instance.g1.max_degree() + t.instance.g2.max_degree();
    for (int k1 = r1.lo; k1 <= r1.hi; ++k1) {
        for (int k2 = r2.lo; k2 <= r2.hi; ++k2) {
            auto in_range = [=](const Instance& in) {
                return canonical_k_range(in.g1, kOff).contains(k1) && canonical_k_range(in.g2, kOff).contains(k2);
            };
            auto bound = [=](const Instance& in, Evaluator& ev) {
                const long long p1 = ev.phi(in.g1, k1, kOff);
                const long long p2 = ev.phi(in.g2, k2, kOff);
                return in.g1.order() * p2 + in.g2.order() * p1 - p1 * p2;
            };
            for (int k = -top; k <= top; ++k) {
                t.claims.push_back({"phi_o(G1xG2, k) >= n1 phi2 + n2 phi1 - phi1 phi2",
                                    {{"k1", k1}, {"k2", k2}, {"k", k}},
                                    [=](const Instance& in, Evaluator& ev) {
                                        if (!in_range(in) || !union_range(in, k1, k2).contains(k))
                                            return vacuous();
                                        return at_least(ev.phi(in.product(), k, kOff), bound(in, ev));
                                    }});
            }
            t.claims.push_back({"union witness of maximum factor sets is free with the bound's size",
                                {{"k1", k1}, {"k2", k2}},
                                [=](const Instance& in, Evaluator& ev) {
                                    if (!in_range(in) || union_range(in, k1, k2).empty())
                                        return vacuous();
                                    const PhiResult& s1 = ev.phi_full(in.g1, k1, kOff);
                                    const PhiResult& s2 = ev.phi_full(in.g2, k2, kOff);
                                    ProductWitness w = union_witness(in.g1, in.g2, s1.witness, s2.witness, k1, k2);
                                    if (!verify_witness(in.product(), w))
                                        return holds_if(false);
                                    return equal(w.result.size(), bound(in, ev));
                                }});
        }
    }
    return t;
}

Trial draw_phi_p_lower(Rng& rng, const AuditConfig& config)
{
    Trial t;
    t.instance.g1 = random_graph(rng, rng.between(2, std::min(10, config.max_product_order)));
    const KRange r = canonical_k_range(t.instance.g1, kPow);
    for (int k = r.lo; k <= r.hi; ++k) {
        t.claims.push_back({"phi_p(k) >= max{phi_d(k), phi_o(k + 2)}", {{"k", k}},
                            [k](const Instance& in, Evaluator& ev) {
                                if (!canonical_k_range(in.g1, kPow).contains(k))
                                    return vacuous();
                                const int lower = std::max(ev.phi(in.g1, k, kDef), ev.phi(in.g1, k + 2, kOff));
                                return at_least(ev.phi(in.g1, k, kPow), lower);
                            }});
    }
    return t;
}

Trial draw(TheoremId id, Rng& rng, const AuditConfig& config, std::uint64_t draw_index)
{
    switch (id) {
    case TheoremId::remark1:
        return draw_remark1(rng, config);
    case TheoremId::th1_i:
        return draw_single_projection(rng, config, kDef);
    case TheoremId::th1_ii:
        return draw_double_projection(rng, config, kDef);
    case TheoremId::cor_CoroTh1def_i:
        return draw_column_corollary(rng, config, kDef);
    case TheoremId::cor_CoroTh1def_ii:
        return draw_diagonal_corollary(rng, config, kDef);
    case TheoremId::prop_remarktree:
        return draw_remarktree(rng, draw_index);
    case TheoremId::th_factor_recovery:
        return draw_factor_recovery(rng, config);
    case TheoremId::cor_otrocoro:
        return draw_otrocoro(rng, config);
    case TheoremId::prop_iff_regular:
        return draw_iff_regular(rng, config);
    case TheoremId::th1of:
        return draw_single_projection(rng, config, kOff);
    case TheoremId::cor_coronofensive:
        return draw_column_corollary(rng, config, kOff);
    case TheoremId::th_union:
        return draw_union(rng, config);
    case TheoremId::cor_union:
        return draw_union_corollary(rng, config);
    case TheoremId::phi_p_lower:
        return draw_phi_p_lower(rng, config);
    case TheoremId::th1p_i:
        return draw_single_projection(rng, config, kPow);
    case TheoremId::th1p_ii:
        return draw_double_projection(rng, config, kPow);
    case TheoremId::cor_coroproductpowerful_i:
        return draw_column_corollary(rng, config, kPow);
    case TheoremId::cor_coroproductpowerful_ii:
        return draw_diagonal_corollary(rng, config, kPow);
    case TheoremId::vizing_alpha:
        return draw_vizing_alpha(rng, config);
    }
    throw InvalidInput("unknown theorem id");
}

// ---------------------------------------------------------------------------
// Counterexample shrinking

Vertex shift_down(Vertex x, Vertex removed) { return x > removed ? x - 1 : x; }

std::optional<Instance> without_vertex(const Instance& in, Universe side, Vertex v)
{
    const Graph& g = side == Universe::first ? in.g1 : in.g2;
    if (g.order() <= 1)
        return std::nullopt;
    VertexSet keep = g.vertices();
    keep.erase(v);

    Instance out;
    out.g1 = side == Universe::first ? induced_subgraph(in.g1, keep) : in.g1;
    out.g2 = side == Universe::second ? induced_subgraph(in.g2, keep) : in.g2;
    const ProductLayout before{in.g1.order(), in.g2.order()};
    const ProductLayout after{out.g1.order(), out.g2.order()};

    for (const NamedSet& s : in.sets) {
        if (s.where == Universe::product) {
            VertexSet mapped(after.order());
            for_each_bit(s.set.bits(), [&](Vertex x) {
                Vertex a = before.first(x);
                Vertex b = before.second(x);
                if (side == Universe::first) {
                    if (a != v)
                        mapped.insert(after.encode(shift_down(a, v), b));
                } else if (b != v) {
                    mapped.insert(after.encode(a, shift_down(b, v)));
                }
            });
            out.sets.push_back({s.name, s.where, mapped});
        } else if (s.where == side) {
            VertexSet mapped(g.order() - 1);
            for_each_bit(s.set.bits(), [&](Vertex x) {
                if (x != v)
                    mapped.insert(shift_down(x, v));
            });
            out.sets.push_back({s.name, s.where, mapped});
        } else {
            out.sets.push_back(s);
        }
    }
    return out;
}

bool still_fails(const Claim& claim, const Instance& in)
{
    try {
        Evaluator ev;
        return claim.check(in, ev).status == Status::violated;
    } catch (const Error&) {
        return false;
    }
}

// Greedy vertex deletion from either factor while the claim stays violated.
Instance shrink(const Claim& claim, Instance in)
{
    for (bool progress = true; progress;) {
        progress = false;
        for (Universe side : {Universe::first, Universe::second}) {
            const int order = side == Universe::first ? in.g1.order() : in.g2.order();
            for (Vertex v = 0; v < order && !progress; ++v) {
                auto smaller = without_vertex(in, side, v);
                if (smaller && still_fails(claim, *smaller)) {
                    in = std::move(*smaller);
                    progress = true;
                }
            }
            if (progress)
                break;
        }
    }
    return in;
}

AuditFailure make_failure(const Claim& claim, const Instance& original)
{
    Instance in = shrink(claim, original);
    Evaluator ev;
    Outcome out = claim.check(in, ev);

    AuditFailure f;
    f.claim = claim.label;
    f.g1 = in.g1;
    f.g2 = in.g2;
    for (const NamedSet& s : in.sets)
        f.sets.emplace_back(s.name, s.set);
    f.ks = claim.ks;
    f.relation = out.relation;
    f.observed = out.observed;
    f.expected = out.expected;
    f.minimized = in.g1.order() != original.g1.order() || in.g2.order() != original.g2.order();
    return f;
}

std::string describe(const Instance& in)
{
    std::ostringstream os;
    os << "G1 order " << in.g1.order() << ", G2 order " << in.g2.order();
    return os.str();
}

}  // namespace

std::span<const TheoremId> all_theorems() { return kTheorems; }

std::string_view to_string(TheoremId id) { return kTheoremNames[static_cast<std::size_t>(id)]; }

TheoremId parse_theorem_id(std::string_view text)
{
    for (std::size_t i = 0; i < kTheoremNames.size(); ++i)
        if (kTheoremNames[i] == text)
            return kTheorems[i];
    throw InvalidInput("unknown theorem id '" + std::string(text) + "'");
}

void AuditConfig::validate(const Limits& limits) const
{
    if (trials_per_theorem < 0)
        throw InvalidInput("trials per theorem must be non-negative");
    if (max_factor_order < 2)
        throw InvalidInput("max factor order must be at least 2");
    if (max_product_order < 4)
        throw InvalidInput("max product order must be at least 4");
    if (max_factor_order * max_factor_order > limits.exact_order || max_product_order > limits.exact_order)
        throw InvalidInput("factor and product orders must stay within the exact solver limit "
                           + std::to_string(limits.exact_order));
}

AuditReport audit(TheoremId theorem, const AuditConfig& config)
{
    config.validate();
    AuditReport report;
    report.theorem = theorem;
    report.config = config;

    Rng rng(mix_seed(config.seed, static_cast<std::uint64_t>(theorem)));
    const long long max_draws = 40LL * std::max(1, config.trials_per_theorem);
    for (long long d = 0; report.trials < config.trials_per_theorem && d < max_draws; ++d) {
        Trial trial = draw(theorem, rng, config, static_cast<std::uint64_t>(d));
        Evaluator ev;
        bool evaluated = false;
        std::optional<AuditFailure> failure;
        for (const Claim& claim : trial.claims) {
            Outcome out;
            try {
                out = claim.check(trial.instance, ev);
            } catch (const CapacityError& e) {
                throw CapacityError(std::string(to_string(theorem)) + " (" + describe(trial.instance)
                                    + "): " + e.what());
            }
            if (out.status == Status::vacuous)
                continue;
            evaluated = true;
            ++report.checks;
            if (out.status == Status::violated && !failure)
                failure = make_failure(claim, trial.instance);
        }
        if (!evaluated) {
            ++report.skipped;
            continue;
        }
        ++report.trials;
        if (failure)
            report.failures.push_back(std::move(*failure));
        else
            ++report.passes;
    }
    return report;
}

std::vector<AuditReport> audit_all(const AuditConfig& config)
{
    std::vector<AuditReport> reports;
    for (TheoremId id : all_theorems())
        reports.push_back(audit(id, config));
    return reports;
}

std::optional<StrictGapInstance> search_strict_gap(std::uint64_t seed, int max_order, int k, int max_draws)
{
    Rng rng(seed);
    const int min_order = std::max(2, k + 3);
    if (max_order < min_order)
        return std::nullopt;
    for (int d = 0; d < max_draws; ++d) {
        const int n = rng.between(min_order, max_order);
        const int tenths = rng.between(4, 8);
        Graph g = family::gnp(n, tenths, 10, rng.next());
        if (!canonical_k_range(g, kPow).contains(k))
            continue;
        const int powerful = phi_value(g, k, kPow);
        const int defensive = phi_value(g, k, kDef);
        const int offensive = phi_value(g, k + 2, kOff);
        if (powerful > std::max(defensive, offensive))
            return StrictGapInstance{std::move(g), k, powerful, defensive, offensive};
    }
    return std::nullopt;
}

}  // namespace kalliance
