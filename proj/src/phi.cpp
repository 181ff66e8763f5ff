#include "kalliance/phi.hpp"

#include <algorithm>
#include <string>

#include "kalliance/error.hpp"
#include "kalliance/transversal.hpp"

namespace kalliance {

namespace {

// Calls f on every subset of {0..n-1} with exactly r members, in
// increasing numeric order; stops when f returns true.
template <class F>
bool any_subset_of_size(int n, int r, F&& f)
{
    if (r < 0 || r > n)
        return false;
    if (r == 0)
        return f(Mask{0});
    const Mask end = Mask{1} << n;
    for (Mask s = low_bits(r); s < end;) {
        if (f(s))
            return true;
        // Gosper's hack
        Mask c = s & -s;
        Mask r2 = s + c;
        s = (((r2 ^ s) >> 2) / c) | r2;
    }
    return false;
}

}  // namespace

PhiResult phi(const Graph& g, int k, AllianceKind kind, const Limits& limits)
{
    const int n = g.order();
    if (n > limits.exact_order)
        throw CapacityError("phi requested for order " + std::to_string(n) + " above the exact limit "
                            + std::to_string(limits.exact_order));

    PhiResult result;
    result.kind = kind;
    result.k = k;
    result.certificate = enumerate_minimal_alliances(g, k, kind, limits);
    const std::vector<Mask> edges = result.certificate.masks();

    const auto optimum = minimum_transversal(edges, n);
    const int tau = popcount(*optimum);
    result.value = n - tau;

    // Fix vertices in ascending order, keeping each one out of the
    // transversal whenever an optimum survives. This yields the
    // lexicographically smallest maximum free set.
    TransversalConstraints constraints;
    constraints.max_size = tau;
    constraints.stop_at = tau;
    Mask witness = 0;
    for (Vertex v = 0; v < n; ++v) {
        if (popcount(witness) == result.value) {
            break;
        }
        if (popcount(witness) + (n - v) == result.value) {
            witness |= low_bits(n) & ~low_bits(v);
            break;
        }
        TransversalConstraints trial = constraints;
        trial.forced_out |= bit(v);
        if (minimum_transversal(edges, n, trial)) {
            constraints = trial;
            witness |= bit(v);
        } else {
            constraints.forced_in |= bit(v);
        }
    }
    result.witness = VertexSet(n, witness);
    return result;
}

int phi_value(const Graph& g, int k, AllianceKind kind, const Limits& limits)
{
    if (g.order() > limits.exact_order)
        throw CapacityError("phi requested for order " + std::to_string(g.order()) + " above the exact limit "
                            + std::to_string(limits.exact_order));
    const std::vector<Mask> edges = enumerate_minimal_alliances(g, k, kind, limits).masks();
    return g.order() - popcount(*minimum_transversal(edges, g.order()));
}

int phi_bruteforce(const Graph& g, int k, AllianceKind kind, const Limits& limits)
{
    const int n = g.order();
    if (n > limits.bruteforce_order)
        throw CapacityError("brute-force phi requested for order " + std::to_string(n) + " above "
                            + std::to_string(limits.bruteforce_order));
    for (int size = n; size > 0; --size) {
        bool found = any_subset_of_size(n, size, [&](Mask x) {
            return is_free_set(g, VertexSet(n, x), k, kind, limits);
        });
        if (found)
            return size;
    }
    return 0;
}

int phi_powerful_lower(const Graph& g, int k, const Limits& limits)
{
    return std::max(phi_value(g, k, AllianceKind::defensive, limits),
                    phi_value(g, k + 2, AllianceKind::offensive, limits));
}

bool certificate_proves_maximum(const Graph& g, const PhiResult& result)
{
    const int n = g.order();
    if (n > 30)
        throw CapacityError("maximality check limited to order 30");
    if (result.witness.universe_size() != n || result.witness.size() != result.value)
        return false;
    if (result.certificate.contained_in(result.witness))
        return false;
    const std::vector<Mask> edges = result.certificate.masks();
    bool escaped = any_subset_of_size(n, result.value + 1, [&](Mask x) {
        return std::none_of(edges.begin(), edges.end(), [&](Mask e) { return (e & ~x) == 0; });
    });
    return !escaped;
}

}  // namespace kalliance
