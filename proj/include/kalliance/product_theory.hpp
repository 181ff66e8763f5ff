#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "kalliance/freesets.hpp"
#include "kalliance/product.hpp"

namespace kalliance {

enum class Construction { column, box, box_plus_diagonal, union_of_columns };

std::string_view to_string(Construction c);
Construction parse_construction(std::string_view text);

/// A vertex set of G1 x G2 built from free sets of the factors, together
/// with the k at which the construction is claimed to be free.
struct ProductWitness {
    Construction construction = Construction::column;
    std::vector<VertexSet> source_sets;
    int k_claim = 0;
    AllianceKind kind = AllianceKind::defensive;
    ProductLayout layout;
    VertexSet result;
    bool verified = false;
};

// S x V2 (axis first) or V1 x S (axis second). Claimed free at
// k_factor + Delta_other for defensive and powerful kinds and at
// k_factor - delta_other for the offensive kind. For powerful sets the claim
// extends up to Delta1 + Delta2 - 2 by monotonicity; only the lower end is
// stored.
ProductWitness column_witness(const Graph& g1, const Graph& g2, const VertexSet& s, Axis axis, int k_factor,
                              AllianceKind kind, const Limits& limits = {});

// S1 x S2. Defensive claim k1 + k2 - 1; powerful claim
// max{k1 + k2 - 1, min{k2 - delta1, k1 - delta2}}.
ProductWitness box_witness(const Graph& g1, const Graph& g2, const VertexSet& s1, const VertexSet& s2, int k1,
                           int k2, AllianceKind kind, const Limits& limits = {});

// S1 x S2 plus t = min{n1 - |S1|, n2 - |S2|} diagonal vertices pairing the
// ascending non-members of each factor. Requires k_i >= 1 - delta_i.
ProductWitness box_plus_diagonal_witness(const Graph& g1, const Graph& g2, const VertexSet& s1, const VertexSet& s2,
                                         int k1, int k2, AllianceKind kind, const Limits& limits = {});

// (S1 x V2) u (V1 x S2) for offensive free S_i. Claimed free at
// max{k1 - delta2, k2 - delta1, min{k2 + Delta1, k1 + Delta2}}.
ProductWitness union_witness(const Graph& g1, const Graph& g2, const VertexSet& s1, const VertexSet& s2, int k1,
                             int k2, const Limits& limits = {});

// Checks the witness against its claim on the product graph and records
// the outcome in `verified`.
bool verify_witness(const Graph& product, ProductWitness& witness, const Limits& limits = {});

// Given S1 x S2 k-daf in the product and S2 a defensive k'-alliance of G2,
// returns whether S1 is (k - k')-daf in G1.
bool factor_recovery_daf(const Graph& g1, const Graph& g2, const VertexSet& s1, const VertexSet& s2, int k,
                         int k_prime, const Limits& limits = {});

// For a regular G2 and k in {delta2 - Delta1, ..., Delta1 + delta2}:
// (S1 x V2 is k-daf in the product, S1 is (k - delta2)-daf in G1).
std::pair<bool, bool> column_iff_regular(const Graph& g1, const Graph& g2, const VertexSet& s1, int k,
                                         const Limits& limits = {});

}  // namespace kalliance
