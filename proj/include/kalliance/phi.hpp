#pragma once

#include "kalliance/freesets.hpp"

namespace kalliance {

/// Maximum free set for one kind and k, with the minimal-alliance family
/// that certifies it.
struct PhiResult {
    AllianceKind kind = AllianceKind::defensive;
    int k = 0;
    int value = 0;
    VertexSet witness;
    MinimalAllianceFamily certificate;
};

// value = n - (minimum transversal of the minimal-alliance family). The
// witness is the lexicographically smallest maximum free set.
PhiResult phi(const Graph& g, int k, AllianceKind kind, const Limits& limits = {});

// phi(...).value without the witness search.
int phi_value(const Graph& g, int k, AllianceKind kind, const Limits& limits = {});

// Independent oracle: scans subsets of V by decreasing size and returns the
// first size with a free member, testing freeness by direct enumeration.
int phi_bruteforce(const Graph& g, int k, AllianceKind kind, const Limits& limits = {});

// max{phi_d(k), phi_o(k+2)}, a lower bound on phi_p(k).
int phi_powerful_lower(const Graph& g, int k, const Limits& limits = {});

// Witness is free, has `value` elements, and every (value+1)-subset of V
// contains a certificate member. Enumerates binomial(n, value+1) subsets.
bool certificate_proves_maximum(const Graph& g, const PhiResult& result);

}  // namespace kalliance
