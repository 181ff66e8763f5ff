#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kalliance/alliances.hpp"
#include "kalliance/limits.hpp"

namespace kalliance {

enum class TheoremId {
    remark1,
    th1_i,
    th1_ii,
    cor_CoroTh1def_i,
    cor_CoroTh1def_ii,
    prop_remarktree,
    th_factor_recovery,
    cor_otrocoro,
    prop_iff_regular,
    th1of,
    cor_coronofensive,
    th_union,
    cor_union,
    phi_p_lower,
    th1p_i,
    th1p_ii,
    cor_coroproductpowerful_i,
    cor_coroproductpowerful_ii,
    vizing_alpha,
};

std::span<const TheoremId> all_theorems();
std::string_view to_string(TheoremId id);
TheoremId parse_theorem_id(std::string_view text);

struct AuditConfig {
    std::uint64_t seed = 1;
    int max_factor_order = 4;
    int max_product_order = 16;
    int trials_per_theorem = 50;

    // Throws InvalidInput when the orders cannot be handled exactly.
    void validate(const Limits& limits = {}) const;

    friend bool operator==(const AuditConfig&, const AuditConfig&) = default;
};

struct AuditFailure {
    std::string claim;
    Graph g1;
    Graph g2;
    std::vector<std::pair<std::string, VertexSet>> sets;
    std::vector<std::pair<std::string, int>> ks;
    // The claim reads `observed relation expected`, relation ">=" or "==";
    // boolean claims use 1/0.
    std::string relation = ">=";
    long long observed = 0;
    long long expected = 0;
    bool minimized = false;
};

struct AuditReport {
    TheoremId theorem = TheoremId::remark1;
    AuditConfig config;
    int trials = 0;   // draws whose hypothesis held
    int passes = 0;
    int skipped = 0;  // draws rejected because no hypothesis held
    long long checks = 0;
    std::vector<AuditFailure> failures;

    bool inconclusive() const { return trials == 0; }
    bool passed() const { return !inconclusive() && failures.empty(); }
};

AuditReport audit(TheoremId theorem, const AuditConfig& config);
std::vector<AuditReport> audit_all(const AuditConfig& config);

struct StrictGapInstance {
    Graph graph;
    int k = 2;
    int phi_powerful = 0;
    int phi_defensive = 0;
    int phi_offensive = 0;  // at k + 2
};

// Seeded search over random graphs of order <= max_order for
// phi_p(k) > max{phi_d(k), phi_o(k + 2)}.
std::optional<StrictGapInstance> search_strict_gap(std::uint64_t seed, int max_order, int k = 2,
                                                   int max_draws = 20000);

}  // namespace kalliance
