#include "kalliance/serialize.hpp"

#include <sstream>

namespace kalliance {

using nlohmann::json;

namespace {

std::string status_of(const AuditReport& report)
{
    if (report.inconclusive())
        return "inconclusive";
    return report.passed() ? "passed" : "failed";
}

// "4:0-1,1-2"
std::string compact(const Graph& g)
{
    std::ostringstream os;
    os << g.order() << ':';
    bool first = true;
    for (const Edge& e : g.edges()) {
        os << (first ? "" : ",") << e.u << '-' << e.v;
        first = false;
    }
    return os.str();
}

std::string compact(const VertexSet& s)
{
    std::ostringstream os;
    bool first = true;
    for (Vertex v : s.members()) {
        os << (first ? "" : ",") << v;
        first = false;
    }
    return os.str();
}

}  // namespace

json to_json(const VertexSet& s) { return s.members(); }

json to_json(const Graph& g)
{
    json edges = json::array();
    for (const Edge& e : g.edges())
        edges.push_back({e.u, e.v});
    return {{"order", g.order()}, {"edges", edges}};
}

json to_json(const MinimalAllianceFamily& family)
{
    json sets = json::array();
    for (const VertexSet& s : family.sets)
        sets.push_back(to_json(s));
    return {{"kind", to_string(family.kind)},
            {"k", family.k},
            {"universe_size", family.universe_size},
            {"sets", sets}};
}

json to_json(const PhiResult& result)
{
    return {{"kind", to_string(result.kind)},
            {"k", result.k},
            {"value", result.value},
            {"witness", to_json(result.witness)},
            {"certificate_size", result.certificate.sets.size()}};
}

json to_json(const ProductWitness& witness)
{
    return {{"construction", to_string(witness.construction)},
            {"k_claim", witness.k_claim},
            {"kind", to_string(witness.kind)},
            {"n1", witness.layout.n1},
            {"n2", witness.layout.n2},
            {"result", to_json(witness.result)},
            {"size", witness.result.size()},
            {"verified", witness.verified}};
}

json to_json(const AuditConfig& config)
{
    return {{"seed", config.seed},
            {"max_factor_order", config.max_factor_order},
            {"max_product_order", config.max_product_order},
            {"trials_per_theorem", config.trials_per_theorem}};
}

json to_json(const AuditReport& report)
{
    json failures = json::array();
    for (const AuditFailure& f : report.failures) {
        json sets = json::object();
        for (const auto& [name, s] : f.sets)
            sets[name] = to_json(s);
        json ks = json::object();
        for (const auto& [name, k] : f.ks)
            ks[name] = k;
        failures.push_back({{"claim", f.claim},
                            {"g1", to_json(f.g1)},
                            {"g2", to_json(f.g2)},
                            {"sets", sets},
                            {"k", ks},
                            {"relation", f.relation},
                            {"observed", f.observed},
                            {"expected", f.expected},
                            {"minimized", f.minimized}});
    }
    return {{"theorem", to_string(report.theorem)},
            {"config", to_json(report.config)},
            {"trials", report.trials},
            {"passes", report.passes},
            {"skipped", report.skipped},
            {"checks", report.checks},
            {"status", status_of(report)},
            {"failures", failures}};
}

std::string to_record_lines(const AuditReport& report)
{
    const AuditConfig& c = report.config;
    std::ostringstream os;
    os << "audit theorem=" << to_string(report.theorem) << " status=" << status_of(report)
       << " trials=" << report.trials << " passes=" << report.passes << " failures=" << report.failures.size()
       << " skipped=" << report.skipped << " checks=" << report.checks << " seed=" << c.seed
       << " max_factor_order=" << c.max_factor_order << " max_product_order=" << c.max_product_order
       << " trials_per_theorem=" << c.trials_per_theorem << '\n';
    for (const AuditFailure& f : report.failures) {
        os << "failure theorem=" << to_string(report.theorem) << " g1=" << compact(f.g1) << " g2=" << compact(f.g2);
        for (const auto& [name, s] : f.sets)
            os << " set." << name << '=' << compact(s);
        for (const auto& [name, k] : f.ks)
            os << " k." << name << '=' << k;
        os << " observed=" << f.observed << " relation=" << f.relation << " expected=" << f.expected
           << " minimized=" << (f.minimized ? "yes" : "no") << " claim=\"" << f.claim << "\"\n";
    }
    return os.str();
}

}  // namespace kalliance
