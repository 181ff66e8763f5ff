#pragma once

#include <string>

#include <json.hpp>

#include "kalliance/audit.hpp"
#include "kalliance/phi.hpp"
#include "kalliance/product_theory.hpp"

namespace kalliance {

nlohmann::json to_json(const VertexSet& s);
nlohmann::json to_json(const Graph& g);
nlohmann::json to_json(const MinimalAllianceFamily& family);
// {kind, k, value, witness, certificate_size}
nlohmann::json to_json(const PhiResult& result);
// {construction, k_claim, kind, result, verified}
nlohmann::json to_json(const ProductWitness& witness);
nlohmann::json to_json(const AuditConfig& config);
nlohmann::json to_json(const AuditReport& report);

// One "audit ..." line followed by one "failure ..." line per failure.
std::string to_record_lines(const AuditReport& report);

}  // namespace kalliance
