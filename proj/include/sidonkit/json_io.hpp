#pragma once

#include <sidonkit/certificate.hpp>
#include <sidonkit/modular.hpp>
#include <sidonkit/pds.hpp>
#include <sidonkit/plane.hpp>
#include <sidonkit/search.hpp>

#include <json.hpp>

#include <optional>

namespace sidonkit
{
    using Json = nlohmann::ordered_json;

    inline constexpr int schema_version = 1;

    /// {"elements": [...], "modulus": v} with modulus omitted for plain integer sets.
    auto set_to_json(const IntegerSet & a) -> Json;
    auto set_to_json(const ResidueSet & b) -> Json;

    struct ParsedSet
    {
        IntegerSet elements;
        std::optional<std::int64_t> modulus;
    };

    auto set_from_json(const Json & j) -> ParsedSet;

    auto to_json(const PdsReport & report) -> Json;
    auto to_json(const SearchOutcome & outcome) -> Json;
    auto search_outcome_from_json(const Json & j) -> SearchOutcome;
    auto to_json(const Construction & construction) -> Json;
    auto to_json(const AxiomReport & report) -> Json;
    auto to_json(const BaerReport & report) -> Json;
    auto to_json(const InvolutionReport & report) -> Json;

    /// Versioned; field names follow NonExtensionCertificate.
    auto to_json(const NonExtensionCertificate & certificate) -> Json;
    auto certificate_from_json(const Json & j) -> NonExtensionCertificate;
}
