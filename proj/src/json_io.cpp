#include <sidonkit/errors.hpp>
#include <sidonkit/json_io.hpp>

#include <string>

using std::int64_t;
using std::vector;

namespace sidonkit
{
    using std::to_string;

    namespace
    {
        auto elements_of(const auto & set) -> vector<int64_t>
        {
            return {set.begin(), set.end()};
        }

        auto field_element_json(const FieldElement & e) -> Json
        {
            return Json{{"index", element_index(e)}, {"coeffs", e.coeffs}};
        }
    }

    auto set_to_json(const IntegerSet & a) -> Json
    {
        return Json{{"elements", elements_of(a)}};
    }

    auto set_to_json(const ResidueSet & b) -> Json
    {
        return Json{{"elements", elements_of(b)}, {"modulus", b.v()}};
    }

    auto set_from_json(const Json & j) -> ParsedSet
    {
        if (! j.is_object() || ! j.contains("elements") || ! j.at("elements").is_array())
            throw Error("set JSON needs an \"elements\" array");
        ParsedSet parsed{IntegerSet{j.at("elements").get<vector<int64_t>>()}, std::nullopt};
        if (j.contains("modulus") && ! j.at("modulus").is_null())
            parsed.modulus = j.at("modulus").get<int64_t>();
        return parsed;
    }

    auto to_json(const PdsReport & report) -> Json
    {
        Json j{{"is_pds", report.is_pds}};
        j["q"] = report.q ? Json(*report.q) : Json(nullptr);
        j["missing"] = report.missing;
        j["repeated"] = report.repeated;
        if (report.injectivity_failure)
            j["injectivity_failure"] = {report.injectivity_failure->first, report.injectivity_failure->second};
        else
            j["injectivity_failure"] = nullptr;
        return j;
    }

    auto to_json(const SearchOutcome & outcome) -> Json
    {
        Json j{{"v", outcome.v}, {"q", outcome.q}, {"status", to_string(outcome.status)}};
        j["witness"] = outcome.witness ? Json(elements_of(*outcome.witness)) : Json(nullptr);
        j["nodes_explored"] = outcome.nodes_explored;
        j["precheck_reason"] = outcome.precheck_reason ? Json(to_string(*outcome.precheck_reason)) : Json(nullptr);
        return j;
    }

    auto search_outcome_from_json(const Json & j) -> SearchOutcome
    {
        SearchOutcome outcome;
        outcome.v = j.at("v").get<int64_t>();
        outcome.q = j.at("q").get<int64_t>();
        outcome.status = parse_search_status(j.at("status").get<std::string>());
        if (! j.at("witness").is_null())
            outcome.witness = ResidueSet{Modulus{outcome.v}, j.at("witness").get<vector<int64_t>>()};
        outcome.nodes_explored = j.at("nodes_explored").get<std::uint64_t>();
        if (! j.at("precheck_reason").is_null())
            outcome.precheck_reason = parse_precheck_reason(j.at("precheck_reason").get<std::string>());
        return outcome;
    }

    auto to_json(const Construction & construction) -> Json
    {
        auto j = set_to_json(construction.pds.residues());
        j["q"] = construction.pds.q();
        j["coefficients"] = {field_element_json(construction.coefficients.a1),
            field_element_json(construction.coefficients.a2), field_element_json(construction.coefficients.a3)};
        j["tries"] = construction.tries;
        return j;
    }

    auto to_json(const AxiomReport & report) -> Json
    {
        Json j{{"ok", report.ok()}};
        j["q"] = report.q ? Json(*report.q) : Json(nullptr);
        j["point_pair_failures"] = report.point_pair_failures;
        j["line_pair_failures"] = report.line_pair_failures;
        j["quadrangle"] = report.quadrangle ? Json(*report.quadrangle) : Json(nullptr);
        j["general_position"] = report.general_position ? Json(*report.general_position) : Json(nullptr);
        j["lines_with_wrong_size"] = report.lines_with_wrong_size;
        j["points_with_wrong_degree"] = report.points_with_wrong_degree;
        return j;
    }

    auto to_json(const BaerReport & report) -> Json
    {
        Json checks = Json::array();
        for (auto & c : report.checks)
            checks.push_back(Json{{"name", c.name}, {"applicable", c.applicable}, {"passed", c.passed()},
                {"violations", c.violations}});
        Json j{{"q", report.q}, {"absolute_points", report.absolute_points}, {"absolute_lines", report.absolute_lines}};
        j["absolute_axis"] = report.absolute_axis ? Json(*report.absolute_axis) : Json(nullptr);
        j["violation_count"] = report.violation_count();
        j["checks"] = checks;
        return j;
    }

    auto to_json(const InvolutionReport & report) -> Json
    {
        Json mapping = Json::array();
        for (auto [b, c] : report.mapping)
            mapping.push_back(Json{{"b", b}, {"c", c}, {"d", report.partner.at(b)}});
        return Json{{"a", report.a}, {"mapping", mapping}, {"fixed_points", report.fixed_points},
            {"is_involution", report.is_involution}, {"fixed_point_identity_holds", report.fixed_point_identity_holds}};
    }

    auto to_json(const NonExtensionCertificate & certificate) -> Json
    {
        Json even;
        std::visit(
            [&](const auto & w) {
                using W = std::decay_t<decltype(w)>;
                if constexpr (std::is_same_v<W, OffLineWitness>)
                    even = Json{{"kind", "OffLineWitness"}, {"h4", w.h4}, {"w", w.w}, {"collision", w.collision}};
                else
                    even = Json{{"kind", "SaturationWitness"}, {"a", w.a}, {"u", w.u}, {"collision", w.collision}};
            },
            certificate.even_case);

        Json small = Json::array();
        for (auto & r : certificate.small_moduli_exhausted) {
            Json entry{{"v", r.v}, {"status", to_string(r.status)}};
            entry["precheck_reason"] = r.precheck_reason ? Json(to_string(*r.precheck_reason)) : Json(nullptr);
            entry["nodes_explored"] = r.nodes_explored;
            small.push_back(entry);
        }

        return Json{{"version", certificate.version}, {"shift", certificate.shift},
            {"forced_absolute", certificate.forced_absolute},
            {"collinear_witness", Json{{"t", certificate.collinear_witness.t}, {"triple", certificate.collinear_witness.triple}}},
            {"even_case", even}, {"aliasing_bound", certificate.aliasing_bound}, {"small_moduli_exhausted", small}};
    }

    auto certificate_from_json(const Json & j) -> NonExtensionCertificate
    {
        NonExtensionCertificate c;
        try {
            c.version = j.at("version").get<int>();
            c.shift = j.value("shift", int64_t{0});
            c.forced_absolute = j.at("forced_absolute").get<vector<int64_t>>();
            c.collinear_witness.t = j.at("collinear_witness").at("t").get<int64_t>();
            c.collinear_witness.triple = j.at("collinear_witness").at("triple").get<std::array<int64_t, 3>>();

            auto & even = j.at("even_case");
            auto kind = even.at("kind").get<std::string>();
            if (kind == "OffLineWitness")
                c.even_case = OffLineWitness{even.at("h4").get<int64_t>(), even.at("w").get<int64_t>(),
                    even.at("collision").get<Collision>()};
            else if (kind == "SaturationWitness")
                c.even_case = SaturationWitness{even.at("a").get<int64_t>(), even.at("u").get<int64_t>(),
                    even.at("collision").get<Collision>()};
            else
                throw Error("unknown even_case kind '" + kind + "'");

            c.aliasing_bound = j.at("aliasing_bound").get<int64_t>();
            for (auto & entry : j.at("small_moduli_exhausted")) {
                SmallModulusResult r;
                r.v = entry.at("v").get<int64_t>();
                r.status = parse_search_status(entry.at("status").get<std::string>());
                if (entry.contains("precheck_reason") && ! entry.at("precheck_reason").is_null())
                    r.precheck_reason = parse_precheck_reason(entry.at("precheck_reason").get<std::string>());
                r.nodes_explored = entry.value("nodes_explored", std::uint64_t{0});
                c.small_moduli_exhausted.push_back(r);
            }
        }
        catch (const nlohmann::json::exception & e) {
            throw Error(std::string("malformed certificate JSON: ") + e.what());
        }
        return c;
    }
}
