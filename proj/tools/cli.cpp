#include "cli.hpp"

#include <sidonkit/errors.hpp>
#include <sidonkit/finite_field.hpp>
#include <sidonkit/sidon.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <sstream>

using std::int64_t;
using std::optional;
using std::string;
using std::uint64_t;
using std::vector;

namespace sidonkit::cli
{
    namespace
    {
        /// Input problems found after CLI11 has parsed the line.
        struct UsageError : Error
        {
            using Error::Error;
        };

        auto elements_of(const auto & set) -> vector<int64_t>
        {
            return {set.begin(), set.end()};
        }

        auto read_json_file(const string & path) -> Json
        {
            std::ifstream in{path};
            if (! in)
                throw UsageError("cannot open '" + path + "'");
            try {
                return Json::parse(in);
            }
            catch (const Json::exception & e) {
                throw UsageError("'" + path + "' is not valid JSON: " + e.what());
            }
        }

        auto pair_json(std::pair<int64_t, int64_t> p) -> Json
        {
            return Json::array({p.first, p.second});
        }

        auto violation_json(const SidonViolation & v) -> Json
        {
            switch (v.kind) {
            case ViolationKind::injectivity: return Json{{"type", "injectivity"}, {"pair", pair_json(v.first)}};
            case ViolationKind::difference:
                return Json{{"type", "difference"}, {"pairs", Json::array({pair_json(v.first), pair_json(v.second)})}};
            case ViolationKind::sum:
                return Json{{"type", "sum"}, {"pairs", Json::array({pair_json(v.first), pair_json(v.second)})}};
            }
            return nullptr;
        }

        auto timestamp_now() -> string
        {
            auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
            std::tm utc{};
            gmtime_r(&now, &utc);
            char buffer[32];
            std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", &utc);
            return buffer;
        }

        auto modulus_of(const ParsedSet & set, optional<int64_t> flag) -> Modulus
        {
            if (flag)
                return Modulus{*flag};
            if (set.modulus)
                return Modulus{*set.modulus};
            throw UsageError("--mod is required");
        }

        auto search_options(uint64_t budget, unsigned jobs, bool forward_check) -> SearchOptions
        {
            SearchOptions options;
            options.node_budget = budget;
            options.jobs = jobs;
            options.forward_check = forward_check;
            return options;
        }

        /// Shared state for one invocation.
        struct Context
        {
            std::ostringstream out;
            int exit_code = Exit::ok;

            void emit(const Json & j, bool satisfied)
            {
                out << j.dump() << '\n';
                exit_code = satisfied ? Exit::ok : Exit::negative;
            }
        };

        auto open_cache(const string & flag) -> optional<Cache>
        {
            if (! flag.empty())
                return Cache{flag};
            if (auto * env = std::getenv(cache_env_var); env && *env)
                return Cache{env};
            return std::nullopt;
        }

        auto cached_search(optional<Cache> & cache, const IntegerSet & a, Modulus v, const SearchOptions & options)
            -> SearchOutcome
        {
            // jobs is left out of the key: results do not depend on it.
            Json key{{"set", elements_of(a)}, {"v", v.value()}, {"budget", options.node_budget},
                {"forward_check", options.forward_check}};
            if (cache)
                if (auto hit = cache->lookup("search", key))
                    return search_outcome_from_json(*hit);

            auto start = std::chrono::steady_clock::now();
            auto outcome = extend_to_pds(a, v, options);
            auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
            if (cache)
                cache->append(RunRecord{"search", key, toolkit_version, to_json(outcome), elapsed.count(), timestamp_now()});
            return outcome;
        }
    }

    auto parse_set(const string & text) -> ParsedSet
    {
        if (! text.empty() && text.front() == '@') {
            try {
                return set_from_json(read_json_file(text.substr(1)));
            }
            catch (const Json::exception & e) {
                throw UsageError(string{"bad set file: "} + e.what());
            }
        }

        vector<int64_t> values;
        std::istringstream in{text};
        string item;
        while (std::getline(in, item, ',')) {
            auto first = item.find_first_not_of(" \t");
            if (first == string::npos)
                throw UsageError("empty entry in set '" + text + "'");
            auto last = item.find_last_not_of(" \t");
            item = item.substr(first, last - first + 1);
            std::size_t used = 0;
            try {
                values.push_back(std::stoll(item, &used));
            }
            catch (const std::exception &) {
                used = 0;
            }
            if (used != item.size() || used == 0)
                throw UsageError("'" + item + "' is not an integer");
        }
        return {IntegerSet{values}, std::nullopt};
    }

    auto to_json(const RunRecord & record) -> Json
    {
        return Json{{"schema_version", schema_version}, {"command", record.command}, {"arguments", record.arguments},
            {"toolkit_version", record.version}, {"outcome", record.outcome}, {"wall_time_ms", record.wall_time_ms},
            {"timestamp", record.timestamp}};
    }

    auto run_record_from_json(const Json & j) -> RunRecord
    {
        return RunRecord{j.at("command").get<string>(), j.at("arguments"), j.at("toolkit_version").get<string>(),
            j.at("outcome"), j.at("wall_time_ms").get<double>(), j.at("timestamp").get<string>()};
    }

    Cache::Cache(std::filesystem::path path) :
        _path(std::move(path))
    {
    }

    auto Cache::records() const -> vector<RunRecord>
    {
        vector<RunRecord> result;
        std::ifstream in{_path};
        string line;
        while (std::getline(in, line)) {
            if (line.empty())
                continue;
            auto j = Json::parse(line, nullptr, false);
            if (j.is_discarded() || ! j.is_object())
                continue;
            try {
                result.push_back(run_record_from_json(j));
            }
            catch (const Json::exception &) {
            }
        }
        return result;
    }

    auto Cache::lookup(const string & command, const Json & arguments) const -> optional<Json>
    {
        for (auto & record : records())
            if (record.command == command && record.arguments == arguments && record.version == toolkit_version)
                return record.outcome;
        return std::nullopt;
    }

    void Cache::append(const RunRecord & record)
    {
        std::ofstream out{_path, std::ios::app};
        if (! out)
            throw Error("cannot append to cache '" + _path.string() + "'");
        out << to_json(record).dump() << '\n';
    }

    auto run(const vector<string> & args) -> Result
    {
        CLI::App app{"Sidon sets, perfect difference sets and cyclic projective planes", "sidonkit"};
        app.require_subcommand(1);
        app.set_version_flag("--version", toolkit_version);

        Context ctx;
        std::function<void()> action;

        string set_text, formulation = "diff", method = "singer", report, emit, check_path, output_path, cache_path;
        optional<int64_t> modulus;
        int64_t order = 0, sweep_max = 0, dmax = 0;
        uint64_t seed = default_seed, budget = SearchOptions{}.node_budget;
        std::size_t count = 0, max_tries = 500;
        unsigned jobs = 1;
        bool primes_only = false, prime_powers_only = false, forward_check = false, list = false;

        auto add_search_flags = [&](CLI::App * sub) {
            sub->add_option("--budget", budget, "Node budget per modulus");
            sub->add_option("--jobs", jobs, "Worker threads for the search")->check(CLI::Range(1u, 1024u));
            sub->add_flag("--forward-check", forward_check, "Prune when too few candidates remain");
        };

        auto * check_sidon = app.add_subcommand("check-sidon", "Test the Sidon property");
        check_sidon->add_option("--set", set_text, "Comma-separated integers or @file.json")->required();
        check_sidon->add_option("--mod", modulus, "Test modulo v instead of over the integers");
        check_sidon->add_option("--formulation", formulation, "diff or sum")->check(CLI::IsMember({"diff", "sum"}));
        check_sidon->callback([&] {
            action = [&] {
                auto set = parse_set(set_text);
                optional<SidonViolation> violation;
                if (modulus || set.modulus)
                    violation = find_modular_violation(set.elements, modulus_of(set, modulus));
                else if (formulation == "sum")
                    violation = find_sum_violation(set.elements);
                else
                    violation = find_difference_violation(set.elements);
                Json j{{"sidon", ! violation}};
                if (violation)
                    j["violation"] = violation_json(*violation);
                ctx.emit(j, ! violation);
            };
        });

        auto * check_pds_cmd = app.add_subcommand("check-pds", "Test whether a set is a perfect difference set mod v");
        check_pds_cmd->add_option("--set", set_text, "Comma-separated integers or @file.json")->required();
        check_pds_cmd->add_option("--mod", modulus, "Modulus v");
        check_pds_cmd->callback([&] {
            action = [&] {
                auto set = parse_set(set_text);
                auto result = check_pds(set.elements, modulus_of(set, modulus), PdsCheckMode::lenient);
                ctx.emit(to_json(result), result.is_pds);
            };
        });

        auto * construct = app.add_subcommand("construct", "Build a perfect difference set of order q");
        construct->add_option("--order", order, "Prime power q")->required();
        construct->add_option("--method", method, "singer or random")->check(CLI::IsMember({"singer", "random"}));
        construct->add_option("--seed", seed, "Seed for --method random");
        construct->add_option("--max-tries", max_tries, "Coefficient draws before giving up");
        construct->callback([&] {
            action = [&] {
                if (order < 2 || ! is_prime_power(static_cast<uint64_t>(order)))
                    throw UsageError(std::to_string(order) + " is not a prime power");
                auto q = static_cast<uint64_t>(order);
                auto built = method == "singer" ? singer_pds(q) : random_recurrence_pds(q, seed, max_tries);
                auto j = to_json(built);
                j["method"] = method;
                if (method == "random")
                    j["seed"] = seed;
                ctx.emit(j, true);
            };
        });

        auto * search = app.add_subcommand("search", "Search for a perfect difference set containing A");
        search->add_option("--set", set_text, "Comma-separated integers or @file.json")->required();
        auto * order_opt = search->add_option("--order", order, "Single order q");
        auto * sweep_opt = search->add_option("--sweep", sweep_max, "Every order 2..q_max");
        order_opt->excludes(sweep_opt);
        auto * primes_flag = search->add_flag("--primes-only", primes_only, "Sweep prime orders only");
        search->add_flag("--prime-powers-only", prime_powers_only, "Sweep prime-power orders only")->excludes(primes_flag);
        search->add_option("--cache", cache_path, string{"JSONL result cache (default: $"} + cache_env_var + ")");
        add_search_flags(search);
        search->callback([&] {
            action = [&] {
                if (order_opt->count() == 0 && sweep_opt->count() == 0)
                    throw UsageError("one of --order or --sweep is required");
                auto a = parse_set(set_text).elements;
                auto options = search_options(budget, jobs, forward_check);
                auto cache = open_cache(cache_path);

                if (order_opt->count() > 0) {
                    if (order < 1)
                        throw UsageError("--order must be at least 1");
                    auto outcome = cached_search(cache, a, plane_modulus(order), options);
                    ctx.emit(to_json(outcome), outcome.status == SearchStatus::found);
                    return;
                }

                if (! is_sidon_differences(a))
                    throw NotSidonError("input set is not a Sidon set");
                auto filter = primes_only ? OrderFilter::primes
                    : prime_powers_only  ? OrderFilter::prime_powers
                                         : OrderFilter::all;
                Json outcomes = Json::array();
                vector<int64_t> found;
                for (int64_t q = 2; q <= sweep_max; ++q) {
                    bool keep = filter == OrderFilter::all
                        || (filter == OrderFilter::primes ? is_prime(static_cast<uint64_t>(q))
                                                          : is_prime_power(static_cast<uint64_t>(q)).has_value());
                    if (! keep)
                        continue;
                    auto outcome = cached_search(cache, a, plane_modulus(q), options);
                    if (outcome.status == SearchStatus::found)
                        found.push_back(q);
                    outcomes.push_back(to_json(outcome));
                }
                Json j{{"schema_version", schema_version}, {"set", elements_of(a)}, {"q_max", sweep_max},
                    {"found_orders", found}, {"outcomes", outcomes}};
                ctx.emit(j, ! found.empty());
            };
        });

        auto * certify = app.add_subcommand("certify", "Prove that A extends to no perfect difference set");
        certify->add_option("--set", set_text, "Comma-separated integers or @file.json")->required();
        certify->add_option("--check", check_path, "Validate this certificate file instead of building one");
        certify->add_option("--output", output_path, "Also write the certificate here");
        add_search_flags(certify);
        certify->callback([&] {
            action = [&] {
                auto a = parse_set(set_text).elements;
                auto options = search_options(budget, jobs, forward_check);
                if (! check_path.empty()) {
                    NonExtensionCertificate cert;
                    try {
                        cert = certificate_from_json(read_json_file(check_path));
                    }
                    catch (const Json::exception & e) {
                        throw UsageError(string{"malformed certificate: "} + e.what());
                    }
                    auto verdict = check_certificate(cert, a, options);
                    ctx.emit(Json{{"valid", verdict.valid}, {"reasons", verdict.reasons}}, verdict.valid);
                    return;
                }

                CertifyOptions certify_options;
                certify_options.search = options;
                optional<NonExtensionCertificate> cert;
                string reason;
                try {
                    cert = certify_non_extension(a, certify_options);
                }
                catch (const BudgetExceededError & e) {
                    reason = e.what();
                }
                if (! cert) {
                    Json j{{"status", "inconclusive"}};
                    if (! reason.empty())
                        j["reason"] = reason;
                    ctx.emit(j, false);
                    return;
                }
                auto j = to_json(*cert);
                if (! output_path.empty()) {
                    std::ofstream file{output_path};
                    if (! file)
                        throw UsageError("cannot write '" + output_path + "'");
                    file << j.dump(2) << '\n';
                }
                ctx.emit(j, true);
            };
        });

        auto * plane = app.add_subcommand("plane", "Reports and diagrams for the cyclic plane of B");
        plane->add_option("--set", set_text, "Comma-separated integers or @file.json")->required();
        plane->add_option("--mod", modulus, "Modulus v");
        auto * report_opt = plane->add_option("--report", report, "axioms, baer or absolute")
                                ->check(CLI::IsMember({"axioms", "baer", "absolute"}));
        plane->add_option("--emit", emit, "dot, json or svg")->check(CLI::IsMember({"dot", "json", "svg"}))->excludes(report_opt);
        plane->callback([&] {
            action = [&] {
                auto set = parse_set(set_text);
                auto residues = reduce_int_set(set.elements, modulus_of(set, modulus));
                if (emit == "dot")
                    ctx.out << diagram_dot(residues);
                else if (emit == "json")
                    ctx.out << diagram_json(residues).dump() << '\n';
                else if (emit == "svg")
                    ctx.out << diagram_svg(residues);
                if (! emit.empty())
                    return;

                auto verdict = check_pds(residues, PdsCheckMode::lenient);
                if (! verdict.is_pds)
                    throw UsageError("the set is not a perfect difference set modulo " + std::to_string(residues.v()));
                CyclicPlane cyclic{PerfectDifferenceSet{residues}};
                if (report == "baer") {
                    auto baer = baer_report(cyclic);
                    ctx.emit(to_json(baer), baer.violation_count() == 0);
                }
                else if (report == "absolute") {
                    vector<int64_t> lines;
                    for (int64_t y = 0; y < cyclic.v(); ++y)
                        if (is_absolute_line(cyclic, y))
                            lines.push_back(y);
                    ctx.emit(Json{{"absolute_points", elements_of(absolute_points(cyclic))}, {"absolute_lines", lines}}, true);
                }
                else {
                    auto axioms = verify_projective_axioms(cyclic);
                    ctx.emit(to_json(axioms), axioms.ok());
                }
            };
        });

        auto * mc = app.add_subcommand("mian-chowla", "Terms of the greedy Sidon sequence");
        mc->add_option("--count", count, "Number of terms")->required();
        mc->callback([&] { action = [&] { ctx.emit(Json{{"terms", elements_of(mian_chowla(count))}}, true); }; });

        auto * ruler = app.add_subcommand("ruler", "Greedy extension to a ruler covering 1..d_max once");
        ruler->add_option("--set", set_text, "Comma-separated integers or @file.json (may be empty)")->required();
        ruler->add_option("--dmax", dmax, "Largest difference to realize")->required()->check(CLI::NonNegativeNumber);
        ruler->callback([&] {
            action = [&] {
                auto r = extend_to_perfect_ruler(parse_set(set_text).elements, dmax);
                ctx.emit(Json{{"base", elements_of(r.base)}, {"extended", elements_of(r.extended)},
                             {"realized_up_to", r.realized_up_to}},
                    true);
            };
        });

        auto * census = app.add_subcommand("census", "Count every perfect difference set modulo v");
        census->add_option("--mod", modulus, "Modulus v = q^2 + q + 1")->required();
        census->add_flag("--list", list, "Include the sets themselves");
        census->callback([&] {
            action = [&] {
                auto all = enumerate_pds(Modulus{*modulus});
                Json j{{"v", *modulus}, {"q", *order_of_modulus(Modulus{*modulus})}, {"count", all.size()}};
                if (list) {
                    Json sets = Json::array();
                    for (auto & b : all)
                        sets.push_back(elements_of(b));
                    j["sets"] = sets;
                }
                ctx.emit(j, ! all.empty());
            };
        });

        Result result;
        std::ostringstream err;
        try {
            vector<string> reversed(args.rbegin(), args.rend());
            app.parse(reversed);
        }
        catch (const CLI::ParseError & e) {
            std::ostringstream out;
            auto code = app.exit(e, out, err);
            result.out = out.str();
            result.err = err.str();
            result.exit_code = code == 0 ? Exit::ok : Exit::usage;
            return result;
        }

        try {
            if (action)
                action();
            result.exit_code = ctx.exit_code;
        }
        catch (const UsageError & e) {
            err << "error: " << e.what() << '\n';
            result.exit_code = Exit::usage;
        }
        catch (const BudgetExceededError & e) {
            err << "error: " << e.what() << '\n';
            result.exit_code = Exit::negative;
        }
        catch (const Error & e) {
            err << "error: " << e.what() << '\n';
            result.exit_code = Exit::usage;
        }
        result.out = ctx.out.str();
        result.err = err.str();
        return result;
    }
}
