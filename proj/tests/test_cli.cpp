#include <doctest.h>

#include <cli.hpp>

#include <sidonkit/sidon.hpp>

#include <filesystem>
#include <fstream>

using namespace sidonkit;
using std::int64_t;
using std::string;
using std::vector;

namespace
{
    auto run(vector<string> args) -> cli::Result
    {
        return cli::run(args);
    }

    auto json_of(const cli::Result & r) -> Json
    {
        return Json::parse(r.out);
    }

    struct TempFile
    {
        std::filesystem::path path;

        explicit TempFile(const string & name) :
            path(std::filesystem::temp_directory_path() / ("sidonkit_test_" + name))
        {
            std::filesystem::remove(path);
        }

        ~TempFile() { std::filesystem::remove(path); }
    };
}

TEST_CASE("set parsing")
{
    CHECK(cli::parse_set("1,2,4").elements == IntegerSet{1, 2, 4});
    CHECK(cli::parse_set("-8, -6,0,1,4").elements == IntegerSet{-8, -6, 0, 1, 4});
    CHECK(cli::parse_set("").elements.empty());
    CHECK_THROWS(cli::parse_set("1,,2"));
    CHECK_THROWS(cli::parse_set("1,x"));
    CHECK_THROWS(cli::parse_set("1.5"));

    TempFile file{"set.json"};
    std::ofstream{file.path} << R"({"elements":[1,2,5,15,17],"modulus":21})";
    auto parsed = cli::parse_set("@" + file.path.string());
    CHECK(parsed.elements == IntegerSet{1, 2, 5, 15, 17});
    CHECK(parsed.modulus == 21);

    auto r = run({"check-pds", "--set", "@" + file.path.string()});
    CHECK(r.exit_code == 0);
    CHECK(json_of(r).at("q") == 4);
}

TEST_CASE("check-sidon")
{
    auto r = run({"check-sidon", "--set", "1,2,3"});
    CHECK(r.exit_code == 1);
    CHECK(json_of(r) == Json::parse(R"({"sidon": false, "violation": {"type":"difference","pairs":[[2,1],[3,2]]}})"));

    r = run({"check-sidon", "--set", "1,2,4,8,13"});
    CHECK(r.exit_code == 0);
    CHECK(json_of(r) == Json::parse(R"({"sidon": true})"));

    r = run({"check-sidon", "--set", "1,2,4,8", "--mod", "7"});
    CHECK(r.exit_code == 1);
    CHECK(json_of(r) == Json::parse(R"({"sidon": false, "violation": {"type":"injectivity","pair":[1,8]}})"));

    r = run({"check-sidon", "--set", "1,2,3", "--formulation", "sum"});
    CHECK(json_of(r).at("violation").at("type") == "sum");
    CHECK(run({"check-sidon", "--set", "1,2", "--formulation", "product"}).exit_code == 2);
    CHECK(run({"check-sidon"}).exit_code == 2);
    CHECK(run({"check-sidon", "--set", "1,2", "--mod", "0"}).exit_code == 2);
}

TEST_CASE("check-pds matches the module")
{
    auto r = run({"check-pds", "--set", "1,2,5,15,17", "--mod", "21"});
    CHECK(r.exit_code == 0);
    CHECK(json_of(r) == to_json(check_pds(IntegerSet{1, 2, 5, 15, 17}, Modulus{21})));

    r = run({"check-pds", "--set", "1,2,4,8,16,32,64,55,37", "--mod", "73"});
    CHECK(r.exit_code == 0);
    CHECK(json_of(r).at("q") == 8);

    r = run({"check-pds", "--set", "1,2,3", "--mod", "7"});
    CHECK(r.exit_code == 1);
    CHECK(json_of(r).at("repeated") == Json::parse("[1,6]"));
    CHECK(json_of(r).at("missing") == Json::parse("[3,4]"));

    CHECK(run({"check-pds", "--set", "1,2,3"}).exit_code == 2);
}

TEST_CASE("construct")
{
    auto r = run({"construct", "--order", "2", "--method", "singer"});
    CHECK(r.exit_code == 0);
    auto j = json_of(r);
    CHECK(j.at("modulus") == 7);
    auto elements = j.at("elements").get<vector<int64_t>>();
    CHECK(check_pds(IntegerSet{elements}, Modulus{7}).is_pds);
    auto singer = singer_pds(2).pds.residues();
    CHECK(elements == vector<int64_t>(singer.begin(), singer.end()));

    auto first = run({"construct", "--order", "4", "--method", "random", "--seed", "7"});
    auto second = run({"construct", "--order", "4", "--method", "random", "--seed", "7"});
    CHECK(first.exit_code == 0);
    CHECK(first.out == second.out);
    CHECK(json_of(first).at("modulus") == 21);
    auto expected = random_recurrence_pds(4, 7, 500);
    CHECK(json_of(first).at("elements") == set_to_json(expected.pds.residues()).at("elements"));

    CHECK(run({"construct", "--order", "5", "--method", "random"}).out
        == run({"construct", "--order", "5", "--method", "random", "--seed", std::to_string(cli::default_seed)}).out);

    r = run({"construct", "--order", "6"});
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("not a prime power") != string::npos);
}

TEST_CASE("search")
{
    auto r = run({"search", "--set", "1,2,4,8", "--sweep", "8"});
    CHECK(r.exit_code == 0);
    CHECK(json_of(r).at("found_orders") == Json::parse("[8]"));
    auto direct = sweep(IntegerSet{1, 2, 4, 8}, 8);
    auto outcomes = json_of(r).at("outcomes");
    REQUIRE(outcomes.size() == direct.size());
    std::size_t i = 0;
    for (auto & [q, outcome] : direct)
        CHECK(outcomes.at(i++) == to_json(outcome));

    r = run({"search", "--set", "1,2,4,8", "--sweep", "8", "--primes-only"});
    CHECK(r.exit_code == 1);
    CHECK(json_of(r).at("found_orders").empty());
    CHECK(json_of(r).at("outcomes").size() == 4);

    r = run({"search", "--set", "1,2,4,8", "--sweep", "9", "--prime-powers-only"});
    CHECK(json_of(r).at("outcomes").size() == 7);

    r = run({"search", "--set", "1,2,4,8,13", "--sweep", "9", "--jobs", "3"});
    CHECK(r.exit_code == 1);
    CHECK(json_of(r).at("found_orders").empty());

    r = run({"search", "--set", "1,2", "--order", "2"});
    CHECK(r.exit_code == 0);
    CHECK(json_of(r) == to_json(extend_to_pds(IntegerSet{1, 2}, Modulus{7})));

    r = run({"search", "--set", "1,2,4,8", "--order", "7", "--budget", "20"});
    CHECK(r.exit_code == 1);
    CHECK(json_of(r).at("status") == "budget_exceeded");

    CHECK(run({"search", "--set", "1,2"}).exit_code == 2);
    CHECK(run({"search", "--set", "1,2", "--order", "2", "--sweep", "3"}).exit_code == 2);
    CHECK(run({"search", "--set", "1,2,3", "--sweep", "3"}).exit_code == 2);
}

TEST_CASE("search cache")
{
    TempFile cache{"cache.jsonl"};
    auto first = run({"search", "--set", "1,2,4,8", "--sweep", "8", "--cache", cache.path.string()});
    auto records = cli::Cache{cache.path}.records();
    CHECK(records.size() == 7);
    for (auto & record : records) {
        CHECK(record.command == "search");
        CHECK(record.version == cli::toolkit_version);
        CHECK(cli::run_record_from_json(Json::parse(cli::to_json(record).dump())) == record);
    }

    auto second = run({"search", "--set", "1,2,4,8", "--sweep", "8", "--cache", cache.path.string()});
    CHECK(first.out == second.out);
    CHECK(cli::Cache{cache.path}.records().size() == 7);

    std::ifstream in{cache.path};
    string line;
    std::size_t lines = 0;
    while (std::getline(in, line)) {
        CHECK(Json::parse(line).at("schema_version") == schema_version);
        ++lines;
    }
    CHECK(lines == 7);
}

TEST_CASE("certify")
{
    TempFile cert_file{"cert.json"};
    auto r = run({"certify", "--set", "1,2,4,8,13", "--output", cert_file.path.string()});
    CHECK(r.exit_code == 0);
    CHECK(json_of(r) == to_json(*certify_non_extension(IntegerSet{1, 2, 4, 8, 13})));
    CHECK(json_of(r).at("even_case").at("collision") == Json::parse("[13,4,1]"));

    auto checked = run({"certify", "--set", "1,2,4,8,13", "--check", cert_file.path.string()});
    CHECK(checked.exit_code == 0);
    CHECK(json_of(checked).at("valid") == true);

    auto wrong_set = run({"certify", "--set", "1,2,4,8,14", "--check", cert_file.path.string()});
    CHECK(wrong_set.exit_code == 1);
    CHECK_FALSE(json_of(wrong_set).at("reasons").empty());

    r = run({"certify", "--set", "1,3,9,10,13"});
    CHECK(r.exit_code == 0);
    CHECK(json_of(r).at("even_case").at("kind") == "OffLineWitness");

    r = run({"certify", "--set", "1,2"});
    CHECK(r.exit_code == 1);
    CHECK(json_of(r) == Json::parse(R"({"status":"inconclusive"})"));

    TempFile garbage{"garbage.json"};
    std::ofstream{garbage.path} << R"({"version": 1})";
    CHECK(run({"certify", "--set", "1,2,4,8,13", "--check", garbage.path.string()}).exit_code == 2);
    CHECK(run({"certify", "--set", "1,2,4,8,13", "--check", "/nonexistent/cert.json"}).exit_code == 2);
}

TEST_CASE("plane reports and diagrams")
{
    auto dot = run({"plane", "--set", "1,2,5,15,17", "--mod", "21", "--emit", "dot"});
    CHECK(dot.exit_code == 0);
    CHECK(dot.out == run({"plane", "--set", "1,2,5,15,17", "--mod", "21", "--emit", "dot"}).out);
    for (int k = 0; k < 21; ++k) {
        auto label = "t" + std::to_string(k) + " [label=\"" + std::to_string(k) + "\"";
        auto at = dot.out.find(label);
        REQUIRE(at != string::npos);
        auto line = dot.out.substr(at, dot.out.find('\n', at) - at);
        bool bold = k == 1 || k == 2 || k == 5 || k == 15 || k == 17;
        CHECK((line.find("Bold") != string::npos) == bold);
    }

    auto json = run({"plane", "--set", "1,2,5,15,17", "--mod", "21", "--emit", "json"});
    CHECK(json_of(json) == Json::parse(R"({"modulus":21,"bold":[1,2,5,15,17]})"));

    auto svg = run({"plane", "--set", "1,2,5,15,17", "--mod", "21", "--emit", "svg"});
    CHECK(svg.out.starts_with("<svg"));
    std::size_t bold_ticks = 0;
    for (auto at = svg.out.find("stroke-width=\"3\""); at != string::npos; at = svg.out.find("stroke-width=\"3\"", at + 1))
        ++bold_ticks;
    CHECK(bold_ticks == 5);
    CHECK(svg.out == run({"plane", "--set", "1,2,5,15,17", "--mod", "21", "--emit", "svg"}).out);

    auto b = singer_pds(4).pds;
    string set_text;
    for (auto x : b.residues())
        set_text += (set_text.empty() ? "" : ",") + std::to_string(x);
    auto baer = run({"plane", "--set", set_text, "--mod", "21", "--report", "baer"});
    CHECK(baer.exit_code == 0);
    CHECK(json_of(baer) == to_json(baer_report(CyclicPlane{b})));
    CHECK(json_of(baer).at("violation_count") == 0);

    auto absolute = run({"plane", "--set", "1,2,4", "--mod", "7", "--report", "absolute"});
    CHECK(json_of(absolute).at("absolute_points") == Json::parse("[1,2,4]"));

    auto axioms = run({"plane", "--set", "1,2,4", "--mod", "7"});
    CHECK(axioms.exit_code == 0);
    CHECK(json_of(axioms).at("ok") == true);

    CHECK(run({"plane", "--set", "1,2,3", "--mod", "7", "--report", "axioms"}).exit_code == 2);
    CHECK(run({"plane", "--set", "1,2,4", "--mod", "7", "--report", "axioms", "--emit", "dot"}).exit_code == 2);
}

TEST_CASE("sequences and census")
{
    auto r = run({"mian-chowla", "--count", "11"});
    CHECK(json_of(r).at("terms") == Json::parse("[1,2,4,8,13,21,31,45,66,81,97]"));

    r = run({"ruler", "--set", "", "--dmax", "2"});
    CHECK(json_of(r).at("extended") == Json::parse("[0,1,4,6]"));
    r = run({"ruler", "--set", "1,2,4,8,13", "--dmax", "30"});
    CHECK(json_of(r).at("extended").get<vector<int64_t>>()
        == vector<int64_t>{1, 2, 4, 8, 13, 23, 31, 51, 64, 90, 104, 158, 174, 250, 267, 298, 322, 409, 434});

    r = run({"census", "--mod", "7"});
    CHECK(r.exit_code == 0);
    CHECK(json_of(r).at("count") == 14);
    r = run({"census", "--mod", "13", "--list"});
    CHECK(json_of(r).at("count") == 52);
    CHECK(json_of(r).at("sets").size() == 52);
    CHECK(run({"census", "--mod", "8"}).exit_code == 2);
}

TEST_CASE("usage errors")
{
    CHECK(run({}).exit_code == 2);
    CHECK(run({"frobnicate"}).exit_code == 2);
    CHECK(run({"--help"}).exit_code == 0);
    CHECK(run({"--version"}).out.find(cli::toolkit_version) != string::npos);
}
