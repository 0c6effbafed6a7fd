#pragma once

#include <sidonkit/json_io.hpp>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace sidonkit::cli
{
    inline constexpr const char * toolkit_version = "0.1.0";

    /// Cache location used when --cache is not given.
    inline constexpr const char * cache_env_var = "SIDONKIT_CACHE";

    inline constexpr std::uint64_t default_seed = 20240601;

    enum Exit : int
    {
        ok = 0,
        negative = 1,
        usage = 2
    };

    struct Result
    {
        int exit_code = Exit::ok;
        std::string out;
        std::string err;
    };

    /// Runs one command line; `args` excludes the program name.
    auto run(const std::vector<std::string> & args) -> Result;

    /// "1,2,-8" or "@path.json"; an empty string is the empty set.
    auto parse_set(const std::string & text) -> ParsedSet;

    struct RunRecord
    {
        std::string command;
        Json arguments;
        std::string version = toolkit_version;
        Json outcome;
        double wall_time_ms = 0;
        std::string timestamp;

        auto operator==(const RunRecord &) const -> bool = default;
    };

    auto to_json(const RunRecord & record) -> Json;
    auto run_record_from_json(const Json & j) -> RunRecord;

    /// Append-only JSONL file of RunRecords.
    class Cache
    {
    public:
        explicit Cache(std::filesystem::path path);

        auto lookup(const std::string & command, const Json & arguments) const -> std::optional<Json>;
        void append(const RunRecord & record);
        auto records() const -> std::vector<RunRecord>;

    private:
        std::filesystem::path _path;
    };

    auto diagram_dot(const ResidueSet & b) -> std::string;
    auto diagram_json(const ResidueSet & b) -> Json;
    auto diagram_svg(const ResidueSet & b) -> std::string;
}
