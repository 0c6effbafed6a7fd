#pragma once

#include <sidonkit/modular.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sidonkit
{
    enum class SearchStatus
    {
        found,
        exhausted,
        precheck_failed,
        budget_exceeded
    };

    enum class PrecheckReason
    {
        injectivity,
        not_sidon_mod_v,
        size,
        not_admissible_order
    };

    auto to_string(SearchStatus status) -> std::string;
    auto to_string(PrecheckReason reason) -> std::string;
    auto parse_search_status(const std::string & text) -> SearchStatus;
    auto parse_precheck_reason(const std::string & text) -> PrecheckReason;

    struct SearchOutcome
    {
        std::int64_t v = 0;
        std::int64_t q = 0;
        SearchStatus status = SearchStatus::exhausted;
        /// Lexicographically least perfect difference set containing the image of A.
        std::optional<ResidueSet> witness;
        std::uint64_t nodes_explored = 0;
        std::optional<PrecheckReason> precheck_reason;

        auto operator==(const SearchOutcome &) const -> bool = default;
    };

    struct SearchOptions
    {
        std::uint64_t node_budget = 100'000'000;
        unsigned jobs = 1;
        /// Prune when fewer compatible candidates remain than free slots.
        bool forward_check = false;
    };

    enum class OrderFilter
    {
        all,
        prime_powers,
        primes
    };

    /// Orders q in [2, q_max] that pass the cheap prechecks: A reduces
    /// injectively, is Sidon mod v, and fits in q + 1 elements. Throws
    /// NotSidonError if A is not a Sidon set.
    auto admissible_orders(const IntegerSet & a, std::int64_t q_max) -> std::vector<std::int64_t>;

    /// Complete backtracking over supersets of A mod v with q + 1 elements.
    /// Free elements are added in increasing residue order, so the first
    /// witness found is the lexicographically least one.
    auto extend_to_pds(const IntegerSet & a, Modulus v, const SearchOptions & options = {}) -> SearchOutcome;

    /// extend_to_pds for every q in [2, q_max] passing the filter; orders that
    /// fail the prechecks are reported as precheck_failed without a search.
    auto sweep(const IntegerSet & a, std::int64_t q_max, const SearchOptions & options = {},
        OrderFilter filter = OrderFilter::all) -> std::map<std::int64_t, SearchOutcome>;
}
