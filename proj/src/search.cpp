#include <sidonkit/errors.hpp>
#include <sidonkit/finite_field.hpp>
#include <sidonkit/pds.hpp>
#include <sidonkit/search.hpp>
#include <sidonkit/sidon.hpp>

#include <algorithm>
#include <atomic>
#include <thread>

using std::int64_t;
using std::optional;
using std::uint64_t;
using std::vector;

namespace sidonkit
{
    using std::to_string;

    namespace
    {
        struct BranchResult
        {
            optional<vector<int64_t>> free_elements;
            uint64_t nodes = 0;
            bool truncated = false;
        };

        /// Depth-first extension of a fixed residue set. Each instance owns its
        /// own difference marks, so branches can run on separate threads.
        class Extender
        {
        public:
            Extender(Modulus v, const vector<int64_t> & fixed, std::size_t free_slots, bool forward_check) :
                _v(v),
                _n(v.value()),
                _free_slots(free_slots),
                _forward_check(forward_check),
                _chosen(fixed),
                _is_member(_n, 0),
                _used(_n, 0),
                _stamp(_n, 0)
            {
                for (auto b : fixed)
                    _is_member[b] = 1;
                for (auto x : fixed)
                    for (auto y : fixed)
                        if (x != y)
                            _used[normalize(x - y, _v)] = 1;
            }

            /// Candidates for the first free element, in increasing order.
            auto first_level() const -> vector<int64_t>
            {
                vector<int64_t> result;
                for (int64_t x = 0; x < _n; ++x)
                    if (compatible(x))
                        result.push_back(x);
                return result;
            }

            /// Explores the subtree rooted at placing `first`, stopping after `limit` nodes.
            auto run_branch(int64_t first, uint64_t limit) -> BranchResult
            {
                _limit = limit;
                _nodes = 0;
                _truncated = false;
                _free.clear();
                BranchResult result;
                if (place_and_recurse(first))
                    result.free_elements = _witness;
                result.nodes = _nodes;
                result.truncated = _truncated;
                return result;
            }

        private:
            // New differences must avoid used ones and each other; x - b1 can
            // equal b2 - x when 2x = b1 + b2.
            auto compatible(int64_t x) const -> bool
            {
                if (_is_member[x])
                    return false;
                ++_stamp_value;
                for (auto b : _chosen)
                    for (auto d : {normalize(x - b, _v), normalize(b - x, _v)}) {
                        if (_used[d] || _stamp[d] == _stamp_value)
                            return false;
                        _stamp[d] = _stamp_value;
                    }
                return true;
            }

            void mark(int64_t x, char value)
            {
                for (auto b : _chosen)
                    if (b != x) {
                        _used[normalize(x - b, _v)] = value;
                        _used[normalize(b - x, _v)] = value;
                    }
            }

            auto place_and_recurse(int64_t x) -> bool
            {
                if (++_nodes > _limit) {
                    _truncated = true;
                    return false;
                }
                mark(x, 1);
                _chosen.push_back(x);
                _is_member[x] = 1;
                _free.push_back(x);

                bool found = recurse(x + 1);

                _free.pop_back();
                _is_member[x] = 0;
                _chosen.pop_back();
                mark(x, 0);
                return found;
            }

            auto recurse(int64_t from) -> bool
            {
                if (_free.size() == _free_slots) {
                    _witness = _free;
                    return true;
                }

                if (_forward_check) {
                    std::size_t remaining = 0;
                    auto needed = _free_slots - _free.size();
                    for (auto x = from; x < _n && remaining < needed; ++x)
                        if (compatible(x))
                            ++remaining;
                    if (remaining < needed)
                        return false;
                }

                for (auto x = from; x < _n; ++x) {
                    if (! compatible(x))
                        continue;
                    if (place_and_recurse(x))
                        return true;
                    if (_truncated)
                        return false;
                }
                return false;
            }

            Modulus _v;
            int64_t _n;
            std::size_t _free_slots;
            bool _forward_check;
            vector<int64_t> _chosen;
            vector<char> _is_member;
            vector<char> _used;
            vector<int64_t> _free;
            vector<int64_t> _witness;
            mutable vector<uint64_t> _stamp;
            mutable uint64_t _stamp_value = 0;
            uint64_t _limit = 0, _nodes = 0;
            bool _truncated = false;
        };

        auto precheck(const IntegerSet & a, Modulus v, int64_t q) -> optional<PrecheckReason>
        {
            auto violation = find_modular_violation(a, v);
            if (violation && violation->kind == ViolationKind::injectivity)
                return PrecheckReason::injectivity;
            if (violation)
                return PrecheckReason::not_sidon_mod_v;
            if (static_cast<int64_t>(a.size()) > q + 1)
                return PrecheckReason::size;
            return std::nullopt;
        }

        void require_sidon(const IntegerSet & a)
        {
            if (! is_sidon_differences(a))
                throw NotSidonError("input set is not a Sidon set");
        }

        auto passes(OrderFilter filter, int64_t q) -> bool
        {
            switch (filter) {
            case OrderFilter::all: return true;
            case OrderFilter::prime_powers: return is_prime_power(static_cast<uint64_t>(q)).has_value();
            case OrderFilter::primes: return is_prime(static_cast<uint64_t>(q));
            }
            return true;
        }
    }

    auto to_string(SearchStatus status) -> std::string
    {
        switch (status) {
        case SearchStatus::found: return "found";
        case SearchStatus::exhausted: return "exhausted";
        case SearchStatus::precheck_failed: return "precheck_failed";
        case SearchStatus::budget_exceeded: return "budget_exceeded";
        }
        return "unknown";
    }

    auto to_string(PrecheckReason reason) -> std::string
    {
        switch (reason) {
        case PrecheckReason::injectivity: return "injectivity";
        case PrecheckReason::not_sidon_mod_v: return "not_sidon_mod_v";
        case PrecheckReason::size: return "size";
        case PrecheckReason::not_admissible_order: return "not_admissible_order";
        }
        return "unknown";
    }

    auto parse_search_status(const std::string & text) -> SearchStatus
    {
        for (auto s : {SearchStatus::found, SearchStatus::exhausted, SearchStatus::precheck_failed, SearchStatus::budget_exceeded})
            if (to_string(s) == text)
                return s;
        throw Error("unknown search status '" + text + "'");
    }

    auto parse_precheck_reason(const std::string & text) -> PrecheckReason
    {
        for (auto r : {PrecheckReason::injectivity, PrecheckReason::not_sidon_mod_v, PrecheckReason::size,
                 PrecheckReason::not_admissible_order})
            if (to_string(r) == text)
                return r;
        throw Error("unknown precheck reason '" + text + "'");
    }

    auto admissible_orders(const IntegerSet & a, int64_t q_max) -> vector<int64_t>
    {
        require_sidon(a);
        vector<int64_t> orders;
        for (int64_t q = 2; q <= q_max; ++q)
            if (! precheck(a, plane_modulus(q), q))
                orders.push_back(q);
        return orders;
    }

    auto extend_to_pds(const IntegerSet & a, Modulus v, const SearchOptions & options) -> SearchOutcome
    {
        auto q = order_of_modulus(v);
        if (! q)
            throw InvalidModulusError(std::to_string(v.value()) + " is not of the form q^2 + q + 1");

        SearchOutcome outcome;
        outcome.v = v.value();
        outcome.q = *q;
        outcome.nodes_explored = 1;

        if (auto reason = precheck(a, v, *q)) {
            outcome.status = SearchStatus::precheck_failed;
            outcome.precheck_reason = reason;
            return outcome;
        }

        auto fixed = reduce_int_set(a, v);
        vector<int64_t> fixed_elements(fixed.begin(), fixed.end());
        auto free_slots = static_cast<std::size_t>(*q + 1) - fixed_elements.size();

        if (free_slots == 0) {
            outcome.status = check_pds(fixed).is_pds ? SearchStatus::found : SearchStatus::exhausted;
            if (outcome.status == SearchStatus::found)
                outcome.witness = fixed;
            return outcome;
        }

        Extender root{v, fixed_elements, free_slots, options.forward_check};
        auto branches = root.first_level();
        auto budget = options.node_budget;

        // Branch i's result only matters if every earlier branch failed, so the
        // merge below walks branches in order and reproduces the sequential
        // node count whatever the thread count.
        vector<BranchResult> results(branches.size());
        auto jobs = std::max(1u, options.jobs);
        if (jobs == 1) {
            uint64_t spent = outcome.nodes_explored;
            for (std::size_t i = 0; i < branches.size(); ++i) {
                auto remaining = spent > budget ? 0 : budget - spent;
                results[i] = root.run_branch(branches[i], remaining);
                spent += results[i].nodes;
                if (results[i].free_elements || results[i].truncated) {
                    results.resize(i + 1);
                    break;
                }
            }
        }
        else {
            std::atomic<std::size_t> next{0};
            std::atomic<std::size_t> first_success{branches.size()};
            vector<std::thread> workers;
            for (unsigned w = 0; w < jobs; ++w)
                workers.emplace_back([&] {
                    Extender local{v, fixed_elements, free_slots, options.forward_check};
                    for (auto i = next++; i < branches.size(); i = next++) {
                        if (i > first_success.load())
                            continue;
                        results[i] = local.run_branch(branches[i], budget);
                        if (results[i].free_elements || results[i].truncated) {
                            auto current = first_success.load();
                            while (i < current && ! first_success.compare_exchange_weak(current, i))
                                ;
                        }
                    }
                });
            for (auto & t : workers)
                t.join();
        }

        for (auto & r : results) {
            outcome.nodes_explored += r.nodes;
            if (outcome.nodes_explored > budget || r.truncated) {
                outcome.status = SearchStatus::budget_exceeded;
                outcome.nodes_explored = budget;
                return outcome;
            }
            if (r.free_elements) {
                auto elements = fixed_elements;
                elements.insert(elements.end(), r.free_elements->begin(), r.free_elements->end());
                outcome.status = SearchStatus::found;
                outcome.witness = ResidueSet{v, elements};
                return outcome;
            }
        }
        outcome.status = SearchStatus::exhausted;
        return outcome;
    }

    auto sweep(const IntegerSet & a, int64_t q_max, const SearchOptions & options, OrderFilter filter)
        -> std::map<int64_t, SearchOutcome>
    {
        require_sidon(a);
        std::map<int64_t, SearchOutcome> outcomes;
        for (int64_t q = 2; q <= q_max; ++q)
            if (passes(filter, q))
                outcomes.emplace(q, extend_to_pds(a, plane_modulus(q), options));
        return outcomes;
    }
}
