#include <sidonkit/errors.hpp>
#include <sidonkit/sidon.hpp>

#include <cmath>
#include <string>
#include <unordered_map>
#include <unordered_set>

using std::int64_t;
using std::optional;
using std::pair;
using std::vector;

namespace sidonkit
{
    namespace
    {
        // Dense tables are used while the span stays below this many cells.
        constexpr int64_t dense_span_limit = int64_t{1} << 22;

        auto span_of(const IntegerSet & a) -> int64_t
        {
            return a.empty() ? 0 : a.elements().back() - a.elements().front();
        }

        auto difference_violation_dense(const IntegerSet & a) -> optional<SidonViolation>
        {
            auto e = a.elements();
            vector<pair<int64_t, int64_t>> owner(span_of(a) + 1, {0, 0});
            vector<char> used(span_of(a) + 1, 0);
            for (std::size_t j = 1; j < e.size(); ++j)
                for (std::size_t i = 0; i < j; ++i) {
                    auto d = e[j] - e[i];
                    if (used[d])
                        return SidonViolation{ViolationKind::difference, owner[d], {e[j], e[i]}};
                    used[d] = 1;
                    owner[d] = {e[j], e[i]};
                }
            return std::nullopt;
        }

        auto difference_violation_sparse(const IntegerSet & a) -> optional<SidonViolation>
        {
            auto e = a.elements();
            std::unordered_map<int64_t, pair<int64_t, int64_t>> owner;
            for (std::size_t j = 1; j < e.size(); ++j)
                for (std::size_t i = 0; i < j; ++i) {
                    auto [it, inserted] = owner.emplace(e[j] - e[i], pair{e[j], e[i]});
                    if (! inserted)
                        return SidonViolation{ViolationKind::difference, it->second, {e[j], e[i]}};
                }
            return std::nullopt;
        }
    }

    auto find_difference_violation(const IntegerSet & a) -> optional<SidonViolation>
    {
        if (span_of(a) >= dense_span_limit)
            return difference_violation_sparse(a);

        auto dense = difference_violation_dense(a);
        auto sparse = difference_violation_sparse(a);
        if (dense.has_value() != sparse.has_value())
            throw Error("internal error: dense and sparse Sidon checks disagree");
        return dense;
    }

    auto is_sidon_differences(const IntegerSet & a) -> bool
    {
        return ! find_difference_violation(a).has_value();
    }

    auto find_sum_violation(const IntegerSet & a) -> optional<SidonViolation>
    {
        auto e = a.elements();
        std::unordered_map<int64_t, pair<int64_t, int64_t>> owner;
        for (std::size_t i = 0; i < e.size(); ++i)
            for (std::size_t j = i; j < e.size(); ++j) {
                auto [it, inserted] = owner.emplace(e[i] + e[j], pair{e[i], e[j]});
                if (! inserted)
                    return SidonViolation{ViolationKind::sum, it->second, {e[i], e[j]}};
            }
        return std::nullopt;
    }

    auto is_sidon_sums(const IntegerSet & a) -> bool
    {
        return ! find_sum_violation(a).has_value();
    }

    auto find_modular_violation(const IntegerSet & a, Modulus v) -> optional<SidonViolation>
    {
        try {
            (void)reduce_int_set(a, v);
        }
        catch (const InjectivityError & e) {
            return SidonViolation{ViolationKind::injectivity, e.colliding_pair(), e.colliding_pair()};
        }

        auto e = a.elements();
        vector<pair<int64_t, int64_t>> owner(v.value(), {0, 0});
        vector<char> used(v.value(), 0);
        for (std::size_t j = 0; j < e.size(); ++j)
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (i == j)
                    continue;
                auto d = normalize(e[j] - e[i], v);
                if (used[d])
                    return SidonViolation{ViolationKind::difference, owner[d], {e[j], e[i]}};
                used[d] = 1;
                owner[d] = {e[j], e[i]};
            }
        return std::nullopt;
    }

    auto is_sidon_mod(const IntegerSet & a, Modulus v) -> bool
    {
        return ! find_modular_violation(a, v).has_value();
    }

    auto mian_chowla(std::size_t n) -> IntegerSet
    {
        if (n == 0)
            throw Error("mian_chowla needs n >= 1");

        vector<int64_t> terms{1};
        vector<char> used_difference(2, 0);
        for (int64_t candidate = 2; terms.size() < n; ++candidate) {
            if (used_difference.size() <= static_cast<std::size_t>(candidate))
                used_difference.resize(2 * candidate, 0);

            bool ok = true;
            vector<char> fresh(candidate, 0);
            for (auto t : terms) {
                auto d = candidate - t;
                if (used_difference[d] || fresh[d]) {
                    ok = false;
                    break;
                }
                fresh[d] = 1;
            }
            if (! ok)
                continue;
            for (auto t : terms)
                used_difference[candidate - t] = 1;
            terms.push_back(candidate);
        }
        return IntegerSet{std::move(terms)};
    }

    auto density_profile(const IntegerSet & a, int64_t n) -> double
    {
        if (n < 1)
            throw Error("density_profile needs n >= 1");
        int64_t count = 0;
        for (auto x : a)
            if (x >= 1 && x <= n)
                ++count;
        return static_cast<double>(count) / std::sqrt(static_cast<double>(n));
    }

    auto extend_to_perfect_ruler(const IntegerSet & a, int64_t d_max) -> RulerExtension
    {
        if (d_max < 1)
            throw Error("extend_to_perfect_ruler needs d_max >= 1");
        if (auto violation = find_difference_violation(a))
            throw NotSidonError("base set is not a Sidon set");

        vector<int64_t> elements(a.begin(), a.end());
        std::unordered_set<int64_t> members(elements.begin(), elements.end());
        std::unordered_set<int64_t> differences;
        for (auto x : elements)
            for (auto y : elements)
                if (x != y)
                    differences.insert(x - y);

        // Adding x and x + d keeps the set Sidon iff every new difference is
        // fresh and the new differences are pairwise distinct.
        auto try_add = [&](int64_t x, int64_t d) -> bool {
            if (members.contains(x) || members.contains(x + d))
                return false;
            std::unordered_set<int64_t> fresh;
            auto add = [&](int64_t diff) {
                if (differences.contains(diff) || ! fresh.insert(diff).second)
                    return false;
                return true;
            };
            if (! add(d) || ! add(-d))
                return false;
            for (auto y : elements)
                for (auto z : {x, x + d})
                    if (! add(z - y) || ! add(y - z))
                        return false;
            differences.insert(fresh.begin(), fresh.end());
            members.insert(x);
            members.insert(x + d);
            elements.push_back(x);
            elements.push_back(x + d);
            return true;
        };

        for (int64_t d = 1; d <= d_max; ++d) {
            if (differences.contains(d))
                continue;
            for (int64_t x = 0;; ++x)
                if (try_add(x, d))
                    break;
        }

        return RulerExtension{a, IntegerSet{std::move(elements)}, d_max};
    }
}
