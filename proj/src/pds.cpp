#include <sidonkit/errors.hpp>
#include <sidonkit/pds.hpp>

#include <array>
#include <cmath>
#include <limits>
#include <random>
#include <string>

using std::int64_t;
using std::optional;
using std::to_string;
using std::uint32_t;
using std::uint64_t;
using std::vector;

namespace sidonkit
{
    namespace
    {
        auto require_plane_order(uint64_t q) -> std::pair<uint32_t, uint32_t>
        {
            auto pk = is_prime_power(q);
            if (! pk)
                throw NotPrimePowerError(to_string(q) + " is not a prime power");
            return *pk;
        }

        /// GF(q)[X] / (X^3 + c2 X^2 + c1 X + c0) with elements as index triples.
        class CubicRing
        {
        public:
            using Element = std::array<uint32_t, 3>;

            CubicRing(const FieldTables & f, std::array<uint32_t, 3> monic_low) :
                _f(f),
                _neg_low{f.neg(monic_low[0]), f.neg(monic_low[1]), f.neg(monic_low[2])}
            {
            }

            auto mul(const Element & a, const Element & b) const -> Element
            {
                std::array<uint32_t, 5> prod{};
                for (int i = 0; i < 3; ++i)
                    for (int j = 0; j < 3; ++j)
                        prod[i + j] = _f.add(prod[i + j], _f.mul(a[i], b[j]));
                // X^3 = -(c2 X^2 + c1 X + c0)
                for (int d = 4; d >= 3; --d) {
                    auto top = prod[d];
                    prod[d] = 0;
                    for (int i = 0; i < 3; ++i)
                        prod[d - 3 + i] = _f.add(prod[d - 3 + i], _f.mul(top, _neg_low[i]));
                }
                return {prod[0], prod[1], prod[2]};
            }

            auto pow(Element base, uint64_t e) const -> Element
            {
                Element result{1, 0, 0};
                while (e) {
                    if (e & 1)
                        result = mul(result, base);
                    base = mul(base, base);
                    e >>= 1;
                }
                return result;
            }

        private:
            const FieldTables & _f;
            Element _neg_low;
        };

        auto coefficient_indices(const FieldSpec & field, const RecurrenceCoefficients & a) -> std::array<uint32_t, 3>
        {
            for (const auto * c : {&a.a1, &a.a2, &a.a3})
                if (! (c->field == field))
                    throw FieldMismatchError("recurrence coefficients are not in the requested field");
            if (a.a3.is_zero())
                throw DegenerateCoefficientsError("a3 = 0 degenerates the recurrence to order two or less");
            return {static_cast<uint32_t>(element_index(a.a1)), static_cast<uint32_t>(element_index(a.a2)),
                static_cast<uint32_t>(element_index(a.a3))};
        }

        auto zero_positions(const FieldTables & f, std::array<uint32_t, 3> a, std::size_t horizon) -> vector<int64_t>
        {
            vector<int64_t> zeros;
            std::array<uint32_t, 3> window{0, 0, 1}; // x_{k-3}, x_{k-2}, x_{k-1}
            for (std::size_t k = 0; k < horizon; ++k) {
                uint32_t x;
                if (k < 3)
                    x = window[k];
                else {
                    x = f.add(f.add(f.mul(a[0], window[2]), f.mul(a[1], window[1])), f.mul(a[2], window[0]));
                    window = {window[1], window[2], x};
                }
                if (x == 0)
                    zeros.push_back(static_cast<int64_t>(k));
            }
            return zeros;
        }

        auto recurrence_pds_impl(const FieldTables & f, uint64_t q, std::array<uint32_t, 3> a) -> optional<PerfectDifferenceSet>
        {
            auto v = plane_modulus(static_cast<int64_t>(q));
            auto zeros = zero_positions(f, a, 2 * static_cast<std::size_t>(v.value()));

            vector<int64_t> first, second;
            for (auto k : zeros)
                (k < v.value() ? first : second).push_back(k);
            if (first.size() != second.size() || first.size() != q + 1)
                return std::nullopt;
            for (std::size_t i = 0; i < first.size(); ++i)
                if (second[i] != first[i] + v.value())
                    return std::nullopt;

            ResidueSet residues{v, first};
            if (! check_pds(residues).is_pds)
                return std::nullopt;
            return PerfectDifferenceSet{std::move(residues)};
        }

        void check_cubic_cap(uint64_t q, const PdsConfig & config)
        {
            if (q > 0 && q * q > config.max_cubic_field_size / q)
                throw Error("GF(" + to_string(q) + "^3) exceeds the configured field size cap");
        }
    }

    auto order_of_modulus(Modulus v) -> optional<int64_t>
    {
        auto guess = static_cast<int64_t>(std::sqrt(static_cast<double>(v.value())));
        for (auto q = std::max<int64_t>(2, guess - 2); q <= guess + 2; ++q)
            if (q * q + q + 1 == v.value())
                return q;
        return std::nullopt;
    }

    auto plane_modulus(int64_t q) -> Modulus
    {
        return Modulus{q * q + q + 1};
    }

    auto check_pds(const ResidueSet & b, PdsCheckMode mode) -> PdsReport
    {
        if (b.v() < 2)
            throw InvalidModulusError("perfect difference sets need v >= 2");

        PdsReport report;
        report.q = order_of_modulus(b.modulus());
        if (mode == PdsCheckMode::strict && ! report.q)
            throw InvalidModulusError(to_string(b.v()) + " is not of the form q^2 + q + 1");

        auto table = difference_table(b);
        for (int64_t d = 1; d < b.v(); ++d) {
            auto c = table.count_per_residue[d];
            if (c == 0)
                report.missing.push_back(d);
            else if (c >= 2)
                report.repeated.push_back(d);
        }
        report.is_pds = report.missing.empty() && report.repeated.empty();
        if (report.q && b.size() != static_cast<std::size_t>(*report.q + 1))
            report.is_pds = false;
        return report;
    }

    auto check_pds(const IntegerSet & b, Modulus v, PdsCheckMode mode) -> PdsReport
    {
        try {
            return check_pds(reduce_int_set(b, v), mode);
        }
        catch (const InjectivityError & e) {
            if (v.value() < 2)
                throw InvalidModulusError("perfect difference sets need v >= 2");
            PdsReport report;
            report.q = order_of_modulus(v);
            if (mode == PdsCheckMode::strict && ! report.q)
                throw InvalidModulusError(to_string(v.value()) + " is not of the form q^2 + q + 1");
            report.injectivity_failure = e.colliding_pair();
            return report;
        }
    }

    PerfectDifferenceSet::PerfectDifferenceSet(ResidueSet residues) :
        _residues(std::move(residues)),
        _q(0)
    {
        auto report = check_pds(_residues);
        if (! report.is_pds)
            throw Error("residue set is not a perfect difference set modulo " + to_string(_residues.v()));
        _q = *report.q;
    }

    auto translate_pds(const PerfectDifferenceSet & b, int64_t c) -> PerfectDifferenceSet
    {
        return PerfectDifferenceSet{b.residues().translated(c)};
    }

    auto recurrence_zero_positions(const FieldSpec & field, const RecurrenceCoefficients & a, std::size_t horizon)
        -> vector<int64_t>
    {
        if (horizon < 1)
            throw Error("horizon must be at least 1");
        auto indices = coefficient_indices(field, a);
        return zero_positions(FieldTables{field}, indices, horizon);
    }

    auto recurrence_pds(uint64_t q, const RecurrenceCoefficients & a) -> optional<PerfectDifferenceSet>
    {
        auto [p, k] = require_plane_order(q);
        auto field = make_field(p, k);
        auto indices = coefficient_indices(field, a);
        return recurrence_pds_impl(FieldTables{field}, q, indices);
    }

    auto singer_pds(uint64_t q, const PdsConfig & config) -> Construction
    {
        auto [p, k] = require_plane_order(q);
        check_cubic_cap(q, config);
        auto field = make_field(p, k);
        FieldTables tables{field};

        auto group_order = q * q * q - 1;
        auto factors = prime_factors(group_order);
        auto qq = static_cast<uint32_t>(q);

        // Monic cubics X^3 + c2 X^2 + c1 X + c0 by index c0 + c1 q + c2 q^2; the
        // first one in which X has order q^3 - 1 is the minimal polynomial of a
        // primitive element of GF(q^3).
        for (uint64_t index = 0; index < q * q * q; ++index) {
            std::array<uint32_t, 3> low{static_cast<uint32_t>(index % qq), static_cast<uint32_t>(index / qq % qq),
                static_cast<uint32_t>(index / (uint64_t{qq} * qq))};
            if (low[0] == 0)
                continue;
            CubicRing ring{tables, low};
            CubicRing::Element x{0, 1, 0};
            if (ring.pow(x, group_order) != CubicRing::Element{1, 0, 0})
                continue;
            bool primitive = true;
            for (auto r : factors)
                if (ring.pow(x, group_order / r) == CubicRing::Element{1, 0, 0}) {
                    primitive = false;
                    break;
                }
            if (! primitive)
                continue;

            // X^3 = a1 X^2 + a2 X + a3
            std::array<uint32_t, 3> a{tables.neg(low[2]), tables.neg(low[1]), tables.neg(low[0])};
            auto built = recurrence_pds_impl(tables, q, a);
            if (! built)
                throw Error("internal error: primitive cubic did not yield a perfect difference set");
            return Construction{*built,
                RecurrenceCoefficients{element_from_index(field, a[0]), element_from_index(field, a[1]),
                    element_from_index(field, a[2])},
                1};
        }
        throw Error("internal error: no primitive cubic over GF(" + to_string(q) + ")");
    }

    auto random_recurrence_pds(uint64_t q, uint64_t seed, std::size_t max_tries, const PdsConfig & config) -> Construction
    {
        auto [p, k] = require_plane_order(q);
        check_cubic_cap(q, config);
        auto field = make_field(p, k);
        FieldTables tables{field};

        std::mt19937_64 rng{seed};
        std::uniform_int_distribution<uint32_t> pick(0, static_cast<uint32_t>(q - 1));
        for (std::size_t tries = 1; tries <= max_tries; ++tries) {
            std::array<uint32_t, 3> a{};
            for (auto & c : a)
                c = pick(rng);
            // a3 = 0 is a wasted draw, not an error
            if (a[2] == 0)
                continue;
            if (auto built = recurrence_pds_impl(tables, q, a))
                return Construction{*built,
                    RecurrenceCoefficients{element_from_index(field, a[0]), element_from_index(field, a[1]),
                        element_from_index(field, a[2])},
                    tries};
        }
        throw BudgetExceededError("no perfect difference set within " + to_string(max_tries) + " random tries", max_tries);
    }

    auto binomial(uint64_t n, uint64_t k) -> uint64_t
    {
        if (k > n)
            return 0;
        k = std::min(k, n - k);
        unsigned __int128 r = 1;
        for (uint64_t i = 1; i <= k; ++i) {
            r = r * (n - k + i) / i;
            if (r > std::numeric_limits<uint64_t>::max())
                return std::numeric_limits<uint64_t>::max();
        }
        return static_cast<uint64_t>(r);
    }

    auto enumerate_pds(Modulus v, const PdsConfig & config) -> vector<ResidueSet>
    {
        auto q = order_of_modulus(v);
        if (! q)
            throw InvalidModulusError(to_string(v.value()) + " is not of the form q^2 + q + 1");
        auto size = static_cast<std::size_t>(*q + 1);
        auto candidates = binomial(static_cast<uint64_t>(v.value()), size);
        if (candidates > config.enumeration_budget)
            throw BudgetExceededError("C(" + to_string(v.value()) + ", " + to_string(size) + ") subsets exceed the enumeration budget",
                candidates);

        auto n = v.value();
        vector<ResidueSet> found;
        vector<int64_t> chosen;
        vector<char> used(n, 0);

        // Elements are chosen in increasing order; a partial set survives only
        // while all its differences are distinct.
        auto extend = [&](auto && self, int64_t from) -> void {
            if (chosen.size() == size) {
                found.emplace_back(v, chosen);
                return;
            }
            for (auto x = from; x < n; ++x) {
                vector<int64_t> added;
                bool ok = true;
                for (auto b : chosen) {
                    auto d1 = normalize(x - b, v), d2 = normalize(b - x, v);
                    if (used[d1] || used[d2] || d1 == d2) {
                        ok = false;
                        break;
                    }
                    used[d1] = used[d2] = 1;
                    added.push_back(d1);
                    added.push_back(d2);
                }
                if (ok) {
                    chosen.push_back(x);
                    self(self, x + 1);
                    chosen.pop_back();
                }
                for (auto d : added)
                    used[d] = 0;
            }
        };
        extend(extend, 0);
        return found;
    }
}
