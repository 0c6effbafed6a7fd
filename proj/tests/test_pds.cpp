#include <doctest.h>

#include "oracles.hpp"

#include <sidonkit/errors.hpp>
#include <sidonkit/pds.hpp>
#include <sidonkit/sidon.hpp>

#include <algorithm>
#include <set>

using namespace sidonkit;
using std::int64_t;
using std::uint32_t;
using std::uint64_t;
using std::vector;

namespace
{
    auto as_vector(const ResidueSet & b) -> vector<int64_t>
    {
        return {b.begin(), b.end()};
    }

    auto coefficients(const FieldSpec & f, uint32_t a1, uint32_t a2, uint32_t a3) -> RecurrenceCoefficients
    {
        return {element_from_index(f, a1), element_from_index(f, a2), element_from_index(f, a3)};
    }

    auto as_integer_set(const ResidueSet & b) -> IntegerSet
    {
        return IntegerSet{as_vector(b)};
    }
}

TEST_CASE("order of modulus")
{
    CHECK(order_of_modulus(Modulus{7}) == 2);
    CHECK(order_of_modulus(Modulus{21}) == 4);
    CHECK(order_of_modulus(Modulus{73}) == 8);
    CHECK(order_of_modulus(Modulus{13}) == 3);
    CHECK_FALSE(order_of_modulus(Modulus{12}));
    for (int64_t v = 1; v < 7; ++v)
        CHECK_FALSE(order_of_modulus(Modulus{v}));
    for (int64_t q = 2; q < 2000; ++q)
        CHECK(order_of_modulus(Modulus{q * q + q + 1}) == q);
}

TEST_CASE("check_pds")
{
    CHECK(check_pds(IntegerSet{1, 2, 4}, Modulus{7}).is_pds);
    CHECK(check_pds(IntegerSet{1, 2, 5, 15, 17}, Modulus{21}).is_pds);
    CHECK(check_pds(IntegerSet{1, 2, 4, 8, 16, 32, 64, 55, 37}, Modulus{73}).is_pds);
    CHECK(check_pds(IntegerSet{1, 2, 4, 8, 16, 32, 64, 128, 256}, Modulus{73}).is_pds);

    auto bad = check_pds(IntegerSet{1, 2, 3}, Modulus{7});
    CHECK_FALSE(bad.is_pds);
    CHECK(bad.repeated == vector<int64_t>{1, 6});
    CHECK(bad.missing == vector<int64_t>{3, 4});

    auto collide = check_pds(IntegerSet{1, 2, 4, 8}, Modulus{7});
    CHECK_FALSE(collide.is_pds);
    CHECK(collide.injectivity_failure == std::pair<int64_t, int64_t>{1, 8});

    CHECK_THROWS_AS(check_pds(IntegerSet{1, 2}, Modulus{12}), InvalidModulusError);
    auto lenient = check_pds(IntegerSet{0, 1, 3}, Modulus{12}, PdsCheckMode::lenient);
    CHECK_FALSE(lenient.is_pds);
    CHECK_FALSE(lenient.q);

    SUBCASE("agrees with the brute-force predicate on every 3-subset mod 7 and 4-subset mod 13")
    {
        for (auto [v, k] : {std::pair<int64_t, std::size_t>{7, 3}, {13, 4}})
            oracle::for_each_subset(v, k, [&](const vector<int64_t> & s) {
                CHECK(check_pds(ResidueSet{Modulus{v}, s}).is_pds == oracle::is_pds(s, v));
                return false;
            });
    }
}

TEST_CASE("translation")
{
    PerfectDifferenceSet b{ResidueSet{Modulus{7}, {1, 2, 4}}};
    auto shifted = translate_pds(b, 1);
    CHECK(as_vector(shifted.residues()) == vector<int64_t>{2, 3, 5});
    CHECK(check_pds(shifted.residues()).is_pds);
    CHECK(translate_pds(b, 0) == b);
    CHECK(translate_pds(b, -7) == b);

    auto hall = IntegerSet{-8, -6, 0, 1, 4}.translated(9);
    CHECK(hall == IntegerSet{1, 3, 9, 10, 13});

    CHECK_THROWS_AS(PerfectDifferenceSet{ResidueSet(Modulus{7}, {1, 2, 3})}, Error);
}

TEST_CASE("recurrence zero positions")
{
    auto gf2 = make_field(2, 1);
    CHECK(recurrence_zero_positions(gf2, coefficients(gf2, 0, 1, 1), 14) == vector<int64_t>{0, 1, 3, 7, 8, 10});
    CHECK(recurrence_zero_positions(gf2, coefficients(gf2, 1, 1, 1), 3) == vector<int64_t>{0, 1});
    CHECK_THROWS_AS(recurrence_zero_positions(gf2, coefficients(gf2, 1, 1, 0), 10), DegenerateCoefficientsError);
    CHECK_THROWS_AS(recurrence_zero_positions(make_field(3, 1), coefficients(gf2, 1, 1, 1), 10), FieldMismatchError);

    SUBCASE("prime fields agree with direct simulation")
    {
        for (uint32_t p : {2u, 3u, 5u}) {
            auto f = make_field(p, 1);
            for (uint32_t a1 = 0; a1 < p; ++a1)
                for (uint32_t a2 = 0; a2 < p; ++a2)
                    for (uint32_t a3 = 1; a3 < p; ++a3)
                        CHECK(recurrence_zero_positions(f, coefficients(f, a1, a2, a3), 80) ==
                            oracle::recurrence_zeros(p, a1, a2, a3, 80));
        }
    }
}

TEST_CASE("recurrence construction")
{
    auto gf2 = make_field(2, 1);
    auto primitive = recurrence_pds(2, coefficients(gf2, 0, 1, 1));
    REQUIRE(primitive);
    CHECK(as_vector(primitive->residues()) == vector<int64_t>{0, 1, 3});

    auto other = recurrence_pds(2, coefficients(gf2, 1, 0, 1));
    REQUIRE(other);
    CHECK(check_pds(other->residues()).is_pds);

    CHECK_FALSE(recurrence_pds(2, coefficients(gf2, 1, 1, 1)));
    CHECK_THROWS_AS(recurrence_pds(2, coefficients(gf2, 1, 1, 0)), DegenerateCoefficientsError);
    CHECK_THROWS_AS(recurrence_pds(6, coefficients(gf2, 1, 1, 1)), NotPrimePowerError);

    SUBCASE("matches simulation plus brute-force PDS check over GF(3) and GF(5)")
    {
        for (uint32_t p : {3u, 5u}) {
            auto f = make_field(p, 1);
            int64_t v = p * p + p + 1;
            for (uint32_t a1 = 0; a1 < p; ++a1)
                for (uint32_t a2 = 0; a2 < p; ++a2)
                    for (uint32_t a3 = 1; a3 < p; ++a3) {
                        auto zeros = oracle::recurrence_zeros(p, a1, a2, a3, 2 * static_cast<std::size_t>(v));
                        vector<int64_t> first, second;
                        for (auto k : zeros)
                            (k < v ? first : second).push_back(k);
                        bool periodic = first.size() == second.size();
                        for (std::size_t i = 0; periodic && i < first.size(); ++i)
                            periodic = second[i] == first[i] + v;
                        bool expected = periodic && first.size() == p + 1 && oracle::is_pds(first, v);

                        auto built = recurrence_pds(p, coefficients(f, a1, a2, a3));
                        CHECK(built.has_value() == expected);
                        if (built)
                            CHECK(as_vector(built->residues()) == first);
                    }
        }
    }
}

TEST_CASE("Singer construction")
{
    for (uint64_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u}) {
        CAPTURE(q);
        auto built = singer_pds(q);
        auto & b = built.pds;
        auto v = static_cast<int64_t>(q * q + q + 1);
        CHECK(b.v() == v);
        CHECK(b.size() == q + 1);
        CHECK(check_pds(b.residues()).is_pds);
        CHECK(oracle::is_pds(as_vector(b.residues()), v));
        CHECK(is_sidon_mod(as_integer_set(b.residues()), b.modulus()));

        // zero positions repeat with period v
        auto [p, k] = *is_prime_power(q);
        auto field = make_field(p, k);
        auto zeros = recurrence_zero_positions(field, built.coefficients, 2 * static_cast<std::size_t>(v));
        vector<int64_t> first, second;
        for (auto z : zeros)
            (z < v ? first : second).push_back(z - (z < v ? 0 : v));
        CHECK(first == second);
    }

    CHECK(singer_pds(5).pds == singer_pds(5).pds);
    CHECK_THROWS_AS(singer_pds(6), NotPrimePowerError);
    CHECK_THROWS_AS(singer_pds(10), NotPrimePowerError);
    CHECK_THROWS_AS(singer_pds(127), Error);
}

TEST_CASE("random recurrence construction")
{
    SUBCASE("q = 2: the eight triples, two of which succeed")
    {
        auto f = make_field(2, 1);
        int successes = 0;
        for (uint32_t t = 0; t < 8; ++t) {
            if ((t & 4) == 0)
                continue;
            if (recurrence_pds(2, coefficients(f, t & 1, (t >> 1) & 1, 1)))
                ++successes;
        }
        CHECK(successes == 2);
        for (uint64_t seed = 0; seed < 64; ++seed)
            CHECK(check_pds(random_recurrence_pds(2, seed, 100).pds.residues()).is_pds);
    }

    SUBCASE("reproducible for a fixed seed")
    {
        auto first = random_recurrence_pds(3, 12345, 200);
        auto second = random_recurrence_pds(3, 12345, 200);
        CHECK(first.pds == second.pds);
        CHECK(first.tries == second.tries);
        CHECK(first.pds.size() == 4);
    }

    CHECK_THROWS_AS(random_recurrence_pds(6, 1, 10), NotPrimePowerError);
    CHECK_THROWS_AS(random_recurrence_pds(9, 1, 0), BudgetExceededError);
}

TEST_CASE("enumeration")
{
    auto v7 = enumerate_pds(Modulus{7});
    CHECK(v7.size() == 14);
    CHECK(std::ranges::find(v7, ResidueSet{Modulus{7}, {0, 1, 3}}) != v7.end());
    CHECK(std::ranges::find(v7, ResidueSet{Modulus{7}, {1, 2, 4}}) != v7.end());
    CHECK(std::ranges::is_sorted(v7));

    auto v13 = enumerate_pds(Modulus{13});
    CHECK(v13.size() == 52);
    CHECK(enumerate_pds(Modulus{21}).size() == 42);

    CHECK_THROWS_AS(enumerate_pds(Modulus{12}), InvalidModulusError);
    CHECK_THROWS_AS(enumerate_pds(Modulus{21}, PdsConfig{1u << 20, 1000}), BudgetExceededError);

    SUBCASE("counts agree with exhaustive subset enumeration")
    {
        CHECK(oracle::count_pds(7, 3) == 14);
        CHECK(oracle::count_pds(13, 4) == 52);
    }

    SUBCASE("closed under translation, all PDS, all Sidon mod v, size q + 1")
    {
        for (auto * list : {&v7, &v13}) {
            std::set<vector<int64_t>> members;
            for (auto & b : *list)
                members.insert(as_vector(b));
            for (auto & b : *list) {
                CHECK(check_pds(b).is_pds);
                CHECK(is_sidon_mod(as_integer_set(b), b.modulus()));
                CHECK(b.size() == static_cast<std::size_t>(*order_of_modulus(b.modulus()) + 1));
                for (int64_t c = 0; c < b.v(); ++c)
                    CHECK(members.contains(as_vector(b.translated(c))));
            }
        }
    }
}

TEST_CASE("binomial")
{
    CHECK(binomial(7, 3) == 35);
    CHECK(binomial(13, 4) == 715);
    CHECK(binomial(5, 7) == 0);
}
