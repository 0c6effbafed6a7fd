#pragma once

#include <sidonkit/modular.hpp>

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace sidonkit
{
    enum class ViolationKind
    {
        difference,
        sum,
        injectivity
    };

    /// First witness that a set fails to be Sidon. For difference (and modular
    /// difference) violations the pairs are (x, y), (x', y') with x - y = x' - y';
    /// for sum violations they are (x, y), (x', y') with x + y = x' + y'; for
    /// injectivity only the first pair is meaningful.
    struct SidonViolation
    {
        ViolationKind kind;
        std::pair<std::int64_t, std::int64_t> first;
        std::pair<std::int64_t, std::int64_t> second;
    };

    auto is_sidon_differences(const IntegerSet & a) -> bool;
    auto is_sidon_sums(const IntegerSet & a) -> bool;
    auto is_sidon_mod(const IntegerSet & a, Modulus v) -> bool;

    auto find_difference_violation(const IntegerSet & a) -> std::optional<SidonViolation>;
    auto find_sum_violation(const IntegerSet & a) -> std::optional<SidonViolation>;
    auto find_modular_violation(const IntegerSet & a, Modulus v) -> std::optional<SidonViolation>;

    /// First n terms of the greedy Sidon sequence seeded with 1.
    auto mian_chowla(std::size_t n) -> IntegerSet;

    /// |A ∩ [1, n]| / sqrt(n).
    auto density_profile(const IntegerSet & a, std::int64_t n) -> double;

    struct RulerExtension
    {
        IntegerSet base;
        IntegerSet extended;
        std::int64_t realized_up_to;
    };

    /// Greedily extends a Sidon set until every difference in [1, d_max] occurs
    /// exactly once. Missing differences are handled in increasing order; each
    /// one is covered by adding two new elements x, x + d with x >= 0 minimal.
    auto extend_to_perfect_ruler(const IntegerSet & a, std::int64_t d_max) -> RulerExtension;
}
