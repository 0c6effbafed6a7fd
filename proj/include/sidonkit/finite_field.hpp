#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace sidonkit
{
    /// GF(p^k) presented as GF(p)[x] / (modulus_poly). Polynomials are stored
    /// constant term first; modulus_poly is monic of degree k. Prime fields use
    /// modulus_poly = x so every field goes through the same code.
    struct FieldSpec
    {
        std::uint32_t p = 2;
        std::uint32_t k = 1;
        std::vector<std::uint32_t> modulus_poly;

        auto order() const -> std::uint64_t;
        auto operator==(const FieldSpec &) const -> bool = default;
    };

    /// An element as k coefficients over GF(p), constant term first.
    struct FieldElement
    {
        FieldSpec field;
        std::vector<std::uint32_t> coeffs;

        auto is_zero() const -> bool;
        auto operator==(const FieldElement &) const -> bool = default;
    };

    auto is_prime(std::uint64_t n) -> bool;

    /// Distinct prime factors, increasing.
    auto prime_factors(std::uint64_t n) -> std::vector<std::uint64_t>;

    /// (p, k) with q = p^k, if q is a prime power.
    auto is_prime_power(std::uint64_t q) -> std::optional<std::pair<std::uint32_t, std::uint32_t>>;

    /// Whether a polynomial over GF(p) (constant term first) is irreducible.
    auto is_irreducible(const std::vector<std::uint32_t> & poly, std::uint32_t p) -> bool;

    /// Builds GF(p^k) from the first monic irreducible polynomial of degree k.
    /// Polynomials (and elements) are ordered by their index: the coefficient
    /// vector read as a base-p number with the constant term least significant.
    auto make_field(std::uint32_t p, std::uint32_t k) -> FieldSpec;

    /// Index of an element in [0, p^k), constant term least significant.
    auto element_index(const FieldElement & a) -> std::uint64_t;
    auto element_from_index(const FieldSpec & field, std::uint64_t index) -> FieldElement;

    auto field_zero(const FieldSpec & field) -> FieldElement;
    auto field_one(const FieldSpec & field) -> FieldElement;
    /// The class of x in GF(p)[x] / (modulus_poly); zero for prime fields.
    auto field_generator(const FieldSpec & field) -> FieldElement;

    auto field_add(const FieldElement & a, const FieldElement & b) -> FieldElement;
    auto field_sub(const FieldElement & a, const FieldElement & b) -> FieldElement;
    auto field_neg(const FieldElement & a) -> FieldElement;
    auto field_mul(const FieldElement & a, const FieldElement & b) -> FieldElement;
    auto field_pow(const FieldElement & a, std::uint64_t exponent) -> FieldElement;

    /// Least e >= 1 with a^e = 1. Throws ZeroElementError for a = 0.
    auto multiplicative_order(const FieldElement & a) -> std::uint64_t;

    /// The smallest-index element of multiplicative order |F| - 1.
    auto primitive_element(const FieldSpec & field) -> FieldElement;

    /// Addition and multiplication tables over element indices, for inner loops
    /// that would otherwise allocate per operation.
    class FieldTables
    {
    public:
        explicit FieldTables(const FieldSpec & field);

        auto size() const noexcept -> std::uint32_t { return _q; }
        auto add(std::uint32_t a, std::uint32_t b) const noexcept -> std::uint32_t { return _add[a * _q + b]; }
        auto mul(std::uint32_t a, std::uint32_t b) const noexcept -> std::uint32_t { return _mul[a * _q + b]; }
        auto neg(std::uint32_t a) const noexcept -> std::uint32_t { return _neg[a]; }

    private:
        std::uint32_t _q;
        std::vector<std::uint32_t> _add, _mul, _neg;
    };
}
