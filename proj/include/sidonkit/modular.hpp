#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace sidonkit
{
    /// A positive modulus v. Construction rejects v < 1.
    class Modulus
    {
    public:
        explicit Modulus(std::int64_t v);

        auto value() const noexcept -> std::int64_t { return _v; }
        auto operator<=>(const Modulus &) const = default;

    private:
        std::int64_t _v;
    };

    /// Canonical representative of x in [0, v).
    auto normalize(std::int64_t x, Modulus v) noexcept -> std::int64_t;

    /// A finite set of integers, kept sorted and duplicate free.
    class IntegerSet
    {
    public:
        IntegerSet() = default;
        IntegerSet(std::initializer_list<std::int64_t> elements);
        explicit IntegerSet(std::vector<std::int64_t> elements);

        auto elements() const noexcept -> std::span<const std::int64_t> { return _elements; }
        auto size() const noexcept -> std::size_t { return _elements.size(); }
        auto empty() const noexcept -> bool { return _elements.empty(); }
        auto contains(std::int64_t x) const -> bool;
        auto translated(std::int64_t c) const -> IntegerSet;

        auto begin() const noexcept { return _elements.begin(); }
        auto end() const noexcept { return _elements.end(); }

        auto operator==(const IntegerSet &) const -> bool = default;

    private:
        std::vector<std::int64_t> _elements;
    };

    /// Residues modulo v, sorted and distinct, each in [0, v).
    class ResidueSet
    {
    public:
        /// Normalizes and sorts; duplicates after reduction raise InjectivityError.
        ResidueSet(Modulus modulus, std::vector<std::int64_t> elements);

        auto modulus() const noexcept -> Modulus { return _modulus; }
        auto v() const noexcept -> std::int64_t { return _modulus.value(); }
        auto elements() const noexcept -> std::span<const std::int64_t> { return _elements; }
        auto size() const noexcept -> std::size_t { return _elements.size(); }
        auto contains(std::int64_t residue) const -> bool;
        auto translated(std::int64_t c) const -> ResidueSet;

        auto begin() const noexcept { return _elements.begin(); }
        auto end() const noexcept { return _elements.end(); }

        auto operator==(const ResidueSet &) const -> bool = default;
        auto operator<=>(const ResidueSet & other) const -> std::strong_ordering;

    private:
        Modulus _modulus;
        std::vector<std::int64_t> _elements;
    };

    /// count[d] = number of ordered pairs (b, b') of distinct elements with b - b' = d mod v.
    struct DifferenceTable
    {
        Modulus modulus;
        std::vector<std::int64_t> count_per_residue;

        auto total() const noexcept -> std::int64_t;
    };

    /// Reduces A modulo v, failing with InjectivityError on the first colliding pair.
    auto reduce_int_set(const IntegerSet & a, Modulus v) -> ResidueSet;

    auto difference_table(const ResidueSet & b) -> DifferenceTable;
}
