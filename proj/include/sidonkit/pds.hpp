#pragma once

#include <sidonkit/finite_field.hpp>
#include <sidonkit/modular.hpp>

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace sidonkit
{
    /// q >= 2 with q^2 + q + 1 = v, if any.
    auto order_of_modulus(Modulus v) -> std::optional<std::int64_t>;

    /// q^2 + q + 1.
    auto plane_modulus(std::int64_t q) -> Modulus;

    struct PdsReport
    {
        bool is_pds = false;
        std::optional<std::int64_t> q;
        std::vector<std::int64_t> missing;
        std::vector<std::int64_t> repeated;
        std::optional<std::pair<std::int64_t, std::int64_t>> injectivity_failure;
    };

    enum class PdsCheckMode
    {
        /// v must be q^2 + q + 1, otherwise InvalidModulusError.
        strict,
        /// Any v >= 2; only the difference counts decide.
        lenient
    };

    auto check_pds(const ResidueSet & b, PdsCheckMode mode = PdsCheckMode::strict) -> PdsReport;
    auto check_pds(const IntegerSet & b, Modulus v, PdsCheckMode mode = PdsCheckMode::strict) -> PdsReport;

    /// A residue set known to be a perfect difference set modulo q^2 + q + 1.
    class PerfectDifferenceSet
    {
    public:
        /// Validates with check_pds; throws Error if the set is not perfect.
        explicit PerfectDifferenceSet(ResidueSet residues);

        auto residues() const noexcept -> const ResidueSet & { return _residues; }
        auto q() const noexcept -> std::int64_t { return _q; }
        auto v() const noexcept -> std::int64_t { return _residues.v(); }
        auto modulus() const noexcept -> Modulus { return _residues.modulus(); }
        auto size() const noexcept -> std::size_t { return _residues.size(); }
        auto contains(std::int64_t x) const -> bool { return _residues.contains(x); }

        auto operator==(const PerfectDifferenceSet &) const -> bool = default;

    private:
        ResidueSet _residues;
        std::int64_t _q;
    };

    auto translate_pds(const PerfectDifferenceSet & b, std::int64_t c) -> PerfectDifferenceSet;

    struct RecurrenceCoefficients
    {
        FieldElement a1, a2, a3;
    };

    /// Runs x0 = 0, x1 = 0, x2 = 1, x_k = a1 x_{k-1} + a2 x_{k-2} + a3 x_{k-3}
    /// and returns every k < horizon with x_k = 0.
    auto recurrence_zero_positions(const FieldSpec & field, const RecurrenceCoefficients & a, std::size_t horizon)
        -> std::vector<std::int64_t>;

    /// Zero positions over two periods of v = q^2 + q + 1; the set of zeros in
    /// [0, v) if they repeat with period v and form a perfect difference set.
    auto recurrence_pds(std::uint64_t q, const RecurrenceCoefficients & a) -> std::optional<PerfectDifferenceSet>;

    struct PdsConfig
    {
        /// Refuse constructions whose cubic extension has more elements than this.
        std::uint64_t max_cubic_field_size = std::uint64_t{1} << 20;
        /// Refuse enumerations with more candidate subsets than this.
        std::uint64_t enumeration_budget = 10'000'000'000ULL;
    };

    struct Construction
    {
        PerfectDifferenceSet pds;
        RecurrenceCoefficients coefficients;
        std::size_t tries = 1;
    };

    /// The coefficients come from the first primitive cubic over GF(q), so the
    /// result is reproducible.
    auto singer_pds(std::uint64_t q, const PdsConfig & config = {}) -> Construction;

    /// Draws (a1, a2, a3) from a seeded generator until recurrence_pds succeeds.
    auto random_recurrence_pds(std::uint64_t q, std::uint64_t seed, std::size_t max_tries, const PdsConfig & config = {})
        -> Construction;

    /// Every perfect difference set modulo v, in lexicographic order.
    auto enumerate_pds(Modulus v, const PdsConfig & config = {}) -> std::vector<ResidueSet>;

    auto binomial(std::uint64_t n, std::uint64_t k) -> std::uint64_t;
}
