#pragma once

#include <sidonkit/modular.hpp>
#include <sidonkit/search.hpp>

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace sidonkit
{
    /// Forced absolute points h1, h2, h3 on the line B + t: h_i - t is in A.
    struct CollinearWitness
    {
        std::int64_t t = 0;
        std::array<std::int64_t, 3> triple{};

        auto operator==(const CollinearWitness &) const -> bool = default;
    };

    /// Integer identity x - a1 = a2 - a3 with (x, a1) != (a2, a3) and x != a1,
    /// where x is the witness value (w or u).
    using Collision = std::array<std::int64_t, 3>;

    /// Even order: the forced absolute h4 must lie on the axis B + t, so
    /// w = h4 - t would be in B, which repeats a difference.
    struct OffLineWitness
    {
        std::int64_t h4 = 0;
        std::int64_t w = 0;
        Collision collision{};

        auto operator==(const OffLineWitness &) const -> bool = default;
    };

    /// Even order: every point a + t of the axis is absolute, so
    /// u = 2(a + t) would be in B, which repeats a difference.
    struct SaturationWitness
    {
        std::int64_t a = 0;
        std::int64_t u = 0;
        Collision collision{};

        auto operator==(const SaturationWitness &) const -> bool = default;
    };

    using EvenCaseWitness = std::variant<OffLineWitness, SaturationWitness>;

    struct SmallModulusResult
    {
        std::int64_t v = 0;
        SearchStatus status = SearchStatus::exhausted;
        std::optional<PrecheckReason> precheck_reason;
        std::uint64_t nodes_explored = 0;

        auto operator==(const SmallModulusResult &) const -> bool = default;
    };

    /// Witness that a Sidon set A lies in no perfect difference set. All
    /// integer fields refer to the translate A + shift; extension is
    /// translation invariant, so this is a certificate for A itself.
    ///
    /// For v >= aliasing_bound every integer here is distinct mod v. Odd
    /// orders then see three absolute points on one line, which is forbidden.
    /// Even orders put every absolute point on the line B + t and every point of
    /// that line among the absolute points, which the even-case witness refutes.
    /// Smaller v are settled by exhaustive search.
    struct NonExtensionCertificate
    {
        static constexpr int current_version = 1;

        int version = current_version;
        std::int64_t shift = 0;
        std::vector<std::int64_t> forced_absolute;
        CollinearWitness collinear_witness;
        EvenCaseWitness even_case;
        std::int64_t aliasing_bound = 0;
        std::vector<SmallModulusResult> small_moduli_exhausted;

        auto operator==(const NonExtensionCertificate &) const -> bool = default;
    };

    struct CertifyOptions
    {
        SearchOptions search;
        /// Shifts tried when A itself yields no obstruction: [-window, window].
        /// Negative means derive it from A.
        std::int64_t shift_window = -1;
    };

    /// nullopt means inconclusive, never "extendable". Throws NotSidonError,
    /// and BudgetExceededError if a small-modulus search runs out of nodes.
    auto certify_non_extension(const IntegerSet & a, const CertifyOptions & options = {})
        -> std::optional<NonExtensionCertificate>;

    struct CertificateCheck
    {
        bool valid = false;
        std::vector<std::string> reasons;
    };

    /// Re-validates with integer arithmetic and re-runs every small-modulus search.
    auto check_certificate(const NonExtensionCertificate & certificate, const IntegerSet & a,
        const SearchOptions & options = {}) -> CertificateCheck;

    /// 2M + 1 where M is the largest absolute value of any integer in the
    /// certificate or in A + shift.
    auto aliasing_bound_for(const NonExtensionCertificate & certificate, const IntegerSet & a) -> std::int64_t;
}
