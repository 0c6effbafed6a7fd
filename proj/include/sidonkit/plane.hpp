#pragma once

#include <sidonkit/modular.hpp>
#include <sidonkit/pds.hpp>

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sidonkit
{
    /// Points are residues 0..v-1; line y is the translate B + y; point x lies
    /// on line y iff x - y is in B. Built from any residue set so that the
    /// axiom verifier can report on defective inputs too.
    class CyclicPlane
    {
    public:
        explicit CyclicPlane(const PerfectDifferenceSet & pds);
        /// No validation; verify_projective_axioms reports the damage.
        static auto unchecked(ResidueSet base) -> CyclicPlane;

        auto base() const noexcept -> const ResidueSet & { return _base; }
        auto v() const noexcept -> std::int64_t { return _base.v(); }
        /// Plane order from v, if v = q^2 + q + 1.
        auto q() const noexcept -> std::optional<std::int64_t> { return _q; }

        auto incident(std::int64_t point, std::int64_t line) const -> bool;
        auto points_on(std::int64_t line) const -> std::vector<std::int64_t>;

    private:
        explicit CyclicPlane(ResidueSet base);

        ResidueSet _base;
        std::optional<std::int64_t> _q;
        std::vector<char> _member;
    };

    auto incident(const CyclicPlane & plane, std::int64_t point, std::int64_t line) -> bool;

    /// The unique line through two distinct points. Throws SamePointError.
    auto line_through(const CyclicPlane & plane, std::int64_t x, std::int64_t x_prime) -> std::int64_t;

    struct AxiomReport
    {
        std::optional<std::int64_t> q;
        /// Point pairs (as their difference) joined by zero or several lines.
        std::vector<std::int64_t> point_pair_failures;
        /// Line pairs (as their offset difference) meeting in zero or several points.
        std::vector<std::int64_t> line_pair_failures;
        /// Four points, no three collinear.
        std::optional<std::array<std::int64_t, 4>> quadrangle;
        /// p1, p2, p3 and l1, l2, l3 in the "three points in general position" form.
        std::optional<std::array<std::int64_t, 6>> general_position;
        std::vector<std::int64_t> lines_with_wrong_size;
        std::vector<std::int64_t> points_with_wrong_degree;

        auto ok() const -> bool;
    };

    struct PlaneLimits
    {
        std::int64_t max_exhaustive_v = 5000;
    };

    auto verify_projective_axioms(const CyclicPlane & plane, const PlaneLimits & limits = {}) -> AxiomReport;

    /// Polarity x <-> B - x: point x maps to line offset -x, line offset y to point -y.
    auto polar_of_point(const CyclicPlane & plane, std::int64_t point) -> std::int64_t;
    auto polar_of_line(const CyclicPlane & plane, std::int64_t line) -> std::int64_t;

    /// Points x with 2x in B.
    auto absolute_points(const CyclicPlane & plane) -> ResidueSet;

    /// Whether line y contains its polar point -y, i.e. -2y is in B.
    auto is_absolute_line(const CyclicPlane & plane, std::int64_t line) -> bool;

    struct BaerCheck
    {
        std::string name;
        bool applicable = true;
        /// Offending line offsets; empty when the check passes.
        std::vector<std::int64_t> violations;

        auto passed() const -> bool { return violations.empty(); }
    };

    struct BaerReport
    {
        std::int64_t q = 0;
        std::vector<std::int64_t> absolute_points;
        std::vector<std::int64_t> absolute_lines;
        /// Set by the even-order check when every absolute point shares one line.
        std::optional<std::int64_t> absolute_axis;
        std::vector<BaerCheck> checks;

        auto violation_count() const -> std::size_t;
        auto find(const std::string & name) const -> const BaerCheck &;
    };

    /// Named checks: absolute_line_one_absolute_point, non_absolute_line_even_non_absolute,
    /// odd_absolute_iff_one, odd_at_most_two, even_odd_count, even_all_collinear.
    auto baer_report(const CyclicPlane & plane, const PlaneLimits & limits = {}) -> BaerReport;

    struct InvolutionReport
    {
        std::int64_t a = 0;
        /// b -> c where a - b = c - d is the unique representation.
        std::map<std::int64_t, std::int64_t> mapping;
        /// The partner d of each b.
        std::map<std::int64_t, std::int64_t> partner;
        std::vector<std::int64_t> fixed_points;
        bool is_involution = false;
        /// 2b = a + d holds for every fixed point b.
        bool fixed_point_identity_holds = false;
    };

    /// Throws ElementOfBError when a is in B.
    auto involution_fa(const PerfectDifferenceSet & b, std::int64_t a) -> InvolutionReport;
}
