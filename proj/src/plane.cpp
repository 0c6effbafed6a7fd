#include <sidonkit/errors.hpp>
#include <sidonkit/plane.hpp>

#include <algorithm>
#include <string>

using std::int64_t;
using std::optional;
using std::to_string;
using std::vector;

namespace sidonkit
{
    namespace
    {
        void require_exhaustive(const CyclicPlane & plane, const PlaneLimits & limits)
        {
            if (plane.v() > limits.max_exhaustive_v)
                throw Error("v = " + to_string(plane.v()) + " exceeds the exhaustive verification cap of " +
                    to_string(limits.max_exhaustive_v));
        }

        auto collinear(const CyclicPlane & plane, int64_t a, int64_t b, int64_t c) -> bool
        {
            for (int64_t y = 0; y < plane.v(); ++y)
                if (plane.incident(a, y) && plane.incident(b, y) && plane.incident(c, y))
                    return true;
            return false;
        }

        auto find_quadrangle(const CyclicPlane & plane) -> optional<std::array<int64_t, 4>>
        {
            // Small search window; a genuine plane always has a quadrangle among few points.
            auto limit = std::min<int64_t>(plane.v(), 12);
            for (int64_t a = 0; a < limit; ++a)
                for (int64_t b = a + 1; b < limit; ++b)
                    for (int64_t c = b + 1; c < limit; ++c) {
                        if (collinear(plane, a, b, c))
                            continue;
                        for (int64_t d = c + 1; d < limit; ++d)
                            if (! collinear(plane, a, b, d) && ! collinear(plane, a, c, d) && ! collinear(plane, b, c, d))
                                return std::array<int64_t, 4>{a, b, c, d};
                    }
            return std::nullopt;
        }

        auto find_general_position(const CyclicPlane & plane) -> optional<std::array<int64_t, 6>>
        {
            // p1 ∉ l2, p1 ∉ l3, p2 ∉ l1, p2 ∈ l2, p2 ∈ l3, p3 ∉ l1, p3 ∈ l2, p3 ∉ l3
            auto limit = std::min<int64_t>(plane.v(), 8);
            for (int64_t p1 = 0; p1 < limit; ++p1)
                for (int64_t p2 = 0; p2 < limit; ++p2)
                    for (int64_t p3 = 0; p3 < limit; ++p3)
                        for (int64_t l1 = 0; l1 < limit; ++l1) {
                            if (plane.incident(p2, l1) || plane.incident(p3, l1))
                                continue;
                            for (int64_t l2 = 0; l2 < plane.v(); ++l2) {
                                if (plane.incident(p1, l2) || ! plane.incident(p2, l2) || ! plane.incident(p3, l2))
                                    continue;
                                for (int64_t l3 = 0; l3 < plane.v(); ++l3)
                                    if (! plane.incident(p1, l3) && plane.incident(p2, l3) && ! plane.incident(p3, l3))
                                        return std::array<int64_t, 6>{p1, p2, p3, l1, l2, l3};
                            }
                        }
            return std::nullopt;
        }
    }

    CyclicPlane::CyclicPlane(ResidueSet base) :
        _base(std::move(base)),
        _q(order_of_modulus(_base.modulus())),
        _member(_base.v(), 0)
    {
        for (auto b : _base)
            _member[b] = 1;
    }

    CyclicPlane::CyclicPlane(const PerfectDifferenceSet & pds) :
        CyclicPlane(pds.residues())
    {
    }

    auto CyclicPlane::unchecked(ResidueSet base) -> CyclicPlane
    {
        return CyclicPlane{std::move(base)};
    }

    auto CyclicPlane::incident(int64_t point, int64_t line) const -> bool
    {
        return _member[normalize(point - line, _base.modulus())];
    }

    auto CyclicPlane::points_on(int64_t line) const -> vector<int64_t>
    {
        vector<int64_t> points;
        for (auto b : _base)
            points.push_back(normalize(b + line, _base.modulus()));
        std::ranges::sort(points);
        return points;
    }

    auto incident(const CyclicPlane & plane, int64_t point, int64_t line) -> bool
    {
        return plane.incident(point, line);
    }

    auto line_through(const CyclicPlane & plane, int64_t x, int64_t x_prime) -> int64_t
    {
        auto m = plane.base().modulus();
        x = normalize(x, m);
        x_prime = normalize(x_prime, m);
        if (x == x_prime)
            throw SamePointError("a line needs two distinct points");
        auto d = normalize(x - x_prime, m);
        for (auto b : plane.base())
            for (auto b_prime : plane.base())
                if (b != b_prime && normalize(b - b_prime, m) == d)
                    return normalize(x - b, m);
        throw Error("no line through " + to_string(x) + " and " + to_string(x_prime) + "; base is not a perfect difference set");
    }

    auto AxiomReport::ok() const -> bool
    {
        return q.has_value() && point_pair_failures.empty() && line_pair_failures.empty() && quadrangle.has_value() &&
            general_position.has_value() && lines_with_wrong_size.empty() && points_with_wrong_degree.empty();
    }

    auto verify_projective_axioms(const CyclicPlane & plane, const PlaneLimits & limits) -> AxiomReport
    {
        require_exhaustive(plane, limits);
        AxiomReport report;
        report.q = plane.q();
        auto v = plane.v();
        // Lines through points x and x' are offsets x - b with x - x' = b - b',
        // so the count depends only on the difference. Likewise lines y and y'
        // meet in points b + y with b - b' = y' - y.
        auto table = difference_table(plane.base());
        for (int64_t d = 1; d < v; ++d) {
            if (table.count_per_residue[d] != 1) {
                report.point_pair_failures.push_back(d);
                report.line_pair_failures.push_back(d);
            }
        }

        // Direct incidence counts for every point and every line.
        auto expected = report.q ? *report.q + 1 : -1;
        for (int64_t y = 0; y < v; ++y) {
            int64_t on_line = 0;
            for (int64_t x = 0; x < v; ++x)
                on_line += plane.incident(x, y);
            if (on_line != expected)
                report.lines_with_wrong_size.push_back(y);
        }
        for (int64_t x = 0; x < v; ++x) {
            int64_t through = 0;
            for (int64_t y = 0; y < v; ++y)
                through += plane.incident(x, y);
            if (through != expected)
                report.points_with_wrong_degree.push_back(x);
        }

        report.quadrangle = find_quadrangle(plane);
        report.general_position = find_general_position(plane);
        return report;
    }

    auto polar_of_point(const CyclicPlane & plane, int64_t point) -> int64_t
    {
        return normalize(-point, plane.base().modulus());
    }

    auto polar_of_line(const CyclicPlane & plane, int64_t line) -> int64_t
    {
        return normalize(-line, plane.base().modulus());
    }

    auto absolute_points(const CyclicPlane & plane) -> ResidueSet
    {
        vector<int64_t> points;
        for (int64_t x = 0; x < plane.v(); ++x)
            if (plane.base().contains(2 * x))
                points.push_back(x);
        return ResidueSet{plane.base().modulus(), points};
    }

    auto is_absolute_line(const CyclicPlane & plane, int64_t line) -> bool
    {
        return plane.incident(polar_of_line(plane, line), line);
    }

    auto BaerReport::violation_count() const -> std::size_t
    {
        std::size_t total = 0;
        for (auto & c : checks)
            total += c.violations.size();
        return total;
    }

    auto BaerReport::find(const std::string & name) const -> const BaerCheck &
    {
        for (auto & c : checks)
            if (c.name == name)
                return c;
        throw Error("no Baer check named " + name);
    }

    auto baer_report(const CyclicPlane & plane, const PlaneLimits & limits) -> BaerReport
    {
        require_exhaustive(plane, limits);
        if (! plane.q())
            throw InvalidModulusError(to_string(plane.v()) + " is not of the form q^2 + q + 1");

        BaerReport report;
        report.q = *plane.q();
        auto v = plane.v();
        bool odd = report.q % 2 == 1;

        vector<char> is_absolute(v, 0);
        for (auto x : absolute_points(plane)) {
            is_absolute[x] = 1;
            report.absolute_points.push_back(x);
        }

        BaerCheck one_on_absolute{"absolute_line_one_absolute_point", true, {}};
        BaerCheck even_non_absolute{"non_absolute_line_even_non_absolute", true, {}};
        BaerCheck odd_iff{"odd_absolute_iff_one", odd, {}};
        BaerCheck odd_at_most_two{"odd_at_most_two", odd, {}};
        BaerCheck even_odd_count{"even_odd_count", ! odd, {}};
        BaerCheck even_collinear{"even_all_collinear", ! odd, {}};

        auto total_absolute = static_cast<int64_t>(report.absolute_points.size());
        for (int64_t y = 0; y < v; ++y) {
            int64_t absolute_on_line = 0, non_absolute_on_line = 0;
            for (auto x : plane.points_on(y))
                (is_absolute[x] ? absolute_on_line : non_absolute_on_line)++;

            bool line_absolute = is_absolute_line(plane, y);
            if (line_absolute)
                report.absolute_lines.push_back(y);

            if (line_absolute && absolute_on_line != 1)
                one_on_absolute.violations.push_back(y);
            if (! line_absolute && non_absolute_on_line % 2 != 0)
                even_non_absolute.violations.push_back(y);

            if (odd) {
                if (line_absolute != (absolute_on_line == 1))
                    odd_iff.violations.push_back(y);
                if (absolute_on_line > 2)
                    odd_at_most_two.violations.push_back(y);
            }
            else {
                if (absolute_on_line % 2 != 1)
                    even_odd_count.violations.push_back(y);
                if (absolute_on_line == total_absolute) {
                    // every point of the axis must itself be absolute
                    if (non_absolute_on_line != 0)
                        even_collinear.violations.push_back(y);
                    else if (! report.absolute_axis)
                        report.absolute_axis = y;
                }
            }
        }

        if (! odd && ! report.absolute_axis && even_collinear.violations.empty())
            even_collinear.violations.push_back(-1);

        report.checks = {one_on_absolute, even_non_absolute, odd_iff, odd_at_most_two, even_odd_count, even_collinear};
        return report;
    }

    auto involution_fa(const PerfectDifferenceSet & b, int64_t a) -> InvolutionReport
    {
        auto m = b.modulus();
        a = normalize(a, m);
        if (b.contains(a))
            throw ElementOfBError(to_string(a) + " lies in B, so a - a = 0 has no representation");

        // representation[d] = (c, d') with c - d' = d
        vector<std::pair<int64_t, int64_t>> representation(b.v(), {-1, -1});
        for (auto c : b.residues())
            for (auto d : b.residues())
                if (c != d)
                    representation[normalize(c - d, m)] = {c, d};

        InvolutionReport report;
        report.a = a;
        for (auto x : b.residues()) {
            auto [c, d] = representation[normalize(a - x, m)];
            report.mapping[x] = c;
            report.partner[x] = d;
        }

        report.is_involution = true;
        for (auto [x, c] : report.mapping)
            if (report.mapping.at(c) != x)
                report.is_involution = false;

        report.fixed_point_identity_holds = true;
        for (auto [x, c] : report.mapping)
            if (x == c) {
                report.fixed_points.push_back(x);
                if (normalize(2 * x, m) != normalize(a + report.partner.at(x), m))
                    report.fixed_point_identity_holds = false;
            }
        return report;
    }
}
