#include <sidonkit/certificate.hpp>
#include <sidonkit/errors.hpp>
#include <sidonkit/pds.hpp>
#include <sidonkit/sidon.hpp>

#include <algorithm>
#include <cstdlib>
#include <tuple>

using std::int64_t;
using std::optional;
using std::string;
using std::vector;

namespace sidonkit
{
    using std::to_string;

    namespace
    {
        auto halves_of_evens(const IntegerSet & a) -> vector<int64_t>
        {
            vector<int64_t> h;
            for (auto x : a)
                if (x % 2 == 0)
                    h.push_back(x / 2);
            return h;
        }

        /// All (a1, a2, a3) in A with x - a1 = a2 - a3, x != a1, (x, a1) != (a2, a3).
        auto collisions(const IntegerSet & a, int64_t x) -> vector<Collision>
        {
            vector<Collision> found;
            for (auto a1 : a) {
                if (a1 == x)
                    continue;
                auto d = x - a1;
                for (auto a3 : a)
                    if (a.contains(a3 + d) && ! (x == a3 + d && a1 == a3))
                        found.push_back({a1, a3 + d, a3});
            }
            return found;
        }

        auto certificate_integers(const NonExtensionCertificate & c) -> vector<int64_t>
        {
            vector<int64_t> ints = c.forced_absolute;
            ints.push_back(c.collinear_witness.t);
            ints.insert(ints.end(), c.collinear_witness.triple.begin(), c.collinear_witness.triple.end());
            std::visit(
                [&](const auto & w) {
                    using W = std::decay_t<decltype(w)>;
                    if constexpr (std::is_same_v<W, OffLineWitness>) {
                        ints.push_back(w.h4);
                        ints.push_back(w.w);
                    }
                    else {
                        ints.push_back(w.a);
                        ints.push_back(w.u);
                    }
                    ints.insert(ints.end(), w.collision.begin(), w.collision.end());
                },
                c.even_case);
            return ints;
        }

        struct Candidate
        {
            NonExtensionCertificate certificate;
            int64_t bound;
            int kind;
            int64_t reach;
            int64_t gap;
        };

        auto candidate_key(const Candidate & c)
        {
            return std::tuple{c.bound, c.kind, c.reach, c.gap};
        }

        /// The best geometric obstruction for one translate, without the small-v part.
        auto obstruction_for(const IntegerSet & a, int64_t shift) -> optional<Candidate>
        {
            auto shifted = a.translated(shift);
            auto forced = halves_of_evens(shifted);
            optional<Candidate> best;

            // Preference: smallest aliasing bound, off-line witnesses first, then
            // the collision with the smallest integers, then the smallest gap.
            auto consider = [&](NonExtensionCertificate cert, int kind, int64_t x, const Collision & col) {
                int64_t reach = std::abs(x);
                for (auto y : col)
                    reach = std::max(reach, std::abs(y));
                Candidate c{std::move(cert), 0, kind, reach, std::abs(x - col[0])};
                c.bound = aliasing_bound_for(c.certificate, a);
                if (! best || candidate_key(c) < candidate_key(*best))
                    best = std::move(c);
            };

            for (std::size_t i = 0; i < forced.size(); ++i)
                for (std::size_t j = i + 1; j < forced.size(); ++j)
                    for (std::size_t k = j + 1; k < forced.size(); ++k) {
                        auto h1 = forced[i], h2 = forced[j], h3 = forced[k];
                        for (auto base : shifted) {
                            auto t = h1 - base;
                            if (! shifted.contains(h2 - t) || ! shifted.contains(h3 - t))
                                continue;

                            NonExtensionCertificate cert;
                            cert.shift = shift;
                            cert.forced_absolute = forced;
                            cert.collinear_witness = CollinearWitness{t, {h1, h2, h3}};

                            for (auto h4 : forced) {
                                auto w = h4 - t;
                                if (shifted.contains(w))
                                    continue;
                                for (auto & col : collisions(shifted, w)) {
                                    cert.even_case = OffLineWitness{h4, w, col};
                                    consider(cert, 0, w, col);
                                }
                            }
                            for (auto x : shifted) {
                                auto u = 2 * (x + t);
                                for (auto & col : collisions(shifted, u)) {
                                    cert.even_case = SaturationWitness{x, u, col};
                                    consider(cert, 1, u, col);
                                }
                            }
                        }
                    }
            return best;
        }

        auto small_moduli(int64_t bound) -> vector<int64_t>
        {
            vector<int64_t> vs;
            for (int64_t q = 2; q * q + q + 1 < bound; ++q)
                vs.push_back(q * q + q + 1);
            return vs;
        }
    }

    auto aliasing_bound_for(const NonExtensionCertificate & certificate, const IntegerSet & a) -> int64_t
    {
        int64_t m = 0;
        for (auto x : certificate_integers(certificate))
            m = std::max(m, std::abs(x));
        for (auto x : a)
            m = std::max(m, std::abs(x + certificate.shift));
        return 2 * m + 1;
    }

    auto certify_non_extension(const IntegerSet & a, const CertifyOptions & options) -> optional<NonExtensionCertificate>
    {
        if (! is_sidon_differences(a))
            throw NotSidonError("input set is not a Sidon set");

        auto best = obstruction_for(a, 0);
        if (! best && ! a.empty()) {
            int64_t window = options.shift_window;
            if (window < 0) {
                int64_t m = 0;
                for (auto x : a)
                    m = std::max(m, std::abs(x));
                window = m + (a.elements().back() - a.elements().front());
            }
            for (int64_t magnitude = 1; magnitude <= window; ++magnitude)
                for (auto shift : {-magnitude, magnitude})
                    if (auto c = obstruction_for(a, shift); c && (! best || candidate_key(*c) < candidate_key(*best)))
                        best = std::move(c);
        }
        if (! best)
            return std::nullopt;

        auto certificate = std::move(best->certificate);
        certificate.aliasing_bound = best->bound;
        for (auto v : small_moduli(certificate.aliasing_bound)) {
            auto outcome = extend_to_pds(a, Modulus{v}, options.search);
            if (outcome.status == SearchStatus::budget_exceeded)
                throw BudgetExceededError("small-modulus search at v = " + to_string(v) + " ran out of nodes",
                    outcome.nodes_explored);
            if (outcome.status == SearchStatus::found)
                return std::nullopt;
            certificate.small_moduli_exhausted.push_back(
                SmallModulusResult{v, outcome.status, outcome.precheck_reason, outcome.nodes_explored});
        }
        return certificate;
    }

    auto check_certificate(const NonExtensionCertificate & certificate, const IntegerSet & a, const SearchOptions & options)
        -> CertificateCheck
    {
        CertificateCheck check;
        auto fail = [&](string reason) { check.reasons.push_back(std::move(reason)); };

        if (certificate.version != NonExtensionCertificate::current_version)
            fail("unsupported certificate version " + to_string(certificate.version));

        auto shifted = a.translated(certificate.shift);
        if (! is_sidon_differences(shifted))
            fail("A is not a Sidon set");

        for (auto h : certificate.forced_absolute)
            if (! shifted.contains(2 * h))
                fail("forced absolute " + to_string(h) + ": 2h is not in A + shift");

        auto & cw = certificate.collinear_witness;
        auto & triple = cw.triple;
        if (triple[0] == triple[1] || triple[0] == triple[2] || triple[1] == triple[2])
            fail("collinear triple is not three distinct points");
        for (auto h : triple) {
            if (std::ranges::find(certificate.forced_absolute, h) == certificate.forced_absolute.end())
                fail("triple member " + to_string(h) + " is not a listed forced absolute");
            if (! shifted.contains(h - cw.t))
                fail("triple member " + to_string(h) + " is not on line B + " + to_string(cw.t));
        }

        auto check_collision = [&](int64_t x, const Collision & c) {
            auto [a1, a2, a3] = c;
            for (auto y : c)
                if (! shifted.contains(y))
                    fail("collision element " + to_string(y) + " is not in A + shift");
            if (x - a1 != a2 - a3)
                fail("collision identity " + to_string(x) + " - " + to_string(a1) + " = " + to_string(a2) + " - " +
                    to_string(a3) + " is false");
            if (x == a1)
                fail("collision difference is zero");
            if (x == a2 && a1 == a3)
                fail("collision pairs are identical");
        };

        std::visit(
            [&](const auto & w) {
                using W = std::decay_t<decltype(w)>;
                if constexpr (std::is_same_v<W, OffLineWitness>) {
                    if (! shifted.contains(2 * w.h4))
                        fail("h4 = " + to_string(w.h4) + " is not a forced absolute");
                    if (w.w != w.h4 - cw.t)
                        fail("w != h4 - t");
                    check_collision(w.w, w.collision);
                }
                else {
                    if (! shifted.contains(w.a))
                        fail("saturation element " + to_string(w.a) + " is not in A + shift");
                    if (w.u != 2 * (w.a + cw.t))
                        fail("u != 2(a + t)");
                    check_collision(w.u, w.collision);
                }
            },
            certificate.even_case);

        auto bound = aliasing_bound_for(certificate, a);
        if (bound != certificate.aliasing_bound)
            fail("aliasing bound is " + to_string(certificate.aliasing_bound) + ", recomputed " + to_string(bound));

        for (auto v : small_moduli(bound)) {
            auto listed = std::ranges::find_if(certificate.small_moduli_exhausted, [&](auto & r) { return r.v == v; });
            if (listed == certificate.small_moduli_exhausted.end()) {
                fail("v = " + to_string(v) + " below the aliasing bound is not covered");
                continue;
            }
            if (listed->status != SearchStatus::exhausted && listed->status != SearchStatus::precheck_failed)
                fail("v = " + to_string(v) + " is recorded as " + to_string(listed->status));
            auto rerun = extend_to_pds(a, Modulus{v}, options);
            if (rerun.status != listed->status)
                fail("v = " + to_string(v) + " re-ran as " + to_string(rerun.status) + ", recorded " + to_string(listed->status));
        }

        check.valid = check.reasons.empty();
        return check;
    }
}
