#include <sidonkit/errors.hpp>
#include <sidonkit/finite_field.hpp>

#include <string>

using std::optional;
using std::pair;
using std::to_string;
using std::uint32_t;
using std::uint64_t;
using std::vector;

namespace sidonkit
{
    namespace
    {
        using Poly = vector<uint32_t>;

        void trim(Poly & a)
        {
            while (! a.empty() && a.back() == 0)
                a.pop_back();
        }

        auto mod_inverse(uint64_t a, uint64_t p) -> uint64_t
        {
            // p is prime, so a^(p-2) is the inverse
            uint64_t result = 1, base = a % p, e = p - 2;
            while (e) {
                if (e & 1)
                    result = result * base % p;
                base = base * base % p;
                e >>= 1;
            }
            return result;
        }

        /// Remainder of a modulo m over GF(p); m must be nonzero after trimming.
        auto poly_rem(Poly a, Poly m, uint32_t p) -> Poly
        {
            trim(a);
            trim(m);
            auto lead_inv = mod_inverse(m.back(), p);
            while (a.size() >= m.size()) {
                auto shift = a.size() - m.size();
                uint64_t factor = a.back() * lead_inv % p;
                for (std::size_t i = 0; i < m.size(); ++i) {
                    auto & c = a[i + shift];
                    c = static_cast<uint32_t>((c + p - factor * m[i] % p) % p);
                }
                trim(a);
            }
            return a;
        }

        auto poly_from_index(uint64_t index, uint32_t p, uint32_t length) -> Poly
        {
            Poly c(length, 0);
            for (uint32_t i = 0; i < length; ++i) {
                c[i] = static_cast<uint32_t>(index % p);
                index /= p;
            }
            return c;
        }

        void require_same_field(const FieldElement & a, const FieldElement & b)
        {
            if (! (a.field == b.field))
                throw FieldMismatchError("operands belong to different fields");
        }

        auto ipow(uint64_t base, uint32_t e) -> uint64_t
        {
            uint64_t r = 1;
            while (e--)
                r *= base;
            return r;
        }
    }

    auto FieldSpec::order() const -> uint64_t
    {
        return ipow(p, k);
    }

    auto FieldElement::is_zero() const -> bool
    {
        for (auto c : coeffs)
            if (c != 0)
                return false;
        return true;
    }

    auto is_prime(uint64_t n) -> bool
    {
        if (n < 2)
            return false;
        for (uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0)
                return false;
        return true;
    }

    auto prime_factors(uint64_t n) -> vector<uint64_t>
    {
        vector<uint64_t> factors;
        for (uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) {
                factors.push_back(d);
                while (n % d == 0)
                    n /= d;
            }
        if (n > 1)
            factors.push_back(n);
        return factors;
    }

    auto is_prime_power(uint64_t q) -> optional<pair<uint32_t, uint32_t>>
    {
        if (q < 2)
            return std::nullopt;
        auto factors = prime_factors(q);
        if (factors.size() != 1)
            return std::nullopt;
        uint32_t k = 0;
        while (q > 1) {
            q /= factors.front();
            ++k;
        }
        return pair{static_cast<uint32_t>(factors.front()), k};
    }

    auto is_irreducible(const vector<uint32_t> & poly, uint32_t p) -> bool
    {
        Poly f = poly;
        trim(f);
        if (f.size() < 2)
            return false;
        auto degree = static_cast<uint32_t>(f.size() - 1);
        // Trial division by every monic polynomial of degree 1 .. degree/2.
        for (uint32_t d = 1; 2 * d <= degree; ++d) {
            auto count = ipow(p, d);
            for (uint64_t index = 0; index < count; ++index) {
                auto g = poly_from_index(index, p, d + 1);
                g[d] = 1;
                if (poly_rem(f, g, p).empty())
                    return false;
            }
        }
        return true;
    }

    auto make_field(uint32_t p, uint32_t k) -> FieldSpec
    {
        if (! is_prime(p))
            throw NotPrimeError(to_string(p) + " is not prime");
        if (k < 1)
            throw Error("field degree must be at least 1");

        if (k == 1)
            return FieldSpec{p, 1, {0, 1}};

        auto count = ipow(p, k);
        for (uint64_t index = 0; index < count; ++index) {
            auto candidate = poly_from_index(index, p, k + 1);
            candidate[k] = 1;
            if (candidate[0] != 0 && is_irreducible(candidate, p))
                return FieldSpec{p, k, candidate};
        }
        throw Error("no irreducible polynomial found");
    }

    auto element_index(const FieldElement & a) -> uint64_t
    {
        uint64_t index = 0;
        for (auto i = a.coeffs.size(); i-- > 0;)
            index = index * a.field.p + a.coeffs[i];
        return index;
    }

    auto element_from_index(const FieldSpec & field, uint64_t index) -> FieldElement
    {
        if (index >= field.order())
            throw Error("element index out of range");
        return FieldElement{field, poly_from_index(index, field.p, field.k)};
    }

    auto field_zero(const FieldSpec & field) -> FieldElement
    {
        return FieldElement{field, Poly(field.k, 0)};
    }

    auto field_one(const FieldSpec & field) -> FieldElement
    {
        auto one = field_zero(field);
        one.coeffs[0] = 1;
        return one;
    }

    auto field_generator(const FieldSpec & field) -> FieldElement
    {
        auto r = poly_rem(Poly{0, 1}, field.modulus_poly, field.p);
        r.resize(field.k, 0);
        return FieldElement{field, r};
    }

    auto field_add(const FieldElement & a, const FieldElement & b) -> FieldElement
    {
        require_same_field(a, b);
        FieldElement r = a;
        for (std::size_t i = 0; i < r.coeffs.size(); ++i)
            r.coeffs[i] = (a.coeffs[i] + b.coeffs[i]) % a.field.p;
        return r;
    }

    auto field_neg(const FieldElement & a) -> FieldElement
    {
        FieldElement r = a;
        for (auto & c : r.coeffs)
            c = (a.field.p - c) % a.field.p;
        return r;
    }

    auto field_sub(const FieldElement & a, const FieldElement & b) -> FieldElement
    {
        return field_add(a, field_neg(b));
    }

    auto field_mul(const FieldElement & a, const FieldElement & b) -> FieldElement
    {
        require_same_field(a, b);
        auto p = a.field.p;
        Poly product(2 * a.field.k, 0);
        for (std::size_t i = 0; i < a.coeffs.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs.size(); ++j)
                product[i + j] = static_cast<uint32_t>((product[i + j] + uint64_t{a.coeffs[i]} * b.coeffs[j]) % p);
        auto r = poly_rem(std::move(product), a.field.modulus_poly, p);
        r.resize(a.field.k, 0);
        return FieldElement{a.field, r};
    }

    auto field_pow(const FieldElement & a, uint64_t exponent) -> FieldElement
    {
        auto result = field_one(a.field);
        auto base = a;
        while (exponent) {
            if (exponent & 1)
                result = field_mul(result, base);
            base = field_mul(base, base);
            exponent >>= 1;
        }
        return result;
    }

    auto multiplicative_order(const FieldElement & a) -> uint64_t
    {
        if (a.is_zero())
            throw ZeroElementError("zero has no multiplicative order");
        auto one = field_one(a.field);
        uint64_t order = a.field.order() - 1;
        for (auto r : prime_factors(order))
            while (order % r == 0 && field_pow(a, order / r) == one)
                order /= r;
        return order;
    }

    auto primitive_element(const FieldSpec & field) -> FieldElement
    {
        auto group_order = field.order() - 1;
        for (uint64_t index = 1; index < field.order(); ++index) {
            auto candidate = element_from_index(field, index);
            if (multiplicative_order(candidate) == group_order)
                return candidate;
        }
        throw Error("field has no primitive element");
    }

    FieldTables::FieldTables(const FieldSpec & field) :
        _q(static_cast<uint32_t>(field.order())),
        _add(uint64_t{_q} * _q),
        _mul(uint64_t{_q} * _q),
        _neg(_q)
    {
        vector<FieldElement> elements;
        elements.reserve(_q);
        for (uint32_t i = 0; i < _q; ++i)
            elements.push_back(element_from_index(field, i));
        for (uint32_t i = 0; i < _q; ++i) {
            _neg[i] = static_cast<uint32_t>(element_index(field_neg(elements[i])));
            for (uint32_t j = 0; j < _q; ++j) {
                _add[i * _q + j] = static_cast<uint32_t>(element_index(field_add(elements[i], elements[j])));
                _mul[i * _q + j] = static_cast<uint32_t>(element_index(field_mul(elements[i], elements[j])));
            }
        }
    }
}
