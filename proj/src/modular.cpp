#include <sidonkit/errors.hpp>
#include <sidonkit/modular.hpp>

#include <algorithm>
#include <map>
#include <string>

using std::int64_t;
using std::to_string;
using std::vector;

namespace sidonkit
{
    InjectivityError::InjectivityError(int64_t first, int64_t second, int64_t modulus) :
        Error("elements " + to_string(first) + " and " + to_string(second) + " are identical modulo " + to_string(modulus)),
        _first(first),
        _second(second)
    {
    }

    Modulus::Modulus(int64_t v) :
        _v(v)
    {
        if (v < 1)
            throw InvalidModulusError("modulus must be positive, got " + to_string(v));
    }

    auto normalize(int64_t x, Modulus v) noexcept -> int64_t
    {
        auto r = x % v.value();
        return r < 0 ? r + v.value() : r;
    }

    IntegerSet::IntegerSet(std::initializer_list<int64_t> elements) :
        IntegerSet(vector<int64_t>(elements))
    {
    }

    IntegerSet::IntegerSet(vector<int64_t> elements) :
        _elements(std::move(elements))
    {
        std::ranges::sort(_elements);
        auto dup = std::ranges::unique(_elements);
        _elements.erase(dup.begin(), dup.end());
    }

    auto IntegerSet::contains(int64_t x) const -> bool
    {
        return std::ranges::binary_search(_elements, x);
    }

    auto IntegerSet::translated(int64_t c) const -> IntegerSet
    {
        auto shifted = _elements;
        for (auto & x : shifted)
            x += c;
        return IntegerSet{std::move(shifted)};
    }

    ResidueSet::ResidueSet(Modulus modulus, vector<int64_t> elements) :
        _modulus(modulus)
    {
        std::map<int64_t, int64_t> seen;
        for (auto x : elements) {
            auto r = normalize(x, modulus);
            auto [it, inserted] = seen.emplace(r, x);
            if (! inserted && it->second != x)
                throw InjectivityError(std::min(it->second, x), std::max(it->second, x), modulus.value());
        }
        _elements.reserve(seen.size());
        for (auto & [r, _] : seen)
            _elements.push_back(r);
    }

    auto ResidueSet::contains(int64_t residue) const -> bool
    {
        return std::ranges::binary_search(_elements, normalize(residue, _modulus));
    }

    auto ResidueSet::translated(int64_t c) const -> ResidueSet
    {
        auto shifted = _elements;
        for (auto & x : shifted)
            x += c;
        return ResidueSet{_modulus, std::move(shifted)};
    }

    auto ResidueSet::operator<=>(const ResidueSet & other) const -> std::strong_ordering
    {
        if (auto c = _modulus.value() <=> other._modulus.value(); c != 0)
            return c;
        return std::lexicographical_compare_three_way(_elements.begin(), _elements.end(),
            other._elements.begin(), other._elements.end());
    }

    auto DifferenceTable::total() const noexcept -> int64_t
    {
        int64_t sum = 0;
        for (auto c : count_per_residue)
            sum += c;
        return sum;
    }

    auto reduce_int_set(const IntegerSet & a, Modulus v) -> ResidueSet
    {
        return ResidueSet{v, vector<int64_t>(a.begin(), a.end())};
    }

    auto difference_table(const ResidueSet & b) -> DifferenceTable
    {
        DifferenceTable table{b.modulus(), vector<int64_t>(b.v(), 0)};
        for (auto x : b)
            for (auto y : b)
                if (x != y)
                    ++table.count_per_residue[normalize(x - y, b.modulus())];
        return table;
    }
}
