#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace sidonkit
{
    class Error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /// Two elements of an integer set land on the same residue.
    class InjectivityError : public Error
    {
    public:
        InjectivityError(std::int64_t first, std::int64_t second, std::int64_t modulus);

        auto colliding_pair() const noexcept -> std::pair<std::int64_t, std::int64_t> { return {_first, _second}; }

    private:
        std::int64_t _first, _second;
    };

    class NotSidonError : public Error
    {
    public:
        using Error::Error;
    };

    class NotPrimeError : public Error
    {
    public:
        using Error::Error;
    };

    class NotPrimePowerError : public Error
    {
    public:
        using Error::Error;
    };

    class FieldMismatchError : public Error
    {
    public:
        using Error::Error;
    };

    class ZeroElementError : public Error
    {
    public:
        using Error::Error;
    };

    class InvalidModulusError : public Error
    {
    public:
        using Error::Error;
    };

    class DegenerateCoefficientsError : public Error
    {
    public:
        using Error::Error;
    };

    class BudgetExceededError : public Error
    {
    public:
        BudgetExceededError(const std::string & what, std::uint64_t used) :
            Error(what),
            _used(used)
        {
        }

        auto used() const noexcept -> std::uint64_t { return _used; }

    private:
        std::uint64_t _used;
    };

    class SamePointError : public Error
    {
    public:
        using Error::Error;
    };

    class ElementOfBError : public Error
    {
    public:
        using Error::Error;
    };
}
