#pragma once

#include "verlab/error.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <concepts>
#include <cstdint>
#include <limits>
#include <string>
#include <type_traits>
#include <vector>

namespace verlab {

using BigInt = boost::multiprecision::cpp_int;

/// A validated prime. Constructing from a composite throws NotPrime.
class Prime {
public:
    explicit Prime(std::int64_t value) : value_(value)
    {
        if (!is_prime(value))
            throw Error(ErrorCode::NotPrime, std::to_string(value) + " is not prime");
    }

    std::int64_t value() const noexcept { return value_; }
    operator std::int64_t() const noexcept { return value_; }

    friend bool operator==(Prime, Prime) = default;
    friend auto operator<=>(Prime, Prime) = default;

    static constexpr bool is_prime(std::int64_t n) noexcept
    {
        if (n < 2)
            return false;
        for (std::int64_t d = 2; d * d <= n; ++d)
            if (n % d == 0)
                return false;
        return true;
    }

private:
    std::int64_t value_;
};

namespace detail {

template <class T>
T checked_add(T a, T b)
{
    if constexpr (std::is_integral_v<T>) {
        T r;
        if (__builtin_add_overflow(a, b, &r))
            throw Error(ErrorCode::Overflow, "integer addition overflow");
        return r;
    } else {
        return a + b;
    }
}

template <class T>
T checked_mul(T a, T b)
{
    if constexpr (std::is_integral_v<T>) {
        T r;
        if (__builtin_mul_overflow(a, b, &r))
            throw Error(ErrorCode::Overflow, "integer multiplication overflow");
        return r;
    } else {
        return a * b;
    }
}

template <class T>
std::string to_string(const T& value)
{
    if constexpr (std::is_integral_v<T>)
        return std::to_string(value);
    else
        return value.str();
}

/// Non-negative remainder.
inline std::int64_t mod(std::int64_t a, std::int64_t m)
{
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

/// base^exp with overflow detection.
inline std::int64_t ipow(std::int64_t base, std::int64_t exp)
{
    std::int64_t r = 1;
    for (std::int64_t i = 0; i < exp; ++i)
        r = checked_mul(r, base);
    return r;
}

/// Base-p digits of a non-negative integer, least significant first.
inline std::vector<std::int64_t> digits_lsb(std::int64_t value, std::int64_t p)
{
    std::vector<std::int64_t> out;
    while (value > 0) {
        out.push_back(value % p);
        value /= p;
    }
    return out;
}

/// Returns a such that value == p^a, or -1 when value is not a power of p.
inline std::int64_t log_exact(std::int64_t value, std::int64_t p)
{
    if (value < 1)
        return -1;
    std::int64_t a = 0;
    while (value % p == 0) {
        value /= p;
        ++a;
    }
    return value == 1 ? a : -1;
}

} // namespace detail

/// Natural log of a positive big integer; exact integers of any size.
inline double log_big(const BigInt& x)
{
    if (x <= 0)
        return -std::numeric_limits<double>::infinity();
    const std::size_t bits = boost::multiprecision::msb(x) + 1;
    if (bits <= 1000)
        return std::log(x.convert_to<double>());
    const std::size_t shift = bits - 64;
    const BigInt top = x >> shift;
    return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
}

} // namespace verlab
