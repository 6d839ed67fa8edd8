#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qflab {

using i64 = std::int64_t;
using i128 = __int128;

/// Thrown whenever an exact integer result does not fit its storage type.
class OverflowError : public std::overflow_error {
public:
    explicit OverflowError(const std::string& what) : std::overflow_error(what) {}
};

inline i64 checked_add(i64 a, i64 b)
{
    i64 r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("int64 addition overflow");
    return r;
}

inline i64 checked_sub(i64 a, i64 b)
{
    i64 r;
    if (__builtin_sub_overflow(a, b, &r))
        throw OverflowError("int64 subtraction overflow");
    return r;
}

inline i64 checked_mul(i64 a, i64 b)
{
    i64 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("int64 multiplication overflow");
    return r;
}

inline i64 narrow(i128 v)
{
    if (v > INT64_MAX || v < INT64_MIN)
        throw OverflowError("int128 value does not fit in int64");
    return static_cast<i64>(v);
}

/// floor(sqrt(n)) for n >= 0, exact.
inline i128 isqrt(i128 n)
{
    if (n < 0)
        throw std::domain_error("isqrt of negative value");
    if (n < 2)
        return n;
    auto r = static_cast<i128>(__builtin_sqrtl(static_cast<long double>(n)));
    while (r * r > n)
        --r;
    while ((r + 1) * (r + 1) <= n)
        ++r;
    return r;
}

inline i128 floor_div(i128 a, i128 b)
{
    i128 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

inline i128 ceil_div(i128 a, i128 b)
{
    return -floor_div(-a, b);
}

inline i64 mod_floor(i64 a, i64 m)
{
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

} // namespace qflab
