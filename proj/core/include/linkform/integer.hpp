#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "linkform/errors.hpp"

namespace linkform {

using Integer = boost::multiprecision::cpp_int;

inline std::int64_t to_int64(const Integer& v)
{
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        throw OverflowError("integer does not fit in 64 bits: " + v.str());
    return static_cast<std::int64_t>(v);
}

// Representative of a modulo m in [0, m); m == 0 leaves a unchanged.
inline Integer mod_floor(const Integer& a, const Integer& m)
{
    if (m == 0)
        return a;
    Integer r = a % m;
    if (r < 0)
        r += abs(m);
    return r;
}

inline std::int64_t mod_floor(std::int64_t a, std::int64_t m)
{
    if (m == 0)
        return a;
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

inline Integer gcd(const Integer& a, const Integer& b)
{
    return boost::multiprecision::gcd(a, b);
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("64-bit overflow in addition");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("64-bit overflow in multiplication");
    return r;
}

// Inverse of a modulo m, for gcd(a, m) == 1 and m > 1.
inline std::int64_t inverse_mod(std::int64_t a, std::int64_t m)
{
    std::int64_t r0 = m, r1 = mod_floor(a, m), s0 = 0, s1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t t = r0 - q * r1;
        r0 = r1;
        r1 = t;
        t = s0 - q * s1;
        s0 = s1;
        s1 = t;
    }
    if (r0 != 1)
        throw NoSolution("element is not invertible modulo " + std::to_string(m));
    return mod_floor(s0, m);
}

} // namespace linkform
