#pragma once

// Exact integer/rational scalars. Everything in the library is built on
// arbitrary-precision arithmetic; no floating point anywhere.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "gross/errors.hpp"

namespace gross {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return den(r) == 1; }

inline int sign(const Rat& r) { return r.sign(); }

inline Int ipow(const Int& base, const Int& exp) {
    if (exp < 0) throw invalid_argument("negative integer power");
    Int result = 1;
    Int b = base;
    Int e = exp;
    while (e > 0) {
        if ((e & 1) != 0) result *= b;
        b *= b;
        e >>= 1;
    }
    return result;
}

// r^n for integer n (n may be negative when r != 0).
inline Rat rpow(const Rat& r, const Int& n) {
    if (n >= 0) return Rat(ipow(num(r), n), ipow(den(r), n));
    if (r == 0) throw zero_to_nonpositive("0 raised to a negative power");
    return Rat(ipow(den(r), -n), ipow(num(r), -n));
}

// Smallest m >= 1 with target_radix^m >= source_radix (exact integer log ceiling).
inline Int ceil_log(const Int& source_radix, const Int& target_radix) {
    if (source_radix < 2 || target_radix < 2)
        throw invalid_argument("radix must be >= 2");
    Int m = 1;
    Int p = target_radix;
    while (p < source_radix) {
        p *= target_radix;
        ++m;
    }
    return m;
}

inline std::string to_string(const Rat& r) {
    if (is_integer(r)) return num(r).str();
    return num(r).str() + "/" + den(r).str();
}

}  // namespace gross
