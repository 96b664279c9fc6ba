#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "errors.hpp"

namespace adilog {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rat& q) { return rat_den(q) == 1; }

inline long to_long(const Int& n) {
    return n.convert_to<long>();
}

inline Rat rat_pow(const Rat& q, long e) {
    if (e == 0) return Rat(1);
    if (q == 0) {
        require(e > 0, errc::zero_element, "0 raised to a negative power");
        return Rat(0);
    }
    Rat base = e > 0 ? q : Rat(1) / q;
    unsigned long k = static_cast<unsigned long>(e > 0 ? e : -e);
    Rat acc(1);
    while (k) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

inline Int int_pow(Int b, unsigned long e) {
    Int acc(1);
    while (e) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

inline std::string rat_str(const Rat& q) {
    if (is_integer(q)) return rat_num(q).str();
    return rat_num(q).str() + "/" + rat_den(q).str();
}

// Crude size measure used by the random samplers' rejection bounds.
inline std::size_t rat_height_digits(const Rat& q) {
    return rat_num(q).str().size() + rat_den(q).str().size();
}

} // namespace adilog
