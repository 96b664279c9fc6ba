#pragma once

// The five-term relation [x]-[y]+[y/x]-[(1-x^{-1})/(1-y^{-1})]+[(1-x)/(1-y)].
// Every generator lands in A-flat whenever x, y, 1-x, 1-y and 1-x/y are units.

#include "formal_sum.hpp"

namespace adilog {

template <BlochRing T>
bool five_term_admissible(const T& x, const T& y) {
    if (!x.is_unit() || !y.is_unit()) return false;
    const T one = one_like(x);
    if (!(one - x).is_unit() || !(one - y).is_unit()) return false;
    return (x - y).is_unit();  // equivalent to 1 - x/y being a unit
}

template <BlochRing T>
FormalSum<T> five_term(const T& x, const T& y) {
    require(five_term_admissible(x, y), errc::not_in_general_position,
            "five_term needs x, y, 1-x, 1-y, 1-x/y all units");
    const T one = one_like(x);
    FormalSum<T> s;
    s.add(Rat(1), x);
    s.add(Rat(-1), y);
    s.add(Rat(1), y * x.inverse());
    s.add(Rat(-1), (one - x.inverse()) * (one - y.inverse()).inverse());
    s.add(Rat(1), (one - x) * (one - y).inverse());
    return s;
}

} // namespace adilog
