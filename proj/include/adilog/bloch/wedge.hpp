#pragma once

// Exterior-square (and cube) presentations in evaluation mode: formal lists
// of wedge terms with rational multiplicities.  Multilinearity and alternation
// are applied lazily by the consumers (the coefficient functionals and the
// residues).  Canonical coordinates live in canonical.hpp.

#include "../core/series.hpp"
#include "formal_sum.hpp"

namespace adilog {

template <class T>
struct Wedge2 {
    struct Term {
        Rat c;
        T a, b;
    };
    std::vector<Term> terms;

    void add(const Rat& c, const T& a, const T& b) {
        if (c != 0) terms.push_back({c, a, b});
    }
    void add(const Wedge2& o) {
        for (const auto& t : o.terms) terms.push_back(t);
    }
    void add_scaled(const Rat& s, const Wedge2& o) {
        for (const auto& t : o.terms) add(s * t.c, t.a, t.b);
    }
    Wedge2 operator+(const Wedge2& o) const {
        Wedge2 r = *this;
        r.add(o);
        return r;
    }
    Wedge2 operator-(const Wedge2& o) const {
        Wedge2 r = *this;
        r.add_scaled(Rat(-1), o);
        return r;
    }
    bool empty() const { return terms.empty(); }
};

template <class T>
struct Wedge3 {
    struct Term {
        Rat c;
        T a, b, d;
    };
    std::vector<Term> terms;
    void add(const Rat& c, const T& a, const T& b, const T& d) {
        if (c != 0) terms.push_back({c, a, b, d});
    }
};

// delta: [x] -> (1-x) ^ x, extended linearly.
template <BlochRing T>
Wedge2<T> delta(const FormalSum<T>& xi) {
    Wedge2<T> w;
    for (const auto& [c, g] : xi.terms) w.add(c, one_like(g) - g, g);
    return w;
}

template <BlochRing T>
Wedge2<T> delta(const T& x) {
    return delta(FormalSum<T>(x));
}

// (ell_i ^ ell_j)(a ^ b) = ell_i(a) ell_j(b) - ell_i(b) ell_j(a), extended
// bilinearly over the term list.
template <Field F>
typename F::Elem wedge_eval(const F& k, int i, int j, const Wedge2<Series<F>>& w) {
    auto acc = k.zero();
    for (const auto& t : w.terms) {
        require(i >= 1 && i < t.a.modulus() && j >= 1 && j < t.a.modulus(),
                errc::index_out_of_range, "wedge_eval indices must be below the modulus");
        auto la = log_circ(t.a);
        auto lb = log_circ(t.b);
        auto v = k.sub(k.mul(la.coeff(i), lb.coeff(j)), k.mul(lb.coeff(i), la.coeff(j)));
        acc = k.add(acc, k.mul(v, k.from_rat(t.c)));
    }
    return acc;
}

} // namespace adilog
