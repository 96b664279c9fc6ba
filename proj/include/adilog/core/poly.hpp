#pragma once

// Dense univariate polynomial arithmetic over a Field object.  Polynomials
// are coefficient vectors with no trailing zeros; the empty vector is 0.

#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace adilog {

template <class F>
concept Field = requires(const F f, const typename F::Elem a, const typename F::Elem b, long n, const Rat& q) {
    typename F::Elem;
    { f.zero() } -> std::same_as<typename F::Elem>;
    { f.one() } -> std::same_as<typename F::Elem>;
    { f.from_int(n) } -> std::same_as<typename F::Elem>;
    { f.from_rat(q) } -> std::same_as<typename F::Elem>;
    { f.add(a, b) } -> std::same_as<typename F::Elem>;
    { f.sub(a, b) } -> std::same_as<typename F::Elem>;
    { f.mul(a, b) } -> std::same_as<typename F::Elem>;
    { f.neg(a) } -> std::same_as<typename F::Elem>;
    { f.inv(a) } -> std::same_as<typename F::Elem>;
    { f.is_zero(a) } -> std::convertible_to<bool>;
    { f.eq(a, b) } -> std::convertible_to<bool>;
    { f.characteristic() } -> std::convertible_to<long>;
    { f.to_string(a) } -> std::convertible_to<std::string>;
    { f.derive(a) } -> std::same_as<typename F::Elem>;  // d relative to the prime field
};

template <Field F>
using Poly = std::vector<typename F::Elem>;

template <Field F>
void poly_trim(const F& k, Poly<F>& p) {
    while (!p.empty() && k.is_zero(p.back())) p.pop_back();
}

template <Field F>
bool poly_is_zero(const Poly<F>& p) { return p.empty(); }

template <Field F>
long poly_deg(const Poly<F>& p) { return static_cast<long>(p.size()) - 1; }

template <Field F>
Poly<F> poly_const(const F& k, typename F::Elem c) {
    Poly<F> p;
    if (!k.is_zero(c)) p.push_back(std::move(c));
    return p;
}

template <Field F>
Poly<F> poly_gen(const F& k) {  // the variable itself
    return Poly<F>{k.zero(), k.one()};
}

template <Field F>
Poly<F> poly_add(const F& k, const Poly<F>& a, const Poly<F>& b) {
    Poly<F> r(std::max(a.size(), b.size()), k.zero());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = k.add(r[i], b[i]);
    poly_trim(k, r);
    return r;
}

template <Field F>
Poly<F> poly_neg(const F& k, const Poly<F>& a) {
    Poly<F> r = a;
    for (auto& c : r) c = k.neg(c);
    return r;
}

template <Field F>
Poly<F> poly_sub(const F& k, const Poly<F>& a, const Poly<F>& b) {
    return poly_add(k, a, poly_neg(k, b));
}

template <Field F>
Poly<F> poly_mul(const F& k, const Poly<F>& a, const Poly<F>& b) {
    if (a.empty() || b.empty()) return {};
    Poly<F> r(a.size() + b.size() - 1, k.zero());
    for (size_t i = 0; i < a.size(); ++i) {
        if (k.is_zero(a[i])) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = k.add(r[i + j], k.mul(a[i], b[j]));
    }
    poly_trim(k, r);
    return r;
}

template <Field F>
Poly<F> poly_scale(const F& k, const Poly<F>& a, const typename F::Elem& c) {
    if (k.is_zero(c)) return {};
    Poly<F> r = a;
    for (auto& x : r) x = k.mul(x, c);
    return r;
}

template <Field F>
std::pair<Poly<F>, Poly<F>> poly_divmod(const F& k, Poly<F> a, const Poly<F>& b) {
    require(!b.empty(), errc::zero_element, "polynomial division by zero");
    if (a.size() < b.size()) return {{}, std::move(a)};
    Poly<F> q(a.size() - b.size() + 1, k.zero());
    auto lin = k.inv(b.back());
    for (long i = poly_deg<F>(a); i >= poly_deg<F>(b); --i) {
        if (k.is_zero(a[i])) continue;
        auto c = k.mul(a[i], lin);
        q[i - poly_deg<F>(b)] = c;
        for (size_t j = 0; j < b.size(); ++j)
            a[i - poly_deg<F>(b) + j] = k.sub(a[i - poly_deg<F>(b) + j], k.mul(c, b[j]));
    }
    poly_trim(k, a);
    poly_trim(k, q);
    return {std::move(q), std::move(a)};
}

template <Field F>
Poly<F> poly_mod(const F& k, const Poly<F>& a, const Poly<F>& b) {
    return poly_divmod(k, a, b).second;
}

template <Field F>
Poly<F> poly_monic(const F& k, Poly<F> a) {
    if (a.empty()) return a;
    auto lin = k.inv(a.back());
    for (auto& c : a) c = k.mul(c, lin);
    return a;
}

template <Field F>
Poly<F> poly_gcd(const F& k, Poly<F> a, Poly<F> b) {
    while (!b.empty()) {
        auto r = poly_mod(k, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(k, std::move(a));
}

// Over Q, plain fraction-field Euclid blows coefficients up combinatorially;
// strip each remainder to its primitive integer form instead.
class Rationals;
inline std::vector<Rat> poly_gcd(const Rationals&, std::vector<Rat> a, std::vector<Rat> b);

// g = gcd(a,b) = s*a + t*b
template <Field F>
Poly<F> poly_ext_gcd(const F& k, Poly<F> a, Poly<F> b, Poly<F>& s, Poly<F>& t) {
    Poly<F> s0 = poly_const(k, k.one()), s1 = {};
    Poly<F> t0 = {}, t1 = poly_const(k, k.one());
    while (!b.empty()) {
        auto [q, r] = poly_divmod(k, a, b);
        a = std::move(b);
        b = std::move(r);
        auto s2 = poly_sub(k, s0, poly_mul(k, q, s1));
        auto t2 = poly_sub(k, t0, poly_mul(k, q, t1));
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (!a.empty()) {
        auto lin = k.inv(a.back());
        for (auto& c : a) c = k.mul(c, lin);
        for (auto& c : s0) c = k.mul(c, lin);
        for (auto& c : t0) c = k.mul(c, lin);
    }
    s = std::move(s0);
    t = std::move(t0);
    return a;
}

template <Field F>
Poly<F> poly_deriv(const F& k, const Poly<F>& a) {
    Poly<F> r;
    for (size_t i = 1; i < a.size(); ++i)
        r.push_back(k.mul(a[i], k.from_int(static_cast<long>(i))));
    poly_trim(k, r);
    return r;
}

template <Field F>
typename F::Elem poly_eval(const F& k, const Poly<F>& a, const typename F::Elem& x) {
    auto r = k.zero();
    for (size_t i = a.size(); i-- > 0;) r = k.add(k.mul(r, x), a[i]);
    return r;
}

template <Field F>
bool poly_eq(const F& k, const Poly<F>& a, const Poly<F>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (!k.eq(a[i], b[i])) return false;
    return true;
}

// exact power via repeated squaring
template <Field F>
Poly<F> poly_pow_mod(const F& k, Poly<F> b, Int e, const Poly<F>& m) {
    Poly<F> acc = poly_const(k, k.one());
    b = poly_mod(k, b, m);
    while (e > 0) {
        if (bit_test(e, 0)) acc = poly_mod(k, poly_mul(k, acc, b), m);
        b = poly_mod(k, poly_mul(k, b, b), m);
        e >>= 1;
    }
    return acc;
}

template <Field F>
std::string poly_to_string(const F& k, const Poly<F>& a, const std::string& var) {
    if (a.empty()) return "0";
    std::string s;
    for (size_t i = a.size(); i-- > 0;) {
        if (k.is_zero(a[i])) continue;
        if (!s.empty()) s += " + ";
        std::string c = k.to_string(a[i]);
        if (i == 0) { s += c; continue; }
        if (c == "1") c.clear();
        else c = "(" + c + ")*";
        s += c + var + (i > 1 ? "^" + std::to_string(i) : "");
    }
    return s.empty() ? "0" : s;
}

} // namespace adilog
