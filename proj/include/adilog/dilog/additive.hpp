#pragma once

// The additive dilogarithms li_{m,w} on k_m = K[t]/(t^m) for m < w < 2m,
// the closed-form li_{2,3}, and the higher additive polylogarithms li_n on
// k_2.  li_{m,w}(s e^u) is the t^{w-1}-coefficient of
// log_circ(1 - s e^{u|_m}) * u'|_{w-m}, computed inside K[t]/(t^w); this is
// well-defined on k_m because u|_m and u'|_{w-m} only read coefficients
// below m.

#include "../bloch/formal_sum.hpp"
#include "../bloch/wedge.hpp"
#include "../core/series.hpp"

namespace adilog {

template <Field F>
typename F::Elem li_mw(int m, int w, const Series<F>& x) {
    require(m < w && w < 2 * m, errc::bad_weight, "li_mw needs m < w < 2m");
    require(x.modulus() == m, errc::modulus_mismatch, "li_mw consumes elements of k_m");
    require(x.is_flat(), errc::not_flat, "li_mw needs x(0)(1-x(0)) invertible");
    const F& k = x.field();
    auto s = x.constant_term();
    auto u = log_circ(x);
    auto u_w = u.extended(w);
    auto up_w = u.derivative().extended(w).restrict_below(w - m);
    auto one = Series<F>::constant(k, k.one(), w);
    auto body = one - exp_nil(u_w).scalar_mul(s);
    return (log_circ(body) * up_w).coeff(w - 1);
}

// Q-linear extension to formal sums
template <Field F>
typename F::Elem li_mw(const F& k, int m, int w, const FormalSum<Series<F>>& xi) {
    auto acc = k.zero();
    for (const auto& [c, g] : xi.terms) acc = k.add(acc, k.mul(k.from_rat(c), li_mw(m, w, g)));
    return acc;
}

// li_{2,3}([s+at]) = -a^3 / (2 s^2 (1-s)^2)
template <Field F>
typename F::Elem li_23(const Series<F>& x) {
    require(x.modulus() == 2, errc::modulus_mismatch, "li_23 lives on k_2");
    require(x.is_flat(), errc::not_flat, "li_23 needs s(1-s) != 0");
    const F& k = x.field();
    auto s = x.constant_term();
    auto a = x.coeff(1);
    auto a3 = k.mul(a, k.mul(a, a));
    auto one_minus_s = k.sub(k.one(), s);
    auto den = k.mul(k.from_int(2), k.mul(k.mul(s, s), k.mul(one_minus_s, one_minus_s)));
    return k.neg(k.div(a3, den));
}

template <Field F>
typename F::Elem li_23(const F& k, const FormalSum<Series<F>>& xi) {
    auto acc = k.zero();
    for (const auto& [c, g] : xi.terms) acc = k.add(acc, k.mul(k.from_rat(c), li_23(g)));
    return acc;
}

// li_n(s+at) = ((-1)^n / n!) (a/s)^{2n-1} d^n/du^n log((1-s e^u)/(1-s)) at 0.
// The n-th derivative is read off a truncated series in the formal variable u.
template <Field F>
typename F::Elem li_higher(const F& k, int n, const typename F::Elem& s, const typename F::Elem& a) {
    require(n >= 2, errc::bad_weight, "li_higher needs n >= 2");
    require(!k.is_zero(s) && !k.is_zero(k.sub(k.one(), s)), errc::not_flat,
            "li_higher needs s(1-s) != 0");
    require(k.characteristic() == 0, errc::char_precision, "li_higher is a characteristic-0 map");
    int m = n + 1;
    auto u = Series<F>::gen(k, m);
    auto one = Series<F>::constant(k, k.one(), m);
    auto body = one - exp_nil(u).scalar_mul(s);
    auto gn = log_circ(body).coeff(n);  // g^{(n)}(0) / n!
    auto ratio = k.div(a, s);
    auto pref = k.one();
    for (int i = 0; i < 2 * n - 1; ++i) pref = k.mul(pref, ratio);
    auto val = k.mul(pref, gn);
    // the 1/n! cancels against the series coefficient; only (-1)^n remains
    return (n % 2 == 0) ? val : k.neg(val);
}

// star action on formal sums: lambda acts generator-wise by t -> lambda t
template <Field F>
FormalSum<Series<F>> star_scale(const typename F::Elem& lambda, const FormalSum<Series<F>>& xi) {
    FormalSum<Series<F>> out;
    for (const auto& [c, g] : xi.terms) out.add(c, star_scale(lambda, g));
    return out;
}

// the embedding <a> := a + a(1-a) t of beta_2 symbols into k_2
template <Field F>
Series<F> beta_embed(const F& k, const typename F::Elem& a) {
    require(!k.is_zero(a) && !k.is_zero(k.sub(k.one(), a)), errc::not_flat,
            "beta_embed needs a(1-a) != 0");
    Series<F> s(k, 2);
    s.coeff_mut(0) = a;
    s.coeff_mut(1) = k.mul(a, k.sub(k.one(), a));
    return s;
}

} // namespace adilog
