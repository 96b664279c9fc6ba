#pragma once

// The weight-two map rho_1 = log dlog on (Lambda^2 A^x)^o for A = K[t]/(t^2),
// and the exactness decision procedure over Q(x)[t]/(t^2): omega = dA iff the
// dt coefficient's derivative matches the t-part of the dx coefficient and the
// t-free dx part has a rational antiderivative.

#include "../bloch/canonical.hpp"
#include "../core/differential.hpp"

namespace adilog {

// log dlog: each wedge term u ^ v splits through the canonical section as
// u0(1+c t) ^ v0(1+d t); the constant block must vanish in Lambda^2 (x) Q
// (NotInfinitesimal otherwise), the rest maps to c t dlog(v) - d t dlog(u0).
template <class K>
Differential<K> rho1_logdlog(const K& k, const Wedge2<Series<K>>& w)
    requires(std::same_as<K, Rationals> || std::same_as<K, QxField>)
{
    Differential<K> out(k, 2);
    Wedge2<Series<K>> const_block;
    for (const auto& term : w.terms) {
        require(term.a.modulus() == 2 && term.b.modulus() == 2, errc::unsupported_ring,
                "rho1 lives on K[t]/(t^2)");
        require(term.a.is_unit() && term.b.is_unit(), errc::zero_unit, "wedge slots must be units");
        auto u0 = term.a.constant_term();
        auto v0 = term.b.constant_term();
        auto gamma = k.div(term.a.coeff(1), u0);
        auto delta_ = k.div(term.b.coeff(1), v0);
        const_block.add(term.c, Series<K>::constant(k, u0, 2), Series<K>::constant(k, v0, 2));
        // gamma t dlog(v) - delta t dlog(u0); the (1+gamma t)^(1+delta t)
        // part dies against t^2 = 0 and t dt = 0
        Series<K> gt(k, 2);
        gt.coeff_mut(1) = k.mul(gamma, k.from_rat(term.c));
        Series<K> dt_(k, 2);
        dt_.coeff_mut(1) = k.mul(delta_, k.from_rat(term.c));
        out = out + dlog(term.b).mul(gt) - dlog(Series<K>::constant(k, u0, 2)).mul(dt_);
    }
    require(wedge_is_zero(k, const_block).zero, errc::not_infinitesimal,
            "wedge has a nonzero constant block; not in (Lambda^2)^o");
    return out;
}

// ---------------------------------------------------------------------------
// exactness over Q(x)[t]/(t^2)
// ---------------------------------------------------------------------------

namespace detail {

// does the proper fraction part of f dx integrate rationally?  Reduce each
// q-adic level by parts; the level-1 component must vanish.
inline bool rational_antiderivative_exists(const QxField& kx, const QxField::Elem& f) {
    Rationals Q;
    if (kx.is_zero(f)) return true;
    auto [poly_part, rem] = poly_divmod(Q, f.num, f.den);
    (void)poly_part;  // polynomials always integrate
    if (rem.empty()) return true;
    for (auto& [q, e] : factor_q(f.den)) {
        // extract the q-component: rem/den = A/q^e + (coprime rest)
        PolyQ qe = poly_const(Q, Rat(1));
        for (long t = 0; t < e; ++t) qe = poly_mul(Q, q, qe);
        PolyQ rest = poly_divmod(Q, f.den, qe).first;
        PolyQ s, t2;
        auto g = poly_ext_gcd(Q, qe, rest, s, t2);
        require(poly_deg<Rationals>(g) == 0, errc::internal, "hermite: factors not coprime");
        PolyQ A = poly_mod(Q, poly_mul(Q, rem, t2), qe);  // rem/den == A/q^e + ...
        // integrate by parts down to level 1: A/q^i with A = B q' + C q gives
        // d(-B/((i-1) q^{i-1})) + (B'/(i-1) + C)/q^{i-1}
        PolyQ qp = poly_deriv(Q, q);
        PolyQ sq, tq;
        auto gq = poly_ext_gcd(Q, qp, q, sq, tq);
        require(poly_deg<Rationals>(gq) == 0, errc::internal, "squarefree factor expected");
        for (long i = e; i >= 2; --i) {
            PolyQ level = poly_mod(Q, A, qe);  // current numerator against q^i
            PolyQ B = poly_mod(Q, poly_mul(Q, level, sq), q);
            PolyQ C = poly_divmod(Q, poly_sub(Q, level, poly_mul(Q, B, qp)), q).first;
            PolyQ next = poly_add(Q, poly_scale(Q, poly_deriv(Q, B), Rat(1, i - 1)), C);
            A = next;
            qe = poly_divmod(Q, qe, q).first;
        }
        if (!poly_mod(Q, A, q).empty()) return false;  // level-1 residue class
    }
    return true;
}

} // namespace detail

// omega = (f0 + f1 t) dx + h0 dt in dA  <=>  f1 = h0' and f0 dx has a
// rational antiderivative
inline bool is_exact(const QxField& kx, const Differential<QxField>& omega) {
    require(omega.modulus() == 2, errc::unsupported_ring, "is_exact decides over Q(x)[t]/(t^2)");
    auto f0 = omega.dx().coeff(0);
    auto f1 = omega.dx().coeff(1);
    auto h0 = omega.dt().coeff(0);
    if (!kx.eq(f1, kx.derive(h0))) return false;
    return detail::rational_antiderivative_exists(kx, f0);
}

template <Field F>
bool is_exact(const F&, const Differential<F>&) {
    fail(errc::unsupported_ring, "is_exact supports univariate rational bases over Q");
}

} // namespace adilog
