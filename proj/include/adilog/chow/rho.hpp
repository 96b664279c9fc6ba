#pragma once

// The infinitesimal Chow dilogarithm on P^1 over Q[t]/(t^N): triple residues
// through the tame symbol, rho = sum_c Tr ell(res_c), the lifting-defect
// 1-form Omega, the corrected rho, and the B_2 residue map.
//
// Sign conventions, fixed once and verified by the specialization suite
// (rho(1-z, z, 1-a/z) = li_{2,3}([a])):
//   res(pi^a u ^ pi^b v ^ pi^c w) = a(v^w) - b(u^w) + c(u^v),
//   ell = ell_2 ^ ell_1, global sign +1.

#include <array>
#include <set>

#include "../bloch/wedge.hpp"
#include "../core/differential.hpp"
#include "../dilog/additive.hpp"
#include "ratfunc.hpp"

namespace adilog {

inline constexpr int chow_sign = 1;  // calibrated against li_{2,3} on P^1

struct OrdUnit {
    long ord;
    RatFuncQ unit;           // f * pi^{-ord}
    NFSeries unit_at_point;  // its value at the lifted root of pi
};

// Decompose f = pi^a u at the point; NotGood when u fails to be a local unit
// (some t-coefficient of u has a pole, or the reduction value vanishes).
inline OrdUnit ord_unit(const RatFuncQ& f, const PointContext& ctx) {
    require(f.is_unit(), errc::not_good, "function is not a unit at the generic point");
    long a = ctx.reduction_order(f);
    RatFuncQ u = f * ctx.uniformizer().pow(-a);
    auto val = ctx.eval_at_root(u);  // throws NotGood on a pole
    require(val.is_unit(), errc::not_good, "unit part vanishes at the point");
    return {a, std::move(u), std::move(val)};
}

inline OrdUnit ord_unit(const RatFuncQ& f, const ClosedPoint& c, const UniformizerSystem& sys) {
    PointContext ctx(c, sys, f.precision());
    return ord_unit(f, ctx);
}

// res_{pi_c}(f ^ g ^ h) in Lambda^2 (k'_N)^x
inline Wedge2<NFSeries> triple_residue(const RatFuncQ& f, const RatFuncQ& g, const RatFuncQ& h,
                                       const PointContext& ctx) {
    auto F = ord_unit(f, ctx);
    auto G = ord_unit(g, ctx);
    auto H = ord_unit(h, ctx);
    Wedge2<NFSeries> w;
    w.add(Rat(F.ord), G.unit_at_point, H.unit_at_point);
    w.add(Rat(-G.ord), F.unit_at_point, H.unit_at_point);
    w.add(Rat(H.ord), F.unit_at_point, G.unit_at_point);
    return w;
}

inline Wedge2<NFSeries> triple_residue(const RatFuncQ& f, const RatFuncQ& g, const RatFuncQ& h,
                                       const ClosedPoint& c, const UniformizerSystem& sys) {
    PointContext ctx(c, sys, f.precision());
    return triple_residue(f, g, h, ctx);
}

// support of the triple: all points where some reduction has a zero or pole
inline std::vector<ClosedPoint> joint_support(const std::vector<RatFuncQ>& fs) {
    std::set<ClosedPoint> pts;
    bool at_inf = false;
    for (const auto& f : fs) {
        auto num = RatFuncQ::reduction_poly(f.num());
        auto den = RatFuncQ::reduction_poly(f.den());
        require(!num.empty(), errc::non_unit, "support of a non-unit");
        for (auto& [irr, mult] : factor_q(num)) {
            (void)mult;
            pts.insert(ClosedPoint::finite(irr));
        }
        for (auto& [irr, mult] : factor_q(den)) {
            (void)mult;
            pts.insert(ClosedPoint::finite(irr));
        }
        if (poly_deg<Rationals>(num) != poly_deg<Rationals>(den)) at_inf = true;
    }
    std::vector<ClosedPoint> out(pts.begin(), pts.end());
    if (at_inf) out.push_back(ClosedPoint::infinity());
    return out;
}

namespace detail {
// default uniformizer, or probe the inputs for one that makes them all good
inline PointContext make_point_context(const ClosedPoint& c, const UniformizerSystem& sys,
                                       const std::vector<RatFuncQ>& fs, int N) {
    auto try_ctx = [&](const UniformizerSystem& s) -> std::optional<PointContext> {
        PointContext ctx(c, s, N);
        for (const auto& f : fs) {
            try {
                ord_unit(f, ctx);
            } catch (const calc_error&) {
                return std::nullopt;
            }
        }
        return ctx;
    };
    if (!sys.auto_adapt || sys.overrides.count(c)) {
        PointContext ctx(c, sys, N);
        return ctx;
    }
    if (auto ctx = try_ctx(sys)) return *ctx;
    // candidates: the input functions (or inverses) with reduction order +-1
    for (const auto& f : fs) {
        PointContext probe(c, UniformizerSystem::defaults(), N);
        long a = probe.reduction_order(f);
        if (a != 1 && a != -1) continue;
        UniformizerSystem adapted = sys;
        adapted.set(c, a == 1 ? f : f.inverse());
        try {
            if (auto ctx = try_ctx(adapted)) return *ctx;
        } catch (const calc_error&) {
        }
    }
    fail(errc::not_good, "no adapted uniformizer found at " + c.str());
}
} // namespace detail

// rho(f, g, h) = sum_c Tr_k ell(res_c(f ^ g ^ h)), ell = ell_2 ^ ell_1
inline Rat chow_rho(const RatFuncQ& f, const RatFuncQ& g, const RatFuncQ& h,
                    const UniformizerSystem& sys = UniformizerSystem::defaults()) {
    int N = f.precision();
    require(N >= 3, errc::precision_too_low, "chow_rho needs N >= 3 for ell_2 ^ ell_1");
    std::vector<RatFuncQ> fs{f, g, h};
    Rat total(0);
    for (const auto& c : joint_support(fs)) {
        auto ctx = detail::make_point_context(c, sys, fs, N);
        auto res = triple_residue(f, g, h, ctx);
        auto val = wedge_eval(ctx.residue(), 2, 1, res);
        total += ctx.residue().trace(val);
    }
    return Rat(chow_sign) * total;
}

// ---------------------------------------------------------------------------
// Omega: the lifting-defect 1-form (trivialized single-chart models)
// ---------------------------------------------------------------------------

// both triples decompose as alpha_0 e^{t alpha_1 + t^2 alpha_2 + ...} with
// shared alpha_0, alpha_1; returns the alternating sum as a form over Q(z).
inline Differential<QxField> omega_defect(const QxField& kz, const std::array<RatFuncQ, 3>& qt,
                                          const std::array<RatFuncQ, 3>& qh) {
    std::array<QxField::Elem, 3> a0, a1, d2;  // d2 = alpha2(qt) - alpha2(qh)
    for (int i = 0; i < 3; ++i) {
        auto st = qt[i].to_t_series(kz);
        auto sh = qh[i].to_t_series(kz);
        require(st.modulus() >= 3, errc::precision_too_low, "omega needs precision >= 3");
        require(kz.eq(st.coeff(0), sh.coeff(0)) && kz.eq(st.coeff(1), sh.coeff(1)),
                errc::mod_two_mismatch, "triples must agree mod t^2");
        auto lt = log_circ(st);
        auto lh = log_circ(sh);
        a0[i] = st.coeff(0);
        a1[i] = lt.coeff(1);
        d2[i] = kz.sub(lt.coeff(2), lh.coeff(2));
    }
    // sum over S_3 of sign * a1[s(0)] * d2[s(2)] * dlog(a0[s(1)])
    static constexpr int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                                        {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
    static constexpr int sgn[6] = {1, 1, 1, -1, -1, -1};
    auto acc = kz.zero();
    for (int s = 0; s < 6; ++s) {
        auto coef = kz.mul(a1[perms[s][0]], d2[perms[s][2]]);
        auto dl = kz.div(kz.derive(a0[perms[s][1]]), a0[perms[s][1]]);
        auto term = kz.mul(coef, dl);
        acc = sgn[s] > 0 ? kz.add(acc, term) : kz.sub(acc, term);
    }
    return Differential<QxField>(Series<QxField>::constant(kz, acc, 1), Series<QxField>(kz, 1));
}

// ---------------------------------------------------------------------------
// residues of rational 1-forms over Q(z)
// ---------------------------------------------------------------------------

// res_c(omega) for omega = w dz; exact, with the infinity chart handled by
// z = 1/zeta, dz = -dzeta/zeta^2.
inline NumberField::Elem residue_1form(const QxField& kz, const QxField::Elem& w,
                                       const ClosedPoint& c) {
    // reuse the series machinery at N = 1 (t-free)
    Rationals Q;
    auto lift = [&](const Poly<Rationals>& p) {
        SPoly out;
        for (auto& co : p) out.push_back(QSeries::constant(Q, co, 1));
        if (out.empty()) out.push_back(QSeries(Q, 1));
        return out;
    };
    RatFuncQ f(lift(w.num), lift(w.den));
    PointContext ctx(c, UniformizerSystem::defaults(), 1);
    long bound = static_cast<long>(w.den.size()) + 3;
    if (!c.at_infinity) {
        auto L = ctx.expand(f, -static_cast<int>(bound), 0);
        return L.coeff(-1, ctx.residue(), 1).constant_term();
    }
    // in-chart form: w(1/zeta) * (-1/zeta^2) dzeta
    auto L = ctx.expand(f, -static_cast<int>(bound) - 2, 2);
    // residue = coefficient of zeta^{-1} of -w(1/zeta)/zeta^2 = -coeff_{+1}(w(1/zeta))
    return ctx.residue().neg(L.coeff(1, ctx.residue(), 1).constant_term());
}

// all finite poles of the form plus infinity
inline std::vector<ClosedPoint> form_support(const QxField::Elem& w) {
    std::vector<ClosedPoint> pts;
    for (auto& [irr, mult] : factor_q(w.den)) {
        (void)mult;
        pts.push_back(ClosedPoint::finite(irr));
    }
    pts.push_back(ClosedPoint::infinity());
    return pts;
}

// ---------------------------------------------------------------------------
// corrected rho: local lifts plus the Omega correction
// ---------------------------------------------------------------------------

struct LocalLifts {
    std::map<ClosedPoint, std::array<RatFuncQ, 3>> at;
};

// rho(p) = sum_c Tr( ell(res_c(q_c)) + res_c Omega(p~, q_c) ); independent of
// the choice of good local lifts agreeing with p~ mod t^2.
inline Rat corrected_rho(const std::array<RatFuncQ, 3>& p, const LocalLifts& locals,
                         const UniformizerSystem& sys = UniformizerSystem::defaults()) {
    int N = p[0].precision();
    require(N >= 3, errc::precision_too_low, "corrected_rho needs N >= 3");
    QxField kz(Rationals{}, "z");
    std::vector<RatFuncQ> fs{p[0], p[1], p[2]};
    std::set<ClosedPoint> pts;
    for (auto& c : joint_support(fs)) pts.insert(c);
    for (auto& [c, q] : locals.at) pts.insert(c);
    Rat total(0);
    for (const auto& c : pts) {
        auto it = locals.at.find(c);
        const std::array<RatFuncQ, 3>& q = it == locals.at.end() ? p : it->second;
        std::vector<RatFuncQ> qs{q[0], q[1], q[2]};
        auto ctx = detail::make_point_context(c, sys, qs, N);
        auto res = triple_residue(q[0], q[1], q[2], ctx);
        total += ctx.residue().trace(wedge_eval(ctx.residue(), 2, 1, res));
        if (it != locals.at.end()) {
            auto omega = omega_defect(kz, p, q);
            total += ctx.residue().trace(residue_1form(kz, omega.dx().coeff(0), c));
        }
    }
    return Rat(chow_sign) * total;
}

// ---------------------------------------------------------------------------
// B_2 residue of [f] (x) g at a point: ord_c(g) [f(c)] over k'_2
// ---------------------------------------------------------------------------

inline FormalSum<NFSeries> b2_residue(const RatFuncQ& f, const RatFuncQ& g, const ClosedPoint& c,
                                      const UniformizerSystem& sys = UniformizerSystem::defaults()) {
    PointContext ctx(c, sys, f.precision());
    long ord_g = ctx.reduction_order(g);
    FormalSum<NFSeries> out;
    if (ord_g == 0) return out;
    require(ctx.reduction_order(f) == 0, errc::not_generic, "f must be a unit at the point");
    auto val = ctx.eval_at_root(f);
    auto v2 = val.truncated(2);
    require(v2.is_flat(), errc::not_generic, "f(c) must be flat in k'_2");
    out.add(Rat(ord_g), v2);
    return out;
}

} // namespace adilog
