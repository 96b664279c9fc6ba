#pragma once

// The infinitesimal invariant rho_f = l o boundary of parametrized admissible
// cycles in the 3-cube over S = Spec Q[[t]] with finite reduction.  Cycles are
// images of z -> (y_1, y_2, y_3) with y_i rational over Q[t]/(t^N); boundary
// points come from Newton-lifted simple roots of the coordinate numerators
// (0-faces) and denominators (infinity-faces), including the z = infinity
// chart.  Cubical signs: boundary = sum_i (-1)^{i-1} (d_i^0 - d_i^infty);
// the choice only moves rho_f by a global sign.

#include "../chow/ratfunc.hpp"

namespace adilog {

struct BoundaryPoint {
    int face;            // 1..3
    bool zero_face;      // numerator root (y_i = 0) vs denominator root (y_i = inf)
    int sign;            // (-1)^{face-1} * (zero_face ? +1 : -1)
    bool at_infinity;    // parameter point in the 1/z chart
    NumberField kp;      // residue field of the parameter root
    PolyQ root_minpoly;  // minimal polynomial of the reduced root (in-chart)
    NFSeries root;       // Newton-lifted root
    std::array<NFSeries, 2> w;  // remaining coordinates at the root, in index order
};

class ParamCycle {
public:
    ParamCycle(RatFuncQ y1, RatFuncQ y2, RatFuncQ y3) : y_{std::move(y1), std::move(y2), std::move(y3)} {
        for (const auto& y : y_) {
            require(y.precision() == y_[0].precision(), errc::modulus_mismatch,
                    "coordinates must share one precision");
            require(!(y == y.one_val()), errc::not_admissible,
                    "coordinate identically 1 leaves the cube");
            require(y.is_unit(), errc::not_admissible, "coordinate vanishes identically mod t");
        }
    }
    int precision() const { return y_[0].precision(); }
    const std::array<RatFuncQ, 3>& coords() const { return y_; }

private:
    std::array<RatFuncQ, 3> y_;
};

namespace detail {

inline std::vector<NFSeries> embed_spoly(const NumberField& kp, const SPoly& p, int N) {
    std::vector<NFSeries> out;
    for (const auto& cs : p) {
        NFSeries s(kp, N);
        for (int i = 0; i < N; ++i) s.coeff_mut(i) = kp.from_rat(cs.coeff(i));
        out.push_back(std::move(s));
    }
    return out;
}

// boundary points contributed by the roots of one polynomial slot
inline void face_points(const ParamCycle& Z, int face, bool zero_face, bool at_infinity,
                        std::vector<BoundaryPoint>& out) {
    int N = Z.precision();
    const auto& y = Z.coords()[face - 1];
    RatFuncQ chart_y = at_infinity ? y.infinity_chart() : y;
    const SPoly& slot = zero_face ? chart_y.num() : chart_y.den();
    PolyQ red = RatFuncQ::reduction_poly(slot);
    require(!red.empty(), errc::not_admissible, "coordinate degenerates mod t");
    for (auto& [irr, mult] : factor_q(red)) {
        if (at_infinity) {
            // in the chart we only own the point zeta = 0; other roots of the
            // reversed polynomial are finite points seen in the main chart
            if (!(poly_deg<Rationals>(irr) == 1 && irr[0] == 0)) continue;
        }
        require(mult == 1, errc::not_transverse,
                "face root is not simple: " + poly_to_string(Rationals{}, irr, "z"));
        NumberField kp(irr, "\xce\xb8");  // irreducible by construction
        auto froot = newton_lift_root(embed_spoly(kp, slot, N), kp.gen());
        BoundaryPoint bp{face,
                         zero_face,
                         (face % 2 == 1 ? 1 : -1) * (zero_face ? 1 : -1),
                         at_infinity,
                         kp,
                         irr,
                         froot,
                         {NFSeries(kp, N), NFSeries(kp, N)}};
        int slot_idx = 0;
        for (int j = 1; j <= 3; ++j) {
            if (j == face) continue;
            const auto& yj = Z.coords()[j - 1];
            RatFuncQ cy = at_infinity ? yj.infinity_chart() : yj;
            auto numv = series_poly_eval(embed_spoly(kp, cy.num(), N), froot);
            auto denv = series_poly_eval(embed_spoly(kp, cy.den(), N), froot);
            require(denv.is_unit(), errc::not_admissible,
                    "remaining coordinate hits infinity at a boundary point");
            auto val = numv * denv.inverse();
            require(val.is_unit(), errc::not_admissible,
                    "remaining coordinate hits 0 at a boundary point");
            require(!kp.eq(val.constant_term(), kp.one()), errc::not_admissible,
                    "remaining coordinate hits 1 at a boundary point");
            bp.w[slot_idx++] = std::move(val);
        }
        out.push_back(std::move(bp));
    }
}

} // namespace detail

// the cubical boundary, as the list of (signed) boundary points with their
// Newton-lifted root data; admissibility and finite reduction are enforced
inline std::vector<BoundaryPoint> boundary(const ParamCycle& Z) {
    std::vector<BoundaryPoint> pts;
    for (int face = 1; face <= 3; ++face) {
        detail::face_points(Z, face, true, false, pts);
        detail::face_points(Z, face, false, false, pts);
        detail::face_points(Z, face, true, true, pts);
        detail::face_points(Z, face, false, true, pts);
    }
    return pts;
}

// l(p) = sum Tr_k of the t^2-coefficient of
//        log_circ(w_1) dlog(w_2) - log_circ(w_2) dlog(w_1)
// (the residue of the 1/t^3-scaled form along the branch, t the uniformizer)
inline Rat l_invariant(const std::vector<BoundaryPoint>& pts, int global_sign = 1) {
    Rat total(0);
    for (const auto& bp : pts) {
        require(bp.w[0].modulus() >= 6, errc::precision_too_low, "l_invariant needs N >= 6");
        const auto& kp = bp.kp;
        auto form = log_circ(bp.w[0]) * (bp.w[1].derivative() * bp.w[1].inverse()) -
                    log_circ(bp.w[1]) * (bp.w[0].derivative() * bp.w[0].inverse());
        total += Rat(bp.sign * global_sign) * kp.trace(form.coeff(2));
    }
    return total;
}

inline Rat rho_f(const ParamCycle& Z, int global_sign = 1) {
    require(Z.precision() >= 6, errc::precision_too_low, "rho_f needs N >= 6");
    return l_invariant(boundary(Z), global_sign);
}

} // namespace adilog
