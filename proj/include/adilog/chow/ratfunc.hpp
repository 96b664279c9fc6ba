#pragma once

// Rational functions on P^1 over Q[t]/(t^N) (the local ring k(C_2) of the
// curve at its generic point, for C_2 = P^1), closed points of the reduced
// curve, uniformizer systems, and exact Laurent expansion at a point with
// values in k'_N = (residue field)[t]/(t^N).  The expansion handles nilpotent
// low-order coefficients, which is exactly where goodness can fail.

#include <map>
#include <optional>

#include "../core/factorqz.hpp"
#include "../core/series.hpp"

namespace adilog {

using QSeries = Series<Rationals>;
using NFSeries = Series<NumberField>;
using SPoly = std::vector<QSeries>;  // polynomial in z over Q[t]/(t^N)

// ---------------------------------------------------------------------------
// RatFuncQ
// ---------------------------------------------------------------------------

class RatFuncQ {
public:
    RatFuncQ() = default;
    RatFuncQ(SPoly num, SPoly den) : num_(std::move(num)), den_(std::move(den)) {
        trim(num_);
        trim(den_);
        require(!den_.empty(), errc::zero_element, "zero denominator");
        require(!reduction_poly(den_).empty(), errc::non_unit,
                "denominator reduction vanishes mod t");
        normalize_reduction();
    }

    static RatFuncQ from_poly(SPoly p) {
        require(!p.empty(), errc::zero_element, "empty polynomial; use zero(N)");
        SPoly one{QSeries::constant(Rationals{}, Rat(1), p[0].modulus())};
        return RatFuncQ(std::move(p), std::move(one));
    }
    static RatFuncQ constant(const QSeries& c) { return from_poly({c}); }
    static RatFuncQ constant(const Rat& c, int N) {
        return constant(QSeries::constant(Rationals{}, c, N));
    }
    static RatFuncQ gen(int N) {  // z
        Rationals Q;
        return from_poly({QSeries(Q, N), QSeries::constant(Q, Rat(1), N)});
    }
    static RatFuncQ zero(int N) {
        Rationals Q;
        return RatFuncQ({QSeries(Q, N)}, {QSeries::constant(Q, Rat(1), N)});
    }

    int precision() const { return den_[0].modulus(); }
    const SPoly& num() const { return num_; }
    const SPoly& den() const { return den_; }
    bool is_zero() const { return num_.empty(); }
    // unit of the artin local ring at the generic point: reduction nonzero
    bool is_unit() const { return !reduction_poly(num_).empty(); }
    bool is_flat() const { return is_unit() && (one_val() - *this).is_unit(); }

    RatFuncQ operator+(const RatFuncQ& o) const {
        return RatFuncQ(sp_add(sp_mul(num_, o.den_), sp_mul(o.num_, den_)), sp_mul(den_, o.den_));
    }
    RatFuncQ operator-(const RatFuncQ& o) const { return *this + (-o); }
    RatFuncQ operator-() const {
        RatFuncQ r = *this;
        for (auto& c : r.num_) c = -c;
        return r;
    }
    RatFuncQ operator*(const RatFuncQ& o) const {
        return RatFuncQ(sp_mul(num_, o.num_), sp_mul(den_, o.den_));
    }
    RatFuncQ inverse() const {
        require(is_unit(), errc::non_unit, "inverse of a non-unit rational function");
        return RatFuncQ(den_, num_);
    }
    RatFuncQ operator/(const RatFuncQ& o) const { return *this * o.inverse(); }
    RatFuncQ pow(long e) const {
        RatFuncQ base = e >= 0 ? *this : inverse();
        unsigned long n = static_cast<unsigned long>(e >= 0 ? e : -e);
        RatFuncQ acc = one_val();
        while (n) {
            if (n & 1) acc = acc * base;
            base = base * base;
            n >>= 1;
        }
        return acc;
    }
    bool operator==(const RatFuncQ& o) const {
        // cross-multiplied equality (representations are not unique)
        auto lhs = sp_mul(num_, o.den_);
        auto rhs = sp_mul(o.num_, den_);
        if (lhs.size() != rhs.size()) return false;
        for (size_t i = 0; i < lhs.size(); ++i)
            if (!(lhs[i] == rhs[i])) return false;
        return true;
    }

    RatFuncQ one_val() const { return constant(Rat(1), precision()); }

    // reduced fraction mod t, canonically normalized over Q(z)
    QxField::Elem reduction(const QxField& kz) const {
        return kz.from_fraction(reduction_poly(num_), reduction_poly(den_));
    }

    // t-adic expansion with Q(z) coefficients (denominator reduction is a unit)
    Series<QxField> to_t_series(const QxField& kz) const {
        int N = precision();
        auto conv = [&](const SPoly& p) {
            Series<QxField> s(kz, N);
            for (int i = 0; i < N; ++i) {
                Poly<Rationals> ci(p.size());
                for (size_t j = 0; j < p.size(); ++j) ci[j] = p[j].coeff(i);
                poly_trim(Rationals{}, ci);
                s.coeff_mut(i) = kz.from_poly(std::move(ci));
            }
            return s;
        };
        return conv(num_) * conv(den_).inverse();
    }

    // substitute z -> 1/zeta and clear powers: the infinity chart
    RatFuncQ infinity_chart() const {
        long dn = static_cast<long>(num_.size()) - 1;
        long dd = static_cast<long>(den_.size()) - 1;
        SPoly rn(num_.rbegin(), num_.rend());
        SPoly rd(den_.rbegin(), den_.rend());
        Rationals Q;
        QSeries z0(Q, precision());
        if (dd > dn)
            for (long i = 0; i < dd - dn; ++i) rn.insert(rn.begin(), z0);
        if (dn > dd)
            for (long i = 0; i < dn - dd; ++i) rd.insert(rd.begin(), z0);
        return RatFuncQ(std::move(rn), std::move(rd));
    }

    // d/dz, coefficientwise in t
    RatFuncQ derivative_z() const {
        auto d = [&](const SPoly& p) {
            SPoly r;
            for (size_t i = 1; i < p.size(); ++i)
                r.push_back(p[i].scalar_mul(Rat(static_cast<long>(i))));
            return r;
        };
        auto n = sp_sub(sp_mul(d(num_), den_), sp_mul(num_, d(den_)));
        if (n.empty()) return zero(precision());
        return RatFuncQ(std::move(n), sp_mul(den_, den_));
    }

    static PolyQ reduction_poly(const SPoly& p) {
        PolyQ r(p.size());
        for (size_t i = 0; i < p.size(); ++i) r[i] = p[i].constant_term();
        poly_trim(Rationals{}, r);
        return r;
    }

    static SPoly sp_mul(const SPoly& a, const SPoly& b) {
        if (a.empty() || b.empty()) return {};
        SPoly r(a.size() + b.size() - 1, QSeries(Rationals{}, a[0].modulus()));
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
        trim(r);
        return r;
    }
    static SPoly sp_add(const SPoly& a, const SPoly& b) {
        if (a.empty()) return b;
        if (b.empty()) return a;
        SPoly r(std::max(a.size(), b.size()), QSeries(Rationals{}, a[0].modulus()));
        for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
        for (size_t i = 0; i < b.size(); ++i) r[i] = r[i] + b[i];
        trim(r);
        return r;
    }
    static SPoly sp_sub(const SPoly& a, SPoly b) {
        for (auto& c : b) c = -c;
        return sp_add(a, b);
    }

private:
    SPoly num_, den_;

    static void trim(SPoly& p) {
        while (!p.empty() && p.back().is_zero()) p.pop_back();
    }
    void normalize_reduction() {
        // cancel common irreducible factors of the reductions when the lift
        // divides exactly (cheap representation hygiene; all consumers work
        // through reduction()/laurent expansions either way)
    }
};

inline RatFuncQ one_like(const RatFuncQ& x) { return x.one_val(); }

// ---------------------------------------------------------------------------
// closed points and uniformizer systems
// ---------------------------------------------------------------------------

struct ClosedPoint {
    bool at_infinity = false;
    PolyQ minpoly;  // monic irreducible; ignored at infinity

    static ClosedPoint infinity() { return {true, {}}; }
    static ClosedPoint finite(PolyQ m) { return {false, std::move(m)}; }
    static ClosedPoint rational(const Rat& r0) { return finite({-r0, Rat(1)}); }

    long degree() const { return at_infinity ? 1 : poly_deg<Rationals>(minpoly); }
    friend bool operator<(const ClosedPoint& a, const ClosedPoint& b) {
        if (a.at_infinity != b.at_infinity) return !a.at_infinity;  // infinity sorts last
        if (a.minpoly.size() != b.minpoly.size()) return a.minpoly.size() < b.minpoly.size();
        return a.minpoly < b.minpoly;
    }
    friend bool operator==(const ClosedPoint& a, const ClosedPoint& b) {
        return a.at_infinity == b.at_infinity && a.minpoly == b.minpoly;
    }
    std::string str() const {
        if (at_infinity) return "infinity";
        return poly_to_string(Rationals{}, minpoly, "z") + " = 0";
    }
};

// residue field k' of a closed point (degree-1 fields included for uniformity)
inline NumberField residue_field(const ClosedPoint& c) {
    if (c.at_infinity) return NumberField({Rat(0), Rat(1)}, "\xce\xb6");
    return NumberField(c.minpoly, "\xce\xb8");
}

struct UniformizerSystem {
    std::map<ClosedPoint, RatFuncQ> overrides;
    bool auto_adapt = false;  // probe the input functions for usable uniformizers

    static UniformizerSystem defaults() { return {}; }
    static UniformizerSystem adaptive() {
        UniformizerSystem s;
        s.auto_adapt = true;
        return s;
    }
    void set(const ClosedPoint& c, RatFuncQ pi) { overrides.insert_or_assign(c, std::move(pi)); }

    RatFuncQ uniformizer(const ClosedPoint& c, int N) const {
        auto it = overrides.find(c);
        if (it != overrides.end()) return it->second;
        Rationals Q;
        if (c.at_infinity) {
            // 1/z
            SPoly one{QSeries::constant(Q, Rat(1), N)};
            SPoly z{QSeries(Q, N), QSeries::constant(Q, Rat(1), N)};
            return RatFuncQ(one, z);
        }
        SPoly m;
        for (auto& co : c.minpoly) m.push_back(QSeries::constant(Q, co, N));
        return RatFuncQ::from_poly(std::move(m));
    }
};

// ---------------------------------------------------------------------------
// Laurent expansion at a point
// ---------------------------------------------------------------------------

struct NFLaurent {
    int lo = 0;
    std::vector<NFSeries> c;  // sum c[i] lam^{lo+i}

    const NumberField& field() const { return c.at(0).field(); }
    NFSeries coeff(int e, const NumberField& k, int N) const {
        int idx = e - lo;
        if (idx < 0 || idx >= static_cast<int>(c.size())) return NFSeries(k, N);
        return c[idx];
    }
    int hi() const { return lo + static_cast<int>(c.size()) - 1; }
    bool has_negative_part() const {
        for (int i = 0; i < static_cast<int>(c.size()); ++i)
            if (lo + i < 0 && !c[i].is_zero()) return true;
        return false;
    }
};

// Expansion context at one closed point: the chart, the residue field, a
// chosen uniformizer and its Newton-lifted root.
class PointContext {
public:
    PointContext(const ClosedPoint& c, const UniformizerSystem& sys, int N)
        : point_(c), kp_(residue_field(c)), N_(N) {
        pi_ = sys.uniformizer(c, N);
        RatFuncQ chart_pi = c.at_infinity ? pi_.infinity_chart() : pi_;
        // uniformizer sanity: numerator reduction has a simple root at the
        // point, denominator reduction is a unit there
        auto num_red = RatFuncQ::reduction_poly(chart_pi.num());
        auto den_red = RatFuncQ::reduction_poly(chart_pi.den());
        require(point_multiplicity(num_red) == 1 && point_multiplicity(den_red) == 0,
                errc::not_good, "chosen uniformizer does not reduce to a local uniformizer");
        // Newton-lift the root of the numerator from theta
        auto f = embed_poly(chart_pi.num());
        root_ = newton_lift_root(f, theta());
        pi_laurent_ = expand_raw(chart_pi, -(N_ + 2), 3);
    }

    const ClosedPoint& point() const { return point_; }
    const NumberField& residue() const { return kp_; }
    const RatFuncQ& uniformizer() const { return pi_; }
    const NFSeries& lifted_root() const { return root_; }
    int precision() const { return N_; }

    NumberField::Elem theta() const {
        return point_.at_infinity ? kp_.zero() : kp_.gen();
    }

    // multiplicity of the point in a reduced Q-polynomial (in-chart)
    long point_multiplicity(PolyQ f) const {
        Rationals Q;
        if (f.empty()) fail(errc::non_unit, "zero reduction has no order");
        long mult = 0;
        if (point_.at_infinity) {
            // in-chart polynomials: multiplicity of zeta = 0
            while (!f.empty() && f.front() == 0) {
                ++mult;
                f.erase(f.begin());
            }
            return mult;
        }
        for (;;) {
            auto [q, r] = poly_divmod(Q, f, point_.minpoly);
            if (!r.empty()) return mult;
            ++mult;
            f = q;
            if (f.empty()) fail(errc::internal, "vanishing polynomial");
        }
    }

    // order of the reduction of f at the point (zeros positive)
    long reduction_order(const RatFuncQ& f) const {
        RatFuncQ g = point_.at_infinity ? f.infinity_chart() : f;
        require(f.is_unit(), errc::non_unit, "order of a non-unit");
        return point_multiplicity(RatFuncQ::reduction_poly(g.num())) -
               point_multiplicity(RatFuncQ::reduction_poly(g.den()));
    }

    std::vector<NFSeries> embed_poly(const SPoly& p) const {
        std::vector<NFSeries> out;
        for (const auto& cs : p) {
            NFSeries s(kp_, N_);
            for (int i = 0; i < N_; ++i) s.coeff_mut(i) = kp_.from_rat(cs.coeff(i));
            out.push_back(std::move(s));
        }
        return out;
    }

    // Laurent expansion of f in powers of lam = (chart coordinate) - root
    NFLaurent expand(const RatFuncQ& f, int lo, int hi) const {
        RatFuncQ g = point_.at_infinity ? f.infinity_chart() : f;
        return expand_raw(g, lo, hi);
    }

    // value of f at the lifted root (requires regularity there)
    NFSeries eval_at_root(const RatFuncQ& f) const {
        auto L = expand(f, -(N_ + 2) * max_pole_bound(f), 0);
        require(!L.has_negative_part(), errc::not_good, "function has a pole at the point");
        return L.coeff(0, kp_, N_);
    }

    long max_pole_bound(const RatFuncQ& f) const {
        return static_cast<long>(f.den().size()) + 2;
    }

    NFLaurent expand_raw(const RatFuncQ& g, int lo, int hi) const {
        auto nump = taylor_shift(embed_poly(g.num()));
        auto denp = taylor_shift(embed_poly(g.den()));
        auto inv = laurent_invert(denp, lo - static_cast<int>(nump.size()) - 1, hi);
        return laurent_mul_poly(inv, nump, lo, hi);
    }

private:
    ClosedPoint point_;
    NumberField kp_;
    int N_;
    RatFuncQ pi_;
    NFSeries root_{};
    NFLaurent pi_laurent_{};

public:
    const NFLaurent& uniformizer_laurent() const { return pi_laurent_; }

private:
    // coefficients of P(root + lam) as a polynomial in lam
    std::vector<NFSeries> taylor_shift(std::vector<NFSeries> p) const {
        if (p.empty()) return p;
        long d = static_cast<long>(p.size()) - 1;
        for (long i = 0; i <= d; ++i)
            for (long j = d - 1; j >= i; --j) p[j] = p[j] + p[j + 1] * root_;
        return p;
    }

    NFLaurent window_mul(const NFLaurent& A, const NFLaurent& B, int wlo, int whi) const {
        NFLaurent R;
        R.lo = wlo;
        R.c.assign(whi - wlo + 1, NFSeries(kp_, N_));
        for (int i = 0; i < static_cast<int>(A.c.size()); ++i) {
            if (A.c[i].is_zero()) continue;
            for (int j = 0; j < static_cast<int>(B.c.size()); ++j) {
                int e = A.lo + i + B.lo + j;
                if (e < wlo || e > whi) continue;
                R.c[e - wlo] = R.c[e - wlo] + A.c[i] * B.c[j];
            }
        }
        return R;
    }

    // 1/V as a Laurent series on the window [lo, hi]; V a lam-polynomial over
    // k'_N whose reduction mod t is nonzero.  Split V = lam^v (U + W lam^{-v})
    // with U a unit power series and W the low nilpotent part; the geometric
    // series terminates by t-nilpotency.  Window bounds: powers of the
    // correction term only move exponents by at most 2v per factor, so a
    // margin of 2v(N+1) on both sides makes the target range exact.
    NFLaurent laurent_invert(const std::vector<NFSeries>& V, int lo, int hi) const {
        int v = -1;
        for (size_t j = 0; j < V.size(); ++j) {
            if (!kp_.is_zero(V[j].constant_term())) {
                v = static_cast<int>(j);
                break;
            }
        }
        require(v >= 0, errc::non_unit, "denominator reduction vanishes identically");
        int margin = 2 * v * (N_ + 1) + 2;
        int WLO = lo - margin, WHI = hi + margin;
        int terms = WHI + v + 1;  // power-series length for U^{-1} (exponents -v .. WHI)
        if (terms < 1) terms = 1;
        std::vector<NFSeries> U(terms, NFSeries(kp_, N_));
        for (int j = 0; j < terms; ++j)
            if (v + j < static_cast<int>(V.size())) U[j] = V[v + j];
        std::vector<NFSeries> Uinv(terms, NFSeries(kp_, N_));
        auto u0inv = U[0].inverse();
        Uinv[0] = u0inv;
        for (int i = 1; i < terms; ++i) {
            NFSeries s(kp_, N_);
            for (int j = 1; j <= i && j < static_cast<int>(V.size()); ++j) s = s + U[j] * Uinv[i - j];
            Uinv[i] = -(s * u0inv);
        }
        NFLaurent uinv_l;  // lam^{-v} U^{-1}
        uinv_l.lo = -v;
        uinv_l.c = std::move(Uinv);
        if (v == 0) {
            NFLaurent res;
            res.lo = lo;
            res.c.assign(hi - lo + 1, NFSeries(kp_, N_));
            for (int e = lo; e <= hi; ++e) res.c[e - lo] = uinv_l.coeff(e, kp_, N_);
            return res;
        }
        NFLaurent w_l;  // W: exponents j - v for j < v, all coefficients nilpotent
        w_l.lo = -v;
        w_l.c.assign(v, NFSeries(kp_, N_));
        for (int j = 0; j < v; ++j) w_l.c[j] = V[j];
        auto wp = window_mul(w_l, uinv_l, WLO, WHI);  // exponents >= -2v
        NFLaurent total;  // sum_k (-wp)^k, starting from 1
        total.lo = 0;
        total.c = {NFSeries::constant(kp_, kp_.one(), N_)};
        NFLaurent pw = total;
        for (int kk = 1; kk < N_; ++kk) {
            pw = window_mul(pw, wp, WLO, WHI);
            for (auto& cc : pw.c) cc = -cc;
            NFLaurent merged;
            merged.lo = std::min(total.lo, pw.lo);
            int mhi = std::max(total.hi(), pw.hi());
            merged.c.assign(mhi - merged.lo + 1, NFSeries(kp_, N_));
            for (int i = 0; i < static_cast<int>(total.c.size()); ++i)
                merged.c[total.lo + i - merged.lo] = merged.c[total.lo + i - merged.lo] + total.c[i];
            for (int i = 0; i < static_cast<int>(pw.c.size()); ++i)
                merged.c[pw.lo + i - merged.lo] = merged.c[pw.lo + i - merged.lo] + pw.c[i];
            total = std::move(merged);
        }
        return window_mul(total, uinv_l, lo, hi);
    }

    NFLaurent laurent_mul_poly(const NFLaurent& L, const std::vector<NFSeries>& P, int lo,
                               int hi) const {
        NFLaurent R;
        R.lo = lo;
        R.c.assign(hi - lo + 1, NFSeries(kp_, N_));
        for (int i = 0; i < static_cast<int>(L.c.size()); ++i) {
            if (L.c[i].is_zero()) continue;
            for (int j = 0; j < static_cast<int>(P.size()); ++j) {
                int e = L.lo + i + j;
                if (e < lo || e > hi) continue;
                R.c[e - lo] = R.c[e - lo] + L.c[i] * P[j];
            }
        }
        return R;
    }
};

} // namespace adilog
