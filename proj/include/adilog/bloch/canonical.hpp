#pragma once

// Canonical sparse coordinates for Lambda^2 A^x (x) Q, A = K[t]/(t^m) with
// K = Q or Q(z).  A unit x is coordinatized by the prime/irreducible exponents
// of x(0) (sign dropped: torsion dies after (x) Q) together with the m-1
// coefficients of log_circ(x), the latter expanded over the partial-fraction
// Q-basis of K.  The resulting antisymmetric matrix is a complete invariant.

#include <functional>
#include <map>
#include <random>

#include "../core/factorqz.hpp"
#include "wedge.hpp"

namespace adilog {

// ---------------------------------------------------------------------------
// factor_unit
// ---------------------------------------------------------------------------

struct UnitFactorization {
    int sign = 1;
    std::map<Int, long> primes;                      // rational prime -> exponent
    std::vector<std::pair<PolyQ, long>> irreducibles;  // monic irreducible -> exponent
};

inline UnitFactorization factor_unit(const Rationals&, const Rat& x) {
    require(x != 0, errc::zero_element, "factor_unit(0)");
    UnitFactorization f;
    f.primes = factor_rat(x, &f.sign);
    return f;
}

inline UnitFactorization factor_unit(const QxField& k, const QxField::Elem& x) {
    require(!k.is_zero(x), errc::zero_element, "factor_unit(0)");
    UnitFactorization f;
    Rat lead = x.num.back();  // den is monic
    if (lead != 0) f.primes = factor_rat(lead, &f.sign);
    for (auto& [irr, mult] : factor_q(x.num)) f.irreducibles.emplace_back(irr, mult);
    for (auto& [irr, mult] : factor_q(x.den)) f.irreducibles.emplace_back(irr, -mult);
    std::sort(f.irreducibles.begin(), f.irreducibles.end(), [](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
        return a.first < b.first;
    });
    return f;
}

template <Field F>
UnitFactorization factor_unit(const F&, const typename F::Elem&) {
    fail(errc::unsupported_field,
         "factor_unit is only defined over Q and univariate rational function fields over Q");
}

// ---------------------------------------------------------------------------
// basis keys
// ---------------------------------------------------------------------------

struct UKey {
    enum Tag { MulPrime = 0, MulIrred = 1, LogCoord = 2 };
    int tag = MulPrime;
    Int p{};               // MulPrime
    std::vector<Rat> q{};  // MulIrred: monic irreducible
    int slot = 0;          // LogCoord: which t-power 1..m-1
    // LogCoord basis function over K: fb=0 -> z^j (j=0 covers K=Q); fb=1 -> z^j/fq^i
    int fb = 0;
    long j = 0, i = 0;
    std::vector<Rat> fq{};

    friend bool operator<(const UKey& a, const UKey& b) {
        auto ta = std::tie(a.tag, a.p, a.q, a.slot, a.fb, a.j, a.i, a.fq);
        auto tb = std::tie(b.tag, b.p, b.q, b.slot, b.fb, b.j, b.i, b.fq);
        return ta < tb;
    }
    friend bool operator==(const UKey& a, const UKey& b) {
        return a.tag == b.tag && a.p == b.p && a.q == b.q && a.slot == b.slot && a.fb == b.fb &&
               a.j == b.j && a.i == b.i && a.fq == b.fq;
    }
};

using UnitCoords = std::map<UKey, Rat>;

namespace detail {

inline void coords_accumulate(UnitCoords& out, UKey k, const Rat& v) {
    if (v == 0) return;
    auto [it, fresh] = out.emplace(std::move(k), v);
    if (!fresh) {
        it->second += v;
        if (it->second == 0) out.erase(it);
    }
}

// partial-fraction expansion of f over the Q-basis of Q(z); emits
// (fb basis element, rational coefficient) through cb(key-template).
inline void pf_expand(const QxField&, const QxField::Elem& f,
                      const std::function<void(int fb, long j, long i, const std::vector<Rat>&, const Rat&)>& cb) {
    Rationals Q;
    auto [polypart, rem] = poly_divmod(Q, f.num, f.den);
    for (size_t j = 0; j < polypart.size(); ++j)
        if (polypart[j] != 0) cb(0, static_cast<long>(j), 0, {}, polypart[j]);
    if (rem.empty()) return;
    // proper part rem/den: split prime power by prime power
    PolyQ r = rem, den = f.den;
    auto fac = factor_q(den);
    for (auto& [q, e] : fac) {
        PolyQ qe = poly_const(Q, Rat(1));
        for (long t = 0; t < e; ++t) qe = poly_mul(Q, q, qe);
        PolyQ s = poly_divmod(Q, den, qe).first;
        // 1 = alpha qe + beta s ; r/(qe s) = r beta / qe + r alpha / s
        PolyQ alpha, beta;
        auto g = poly_ext_gcd(Q, qe, s, alpha, beta);
        require(poly_deg<Rationals>(g) == 0, errc::internal, "pf: factors not coprime");
        auto rb = poly_mod(Q, poly_mul(Q, r, beta), qe);
        // q-adic digits of rb: rb = sum_{d<e} B_d q^d, deg B_d < deg q
        PolyQ cur = rb;
        for (long d = 0; d < e && !cur.empty(); ++d) {
            auto [quo, dig] = poly_divmod(Q, cur, q);
            for (size_t j = 0; j < dig.size(); ++j)
                if (dig[j] != 0) cb(1, static_cast<long>(j), e - d, q, dig[j]);
            cur = quo;
        }
        r = poly_mod(Q, poly_mul(Q, r, alpha), s);
        den = s;
    }
}

} // namespace detail

// coordinates of a unit of Q[t]/(t^m)
inline UnitCoords unit_coords(const Rationals& k, const Series<Rationals>& x) {
    require(x.is_unit(), errc::non_unit, "unit coordinates of a non-unit");
    UnitCoords out;
    auto f = factor_unit(k, x.constant_term());
    for (auto& [p, e] : f.primes) detail::coords_accumulate(out, UKey{.tag = UKey::MulPrime, .p = p}, Rat(e));
    auto u = log_circ(x);
    for (int s = 1; s < x.modulus(); ++s)
        detail::coords_accumulate(out, UKey{.tag = UKey::LogCoord, .slot = s}, u.coeff(s));
    return out;
}

// coordinates of a unit of Q(z)[t]/(t^m)
inline UnitCoords unit_coords(const QxField& k, const Series<QxField>& x) {
    require(x.is_unit(), errc::non_unit, "unit coordinates of a non-unit");
    UnitCoords out;
    auto f = factor_unit(k, x.constant_term());
    for (auto& [p, e] : f.primes) detail::coords_accumulate(out, UKey{.tag = UKey::MulPrime, .p = p}, Rat(e));
    for (auto& [q, e] : f.irreducibles)
        detail::coords_accumulate(out, UKey{.tag = UKey::MulIrred, .q = q}, Rat(e));
    auto u = log_circ(x);
    for (int s = 1; s < x.modulus(); ++s) {
        detail::pf_expand(k, u.coeff(s),
                          [&](int fb, long j, long i, const std::vector<Rat>& fq, const Rat& c) {
                              detail::coords_accumulate(
                                  out, UKey{.tag = UKey::LogCoord, .slot = s, .fb = fb, .j = j, .i = i, .fq = fq}, c);
                          });
    }
    return out;
}

// ---------------------------------------------------------------------------
// canonical antisymmetric matrix
// ---------------------------------------------------------------------------

struct CanonicalWedge {
    // key pairs are strictly increasing; value is the matrix entry
    std::map<std::pair<UKey, UKey>, Rat> entries;

    void accumulate(const UKey& a, const UKey& b, const Rat& v) {
        if (v == 0) return;
        if (b < a) {
            accumulate(b, a, -v);
            return;
        }
        if (a == b) return;  // alternation
        auto [it, fresh] = entries.emplace(std::make_pair(a, b), v);
        if (!fresh) {
            it->second += v;
            if (it->second == 0) entries.erase(it);
        }
    }
    bool is_zero() const { return entries.empty(); }
    bool operator==(const CanonicalWedge& o) const { return entries == o.entries; }

    // component in (Lambda^2)^o: every entry that touches a log coordinate
    CanonicalWedge infinitesimal_part() const {
        CanonicalWedge out;
        for (const auto& [key, v] : entries)
            if (key.first.tag == UKey::LogCoord || key.second.tag == UKey::LogCoord)
                out.entries.emplace(key, v);
        return out;
    }

    CanonicalWedge operator-(const CanonicalWedge& o) const {
        CanonicalWedge out = *this;
        for (const auto& [key, v] : o.entries) out.accumulate(key.first, key.second, -v);
        return out;
    }
};

template <class K>
CanonicalWedge canonicalize(const K& k, const Wedge2<Series<K>>& w)
    requires(std::same_as<K, Rationals> || std::same_as<K, QxField>)
{
    CanonicalWedge out;
    for (const auto& t : w.terms) {
        auto ca = unit_coords(k, t.a);
        auto cb = unit_coords(k, t.b);
        for (const auto& [ka, va] : ca)
            for (const auto& [kb, vb] : cb) out.accumulate(ka, kb, t.c * va * vb);
    }
    return out;
}

// ---------------------------------------------------------------------------
// zero test: exact over Q and Q(z); probabilistic specialization for other
// univariate function fields over supported bases (one-sided)
// ---------------------------------------------------------------------------

struct ZeroCheck {
    bool zero;
    bool exact;  // canonical mode?
    int trials;
};

inline ZeroCheck wedge_is_zero(const Rationals& k, const Wedge2<Series<Rationals>>& w, int = 5,
                               uint64_t = 0) {
    return {canonicalize(k, w).is_zero(), true, 0};
}

inline ZeroCheck wedge_is_zero(const QxField& k, const Wedge2<Series<QxField>>& w, int = 5,
                               uint64_t = 0) {
    return {canonicalize(k, w).is_zero(), true, 0};
}

// specialization of a function-field wedge at var = q; fails when q collides
// with a pole or a zero of any slot entry
template <Field B>
bool specialize_wedge(const RatFuncField<B>& k, const Wedge2<Series<RatFuncField<B>>>& w,
                      const typename B::Elem& q, Wedge2<Series<B>>& out) {
    const B& base = k.base();
    out.terms.clear();
    auto spec = [&](const Series<RatFuncField<B>>& s, Series<B>& r) -> bool {
        r = Series<B>(base, s.modulus());
        for (int i = 0; i < s.modulus(); ++i) {
            const auto& c = s.coeff(i);
            if (base.is_zero(poly_eval(base, c.den, q))) return false;
            r.coeff_mut(i) = base.div(poly_eval(base, c.num, q), poly_eval(base, c.den, q));
        }
        return r.is_unit();
    };
    for (const auto& t : w.terms) {
        Series<B> a(base, 1), b(base, 1);
        if (!spec(t.a, a) || !spec(t.b, b)) return false;
        out.add(t.c, a, b);
    }
    return true;
}

template <Field B>
ZeroCheck wedge_is_zero(const RatFuncField<B>& k, const Wedge2<Series<RatFuncField<B>>>& w,
                        int trials = 5, uint64_t seed = 0x5eedULL) {
    std::mt19937_64 rng(seed);
    int done = 0;
    long attempts = 0;
    while (done < trials) {
        require(++attempts < 1000 * static_cast<long>(trials) + 1000, errc::internal,
                "specialization rejection bound exceeded");
        long num = static_cast<long>(rng() % 2001) - 1000;
        long den = static_cast<long>(rng() % 50) + 1;
        auto q = k.base().from_rat(Rat(num, den));
        Wedge2<Series<B>> sw;
        if (!specialize_wedge(k, w, q, sw)) continue;
        auto sub = wedge_is_zero(k.base(), sw, trials, rng());
        if (!sub.zero) return {false, false, done + 1};
        ++done;
    }
    return {true, false, done};
}

template <Field F>
ZeroCheck wedge_is_zero(const F&, const Wedge2<Series<F>>&, int = 5, uint64_t = 0) {
    fail(errc::unsupported_field,
         "canonical zero test is limited to Q / Q(z); use the evaluation functionals here");
}

} // namespace adilog
