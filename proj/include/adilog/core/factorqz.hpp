#pragma once

// Exact factorization of univariate polynomials over Q: Yun squarefree
// decomposition, Cantor-Zassenhaus over F_p, linear Hensel lifting and
// subset recombination.  Degrees in this project stay small, so the simple
// variants are the right tool.

#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include "fields.hpp"

namespace adilog {

using PolyQ = Poly<Rationals>;
using PolyZp = std::vector<long>;

// ---------------------------------------------------------------------------
// F_p factorization (p odd prime)
// ---------------------------------------------------------------------------

namespace detail {

inline PolyZp zp_random_poly(ZpView k, long deg, std::mt19937_64& rng) {
    PolyZp a(deg + 1);
    for (auto& c : a) c = static_cast<long>(rng() % static_cast<unsigned long>(k.p));
    poly_trim(k, a);
    return a;
}

// equal-degree splitting of a squarefree product of degree-d irreducibles
inline void zp_edf(ZpView k, PolyZp f, long d, std::vector<PolyZp>& out, std::mt19937_64& rng) {
    if (poly_deg<ZpView>(f) == d) {
        out.push_back(poly_monic(k, std::move(f)));
        return;
    }
    Int exp = (int_pow(Int(k.p), static_cast<unsigned long>(d)) - 1) / 2;
    for (;;) {
        auto a = zp_random_poly(k, poly_deg<ZpView>(f) - 1, rng);
        if (poly_deg<ZpView>(a) < 1) continue;
        auto b = poly_pow_mod(k, a, exp, f);
        b = poly_sub(k, b, poly_const(k, k.one()));
        auto g = poly_gcd(k, b, f);
        long dg = poly_deg<ZpView>(g);
        if (dg > 0 && dg < poly_deg<ZpView>(f)) {
            zp_edf(k, g, d, out, rng);
            zp_edf(k, poly_divmod(k, f, g).first, d, out, rng);
            return;
        }
    }
}

// f monic squarefree over F_p -> monic irreducible factors
inline std::vector<PolyZp> zp_factor_squarefree(long p, PolyZp f) {
    ZpView k{p};
    require(p % 2 == 1, errc::unsupported_field, "factorization needs an odd prime");
    std::vector<PolyZp> out;
    std::mt19937_64 rng(0x5eedf00dULL + static_cast<unsigned long>(p));
    f = poly_monic(k, std::move(f));
    auto x = poly_gen(k);
    auto h = x;
    long d = 0;
    while (poly_deg<ZpView>(f) > 0 && 2 * (d + 1) <= poly_deg<ZpView>(f)) {
        ++d;
        h = poly_pow_mod(k, h, Int(p), f);
        auto g = poly_gcd(k, poly_sub(k, h, poly_mod(k, x, f)), f);
        if (poly_deg<ZpView>(g) > 0) {
            zp_edf(k, g, d, out, rng);
            f = poly_divmod(k, f, g).first;
            h = poly_mod(k, h, f);
        }
    }
    if (poly_deg<ZpView>(f) > 0) out.push_back(std::move(f));
    return out;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Yun squarefree decomposition (char 0): f = prod part[i]^(i+1)
// ---------------------------------------------------------------------------

template <Field F>
std::vector<Poly<F>> squarefree_parts(const F& k, Poly<F> f) {
    require(k.characteristic() == 0, errc::unsupported_ring, "Yun decomposition needs characteristic 0");
    std::vector<Poly<F>> parts;
    if (poly_deg<F>(f) <= 0) return parts;
    f = poly_monic(k, std::move(f));
    auto fp = poly_deriv(k, f);
    auto a = poly_gcd(k, f, fp);
    auto b = poly_divmod(k, f, a).first;
    auto c = poly_divmod(k, fp, a).first;
    auto d = poly_sub(k, c, poly_deriv(k, b));
    while (poly_deg<F>(b) > 0) {
        auto g = poly_gcd(k, b, d);
        parts.push_back(g);
        b = poly_divmod(k, b, g).first;
        c = poly_divmod(k, d, g).first;
        d = poly_sub(k, c, poly_deriv(k, b));
    }
    return parts;
}

// ---------------------------------------------------------------------------
// Zassenhaus over Q
// ---------------------------------------------------------------------------

namespace detail {

struct ZPoly {  // integer polynomial helpers
    static std::vector<Int> from_q(const PolyQ& f, Int& denom) {
        denom = 1;
        for (const auto& c : f) denom = lcm(denom, rat_den(c));
        std::vector<Int> out(f.size());
        for (size_t i = 0; i < f.size(); ++i) out[i] = rat_num(f[i]) * (denom / rat_den(f[i]));
        return out;
    }
    static Int content(const std::vector<Int>& f) {
        Int g = 0;
        for (const auto& c : f) g = gcd(g, c);
        return g == 0 ? Int(1) : g;
    }
    static std::vector<Int> mul(const std::vector<Int>& a, const std::vector<Int>& b) {
        if (a.empty() || b.empty()) return {};
        std::vector<Int> r(a.size() + b.size() - 1, Int(0));
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
        return r;
    }
    // exact division test; quotient returned when divisible
    static bool divides(const std::vector<Int>& d, std::vector<Int> n, std::vector<Int>& q) {
        if (d.empty() || n.size() < d.size()) return false;
        q.assign(n.size() - d.size() + 1, Int(0));
        for (size_t qi = q.size(); qi-- > 0;) {
            Int c = n[qi + d.size() - 1];
            if (c == 0) continue;
            if (c % d.back() != 0) return false;
            Int f = c / d.back();
            q[qi] = f;
            for (size_t j = 0; j < d.size(); ++j) n[qi + j] -= f * d[j];
        }
        for (const auto& c : n)
            if (c != 0) return false;
        return true;
    }
};

// monic squarefree f over Q -> monic irreducible factors over Q
inline std::vector<PolyQ> q_factor_squarefree(const PolyQ& fq) {
    Rationals Q;
    long n = poly_deg<Rationals>(fq);
    std::vector<PolyQ> out;
    if (n <= 0) return out;
    if (n == 1) { out.push_back(poly_monic(Q, fq)); return out; }

    Int denom;
    std::vector<Int> f = ZPoly::from_q(fq, denom);
    Int cont = ZPoly::content(f);
    if (f.back() < 0) cont = -cont;
    for (auto& c : f) c /= cont;
    Int lc = f.back();

    // pick an odd prime keeping f squarefree
    long p = 0;
    for (long cand : {101L, 103L, 107L, 109L, 113L, 127L, 131L, 137L, 139L, 149L,
                      151L, 157L, 163L, 167L, 173L, 179L, 181L, 191L, 193L, 197L,
                      199L, 211L, 223L, 227L, 229L, 233L, 239L, 241L, 251L, 257L}) {
        if (lc % cand == 0) continue;
        ZpView k{cand};
        PolyZp fp(f.size());
        for (size_t i = 0; i < f.size(); ++i) fp[i] = to_long(((f[i] % cand) + cand) % cand);
        poly_trim(k, fp);
        if (poly_deg<ZpView>(fp) != n) continue;
        auto g = poly_gcd(k, fp, poly_deriv(k, fp));
        if (poly_deg<ZpView>(g) == 0) { p = cand; break; }
    }
    require(p != 0, errc::internal, "no suitable prime for factorization");

    ZpView k{p};
    PolyZp fp(f.size());
    for (size_t i = 0; i < f.size(); ++i) fp[i] = to_long(((f[i] % p) + p) % p);
    auto modular = zp_factor_squarefree(p, fp);
    if (modular.size() == 1) {  // irreducible already
        out.push_back(poly_monic(Q, fq));
        return out;
    }

    // coefficient bound and Hensel precision
    Int maxabs = 0;
    for (const auto& c : f) {
        Int ac = abs(c);
        if (ac > maxabs) maxabs = ac;
    }
    Int bound = abs(lc) * maxabs * (Int(n + 1)) * (Int(1) << static_cast<unsigned>(n + 1));
    Int pk(p);
    int steps = 1;
    while (pk <= 2 * bound) { pk *= p; ++steps; }

    // linear multifactor Hensel lifting: f == lc * prod h_i  (mod p^s)
    std::vector<std::vector<Int>> h;
    for (auto& m : modular) {
        std::vector<Int> hi(m.size());
        for (size_t i = 0; i < m.size(); ++i) hi[i] = m[i];
        h.push_back(std::move(hi));
    }
    long lcp = to_long(((lc % p) + p) % p);
    Int modulus(p);
    for (int s = 1; s < steps; ++s) {
        // e = (f - lc*prod h)/modulus  mod p
        std::vector<Int> prod{Int(1)};
        for (auto& hi : h) prod = ZPoly::mul(prod, hi);
        std::vector<Int> err(std::max(f.size(), prod.size()), Int(0));
        for (size_t i = 0; i < f.size(); ++i) err[i] += f[i];
        for (size_t i = 0; i < prod.size(); ++i) err[i] -= lc * prod[i];
        PolyZp e(err.size());
        for (size_t i = 0; i < err.size(); ++i) {
            Int q = err[i] / modulus;
            e[i] = to_long(((q % p) + p) % p);
        }
        poly_trim(k, e);
        e = poly_scale(k, e, k.inv(lcp));
        for (auto& hi : h) {
            // delta_i = e * inv(prod_{j!=i} h_j) mod (h_i, p)
            PolyZp him(hi.size());
            for (size_t t = 0; t < hi.size(); ++t) him[t] = to_long(((hi[t] % p) + p) % p);
            PolyZp rest{1 % p};
            for (auto& hj : h) {
                if (&hj == &hi) continue;
                PolyZp hjm(hj.size());
                for (size_t t = 0; t < hj.size(); ++t) hjm[t] = to_long(((hj[t] % p) + p) % p);
                rest = poly_mod(k, poly_mul(k, rest, hjm), him);
            }
            PolyZp s1, t1;
            auto g = poly_ext_gcd(k, rest, him, s1, t1);
            require(poly_deg<ZpView>(g) == 0 && !g.empty(), errc::internal, "hensel: factors not coprime");
            auto delta = poly_mod(k, poly_mul(k, poly_mod(k, e, him), s1), him);
            for (size_t t = 0; t < delta.size(); ++t) hi[t] += modulus * delta[t];
        }
        modulus *= p;
    }

    // recombination
    auto symmetric = [&](Int c) {
        c %= modulus;
        if (c < 0) c += modulus;
        if (2 * c > modulus) c -= modulus;
        return c;
    };
    std::vector<int> alive(h.size(), 1);
    std::vector<Int> rem = f;
    for (size_t take = 1; take <= h.size(); ++take) {
        std::vector<size_t> idx;
        for (size_t i = 0; i < h.size(); ++i)
            if (alive[i]) idx.push_back(i);
        if (idx.size() < take) break;
        std::vector<size_t> sel(take);
        // iterate subsets of size `take` of idx
        std::vector<size_t> c(take);
        for (size_t i = 0; i < take; ++i) c[i] = i;
        bool more = true;
        while (more) {
            // candidate = lc * prod h[idx[c]]  mod p^s, symmetric, primitive part
            std::vector<Int> cand{rem.back()};  // current leading coefficient
            for (size_t i = 0; i < take; ++i) cand = ZPoly::mul(cand, h[idx[c[i]]]);
            for (auto& x : cand) x = symmetric(x);
            Int cc = ZPoly::content(cand);
            if (cand.back() < 0) cc = -cc;
            for (auto& x : cand) x /= cc;
            std::vector<Int> q;
            if (cand.size() <= rem.size() && ZPoly::divides(cand, rem, q)) {
                PolyQ fac(cand.size());
                for (size_t i = 0; i < cand.size(); ++i) fac[i] = Rat(cand[i]);
                out.push_back(poly_monic(Q, fac));
                for (size_t i = 0; i < take; ++i) alive[idx[c[i]]] = 0;
                Int qc = ZPoly::content(q);
                if (q.back() < 0) qc = -qc;
                for (auto& x : q) x /= qc;
                rem = std::move(q);
                // restart the subset iteration at this size
                idx.clear();
                for (size_t i = 0; i < h.size(); ++i)
                    if (alive[i]) idx.push_back(i);
                if (idx.size() < take) { more = false; break; }
                for (size_t i = 0; i < take; ++i) c[i] = i;
                continue;
            }
            // next subset
            long pos = static_cast<long>(take) - 1;
            while (pos >= 0 && c[pos] == idx.size() - take + pos) --pos;
            if (pos < 0) { more = false; break; }
            ++c[pos];
            for (size_t i = pos + 1; i < take; ++i) c[i] = c[i - 1] + 1;
        }
    }
    if (static_cast<long>(rem.size()) > 1) {
        PolyQ fac(rem.size());
        for (size_t i = 0; i < rem.size(); ++i) fac[i] = Rat(rem[i]);
        out.push_back(poly_monic(Q, fac));
    }
    return out;
}

} // namespace detail

// monic irreducible factors of f over Q with multiplicities; content returned
// in *content (f = content * prod fac^mult).
inline std::vector<std::pair<PolyQ, long>> factor_q(const PolyQ& f, Rat* content = nullptr) {
    Rationals Q;
    require(!f.empty(), errc::zero_element, "factor_q(0)");
    if (content) *content = f.back();
    std::vector<std::pair<PolyQ, long>> out;
    if (poly_deg<Rationals>(f) == 0) return out;
    auto parts = squarefree_parts(Q, f);
    for (size_t i = 0; i < parts.size(); ++i) {
        if (poly_deg<Rationals>(parts[i]) <= 0) continue;
        for (auto& irr : detail::q_factor_squarefree(parts[i]))
            out.emplace_back(std::move(irr), static_cast<long>(i) + 1);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
        return a.first < b.first;
    });
    return out;
}

inline bool is_irreducible_q(const PolyQ& f) {
    if (poly_deg<Rationals>(f) < 1) return false;
    auto fac = factor_q(f);
    return fac.size() == 1 && fac[0].second == 1;
}

// Checked number-field construction (spec invariant: min-poly irreducible).
inline NumberField make_number_field(PolyQ minpoly, std::string gen = "\xce\xb8") {
    require(is_irreducible_q(minpoly), errc::not_an_extension, "minimal polynomial is reducible");
    return NumberField(std::move(minpoly), std::move(gen));
}

// rational roots of f (from its linear factors)
inline std::vector<Rat> rational_roots(const PolyQ& f) {
    std::vector<Rat> roots;
    for (auto& [irr, mult] : factor_q(f))
        if (poly_deg<Rationals>(irr) == 1)
            for (long i = 0; i < mult; ++i) roots.push_back(-irr[0]);
    return roots;
}

} // namespace adilog
