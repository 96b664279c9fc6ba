#pragma once

// The coefficient-field tower: Q, number fields Q[theta]/(m), finite fields
// F_{p^e}, and univariate rational function fields over any of these.
//
// Fields are lightweight handle objects (shared state behind shared_ptr);
// elements are plain value types, all operations go through the field handle.

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "intfactor.hpp"
#include "poly.hpp"
#include "rational.hpp"

namespace adilog {

// ---------------------------------------------------------------------------
// Q
// ---------------------------------------------------------------------------

class Rationals {
public:
    using Elem = Rat;

    Elem zero() const { return Rat(0); }
    Elem one() const { return Rat(1); }
    Elem from_int(long n) const { return Rat(n); }
    Elem from_rat(const Rat& q) const { return q; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const {
        require(a != 0, errc::zero_element, "1/0 in Q");
        return Rat(1) / a;
    }
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
    bool is_zero(const Elem& a) const { return a == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    long characteristic() const { return 0; }
    std::string to_string(const Elem& a) const { return rat_str(a); }
    Elem derive(const Elem&) const { return Rat(0); }
    bool same(const Rationals&) const { return true; }
};

// primitive-PRS gcd over Q (declared in poly.hpp)
inline std::vector<Rat> poly_gcd(const Rationals&, std::vector<Rat> a, std::vector<Rat> b) {
    auto to_prim = [](const std::vector<Rat>& p) {
        Int den(1);
        for (const auto& c : p) den = lcm(den, rat_den(c));
        std::vector<Int> v(p.size());
        for (size_t i = 0; i < p.size(); ++i) v[i] = rat_num(p[i]) * (den / rat_den(p[i]));
        Int g(0);
        for (const auto& c : v) g = gcd(g, c);
        if (g != 0)
            for (auto& c : v) c /= g;
        return v;
    };
    auto deg = [](const std::vector<Int>& p) { return static_cast<long>(p.size()) - 1; };
    auto trim = [](std::vector<Int>& p) {
        while (!p.empty() && p.back() == 0) p.pop_back();
    };
    if (a.empty() || b.empty()) {
        auto& n = a.empty() ? b : a;
        if (n.empty()) return {};
        std::vector<Rat> m(n.size());
        for (size_t i = 0; i < n.size(); ++i) m[i] = n[i] / n.back();
        return m;
    }
    std::vector<Int> A = to_prim(a), B = to_prim(b);
    if (deg(A) < deg(B)) std::swap(A, B);
    while (!B.empty()) {
        // pseudo-remainder of A by B, then primitive part
        std::vector<Int> R = A;
        long dd = deg(R) - deg(B);
        for (long i = 0; i <= dd && !R.empty(); ++i) {
            long sh = deg(R) - deg(B);
            if (sh < 0) break;
            Int lead = R.back();
            for (auto& c : R) c *= B.back();
            for (size_t j = 0; j < B.size(); ++j) R[sh + j] -= lead * B[j];
            trim(R);
        }
        while (!R.empty() && deg(R) >= deg(B)) {  // safety for sparse leading terms
            long sh = deg(R) - deg(B);
            Int lead = R.back();
            for (auto& c : R) c *= B.back();
            for (size_t j = 0; j < B.size(); ++j) R[sh + j] -= lead * B[j];
            trim(R);
        }
        Int g(0);
        for (const auto& c : R) g = gcd(g, c);
        if (g != 0)
            for (auto& c : R) c /= g;
        A = std::move(B);
        B = std::move(R);
    }
    std::vector<Rat> out(A.size());
    for (size_t i = 0; i < A.size(); ++i) out[i] = Rat(A[i]) / Rat(A.back());
    return out;
}

// ---------------------------------------------------------------------------
// Number field Q[theta]/(m), m monic irreducible over Q.
// Single-generator extensions of Q only; towers are not constructed (the
// modules that would need them reject such inputs instead).
// ---------------------------------------------------------------------------

class NumberField {
public:
    using Elem = std::vector<Rat>;  // reduced representative, deg < n

    NumberField() = default;
    // minpoly is made monic here; irreducibility is the caller's contract
    // (make_number_field in factorqz.hpp verifies it).
    NumberField(std::vector<Rat> minpoly, std::string gen = "\xce\xb8") {
        require(minpoly.size() >= 2, errc::not_an_extension, "minimal polynomial must be nonconstant");
        require(minpoly.back() != 0, errc::not_an_extension, "zero leading coefficient");
        Rat lc = minpoly.back();
        for (auto& c : minpoly) c /= lc;
        auto d = std::make_shared<Data>();
        d->minpoly = std::move(minpoly);
        d->gen = std::move(gen);
        d->power_traces = newton_power_sums(d->minpoly);
        data_ = std::move(d);
    }

    long degree() const { return static_cast<long>(data_->minpoly.size()) - 1; }
    const std::vector<Rat>& minpoly() const { return data_->minpoly; }
    const std::string& gen_name() const { return data_->gen; }

    Elem zero() const { return {}; }
    Elem one() const { return {Rat(1)}; }
    Elem gen() const {
        if (degree() == 1) return {-data_->minpoly[0]};  // theta = root of the linear minpoly
        return {Rat(0), Rat(1)};
    }
    Elem from_int(long n) const { return from_rat(Rat(n)); }
    Elem from_rat(const Rat& q) const { return q == 0 ? Elem{} : Elem{q}; }
    Elem from_coeffs(std::vector<Rat> c) const { return reduce(std::move(c)); }

    Elem add(const Elem& a, const Elem& b) const {
        Elem r(std::max(a.size(), b.size()), Rat(0));
        for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
        for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
        trim(r);
        return r;
    }
    Elem sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }
    Elem neg(Elem a) const {
        for (auto& c : a) c = -c;
        return a;
    }
    Elem mul(const Elem& a, const Elem& b) const {
        if (a.empty() || b.empty()) return {};
        Elem r(a.size() + b.size() - 1, Rat(0));
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
        return reduce(std::move(r));
    }
    Elem inv(const Elem& a) const {
        require(!a.empty(), errc::zero_element, "1/0 in number field");
        Rationals Q;
        Poly<Rationals> s, t;
        auto g = poly_ext_gcd(Q, a, data_->minpoly, s, t);
        require(g.size() == 1, errc::not_an_extension, "minimal polynomial is not irreducible");
        Rat gi = Rat(1) / g[0];
        for (auto& c : s) c *= gi;
        return reduce(std::move(s));
    }
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
    bool is_zero(const Elem& a) const { return a.empty(); }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    long characteristic() const { return 0; }
    Elem derive(const Elem&) const { return {}; }

    // field trace to Q via Newton power sums of the minimal polynomial
    Rat trace(const Elem& a) const {
        Rat t(0);
        for (size_t i = 0; i < a.size(); ++i) t += a[i] * data_->power_traces[i];
        return t;
    }

    std::string to_string(const Elem& a) const {
        Rationals Q;
        return poly_to_string(Q, a, data_->gen);
    }

    bool same(const NumberField& o) const {
        return data_ == o.data_ || data_->minpoly == o.data_->minpoly;
    }

private:
    struct Data {
        std::vector<Rat> minpoly;
        std::string gen;
        std::vector<Rat> power_traces;  // Tr(theta^k), k < n
    };
    std::shared_ptr<const Data> data_;

    static void trim(Elem& a) {
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    Elem reduce(Elem a) const {
        Rationals Q;
        auto r = poly_mod(Q, a, data_->minpoly);
        return r;
    }
    static std::vector<Rat> newton_power_sums(const std::vector<Rat>& m) {
        long n = static_cast<long>(m.size()) - 1;
        std::vector<Rat> p(n, Rat(0));
        p[0] = Rat(n);
        for (long k = 1; k < n; ++k) {
            Rat s = Rat(-k) * m[n - k];
            for (long i = 1; i < k; ++i) s -= m[n - i] * p[k - i];
            p[k] = s;
        }
        return p;
    }
};

// ---------------------------------------------------------------------------
// F_{p^e} = F_p[g]/(modulus); elements are reduced coefficient vectors.
// ---------------------------------------------------------------------------

class FiniteField {
public:
    using Elem = std::vector<long>;  // coefficients in [0,p), deg < e

    FiniteField() = default;
    // modulus: monic irreducible of degree e over F_p (verified); for e = 1 a
    // default modulus g - 0 is used.
    FiniteField(long p, long e, std::vector<long> modulus = {}, std::string gen = "\xce\xb8") {
        require(p >= 2 && p < (1L << 31), errc::unsupported_field, "bad characteristic");
        require(detail::miller_rabin(Int(p)), errc::unsupported_field, "characteristic must be prime");
        require(e >= 1 && e <= 16, errc::unsupported_field, "extension degree out of range");
        auto d = std::make_shared<Data>();
        d->p = p;
        d->e = e;
        d->gen = std::move(gen);
        if (modulus.empty()) modulus = default_modulus(p, e);
        require(static_cast<long>(modulus.size()) == e + 1, errc::unsupported_field,
                "modulus degree must equal the extension degree");
        for (auto& c : modulus) c = ((c % p) + p) % p;
        require(modulus.back() != 0, errc::unsupported_field, "modulus not monic");
        if (modulus.back() != 1) {
            long li = inv_mod(modulus.back(), p);
            for (auto& c : modulus) c = mulp(c, li, p);
        }
        d->mod = std::move(modulus);
        data_ = std::move(d);
        require(is_irreducible_mod_p(), errc::unsupported_field, "modulus is reducible");
    }

    long p() const { return data_->p; }
    long ext_degree() const { return data_->e; }
    Int order() const { return int_pow(Int(data_->p), static_cast<unsigned long>(data_->e)); }
    const std::string& gen_name() const { return data_->gen; }
    const std::vector<long>& modulus() const { return data_->mod; }

    Elem zero() const { return {}; }
    Elem one() const { return {1}; }
    Elem gen() const {
        if (data_->e == 1) return from_int((data_->p - data_->mod[0]) % data_->p);
        return {0, 1};
    }
    Elem from_int(long n) const {
        long p = data_->p;
        long v = ((n % p) + p) % p;
        return v == 0 ? Elem{} : Elem{v};
    }
    Elem from_rat(const Rat& q) const {
        long p = data_->p;
        long num = to_long(rat_num(q) % p);
        long den = to_long(rat_den(q) % p);
        require(den % p != 0, errc::zero_element, "rational has no reduction mod p");
        long v = mulp(((num % p) + p) % p, inv_mod(((den % p) + p) % p, p), p);
        return v == 0 ? Elem{} : Elem{v};
    }
    Elem add(const Elem& a, const Elem& b) const {
        long p = data_->p;
        Elem r(std::max(a.size(), b.size()), 0);
        for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
        for (size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + b[i]) % p;
        trim(r);
        return r;
    }
    Elem sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }
    Elem neg(Elem a) const {
        long p = data_->p;
        for (auto& c : a) c = (p - c) % p;
        return a;
    }
    Elem mul(const Elem& a, const Elem& b) const {
        if (a.empty() || b.empty()) return {};
        long p = data_->p;
        std::vector<long> r(a.size() + b.size() - 1, 0);
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
        return reduce(std::move(r));
    }
    Elem inv(const Elem& a) const {
        require(!a.empty(), errc::zero_element, "1/0 in finite field");
        // a^(q-2)
        return pow(a, order() - 2);
    }
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
    Elem pow(Elem b, Int n) const {
        Elem acc = one();
        if (n < 0) { b = inv(b); n = -n; }
        while (n > 0) {
            if (bit_test(n, 0)) acc = mul(acc, b);
            b = mul(b, b);
            n >>= 1;
        }
        return acc;
    }
    bool is_zero(const Elem& a) const { return a.empty(); }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    long characteristic() const { return data_->p; }
    Elem derive(const Elem&) const { return {}; }

    Elem frobenius(const Elem& a) const { return pow(a, Int(data_->p)); }
    // x^{1/p} = x^{p^{e-1}} (Frobenius is bijective)
    Elem pth_root(const Elem& a) const {
        return pow(a, int_pow(Int(data_->p), static_cast<unsigned long>(data_->e - 1)));
    }
    // trace to the prime field, returned as a canonical residue in [0,p)
    long trace(const Elem& a) const {
        Elem t = zero();
        Elem x = a;
        for (long i = 0; i < data_->e; ++i) {
            t = add(t, x);
            x = frobenius(x);
        }
        require(t.size() <= 1, errc::internal, "trace landed outside the prime field");
        return t.empty() ? 0 : t[0];
    }
    // partial trace to the subfield F_{p^d}, d | e (value returned inside F_{p^e})
    Elem trace_to_subfield(const Elem& a, long d) const {
        require(d >= 1 && data_->e % d == 0, errc::not_an_extension, "subfield degree must divide e");
        Elem t = zero();
        Elem x = a;
        for (long i = 0; i < data_->e / d; ++i) {
            t = add(t, x);
            x = pow(x, int_pow(Int(data_->p), static_cast<unsigned long>(d)));
        }
        return t;
    }

    std::string to_string(const Elem& a) const {
        if (a.empty()) return "0";
        std::string s;
        for (size_t i = a.size(); i-- > 0;) {
            if (a[i] == 0) continue;
            if (!s.empty()) s += " + ";
            if (i == 0) { s += std::to_string(a[i]); continue; }
            std::string c = a[i] == 1 ? "" : std::to_string(a[i]) + "*";
            s += c + data_->gen + (i > 1 ? "^" + std::to_string(i) : "");
        }
        return s;
    }

    bool same(const FiniteField& o) const {
        return data_ == o.data_ || (data_->p == o.data_->p && data_->mod == o.data_->mod);
    }

private:
    struct Data {
        long p = 0, e = 0;
        std::vector<long> mod;
        std::string gen;
    };
    std::shared_ptr<const Data> data_;

    static long mulp(long a, long b, long p) { return (a * b) % p; }
    static long inv_mod(long a, long p) {
        long t = 0, nt = 1, r = p, nr = a % p;
        while (nr != 0) {
            long q = r / nr;
            std::swap(t -= q * nt, nt);
            std::swap(r -= q * nr, nr);
        }
        require(r == 1, errc::zero_element, "not invertible mod p");
        return ((t % p) + p) % p;
    }
    static void trim(Elem& a) {
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    Elem reduce(std::vector<long> a) const {
        long p = data_->p, e = data_->e;
        const auto& m = data_->mod;
        for (size_t i = a.size(); i-- > static_cast<size_t>(e);) {
            long c = a[i] % p;
            if (c == 0) continue;
            for (long j = 0; j <= e; ++j)
                a[i - e + j] = ((a[i - e + j] - c * m[j]) % p + p) % p;
        }
        a.resize(e);
        trim(a);
        return a;
    }

    bool is_irreducible_mod_p() const;  // defined below, uses the poly layer

    static std::vector<long> default_modulus(long p, long e);
};

// poly layer view of F_p for internal irreducibility checks
namespace detail {
struct ZpView {
    long p;
    using Elem = long;
    Elem zero() const { return 0; }
    Elem one() const { return 1 % p; }
    Elem from_int(long n) const { return ((n % p) + p) % p; }
    Elem from_rat(const Rat& q) const {
        long num = to_long(rat_num(q) % p), den = to_long(rat_den(q) % p);
        require(den % p != 0, errc::zero_element, "no reduction mod p");
        return mul(from_int(num), inv(from_int(den)));
    }
    Elem add(Elem a, Elem b) const { return (a + b) % p; }
    Elem sub(Elem a, Elem b) const { return ((a - b) % p + p) % p; }
    Elem mul(Elem a, Elem b) const { return (a * b) % p; }
    Elem neg(Elem a) const { return (p - a % p) % p; }
    Elem inv(Elem a) const {
        require(a % p != 0, errc::zero_element, "1/0 mod p");
        long t = 0, nt = 1, r = p, nr = a % p;
        while (nr != 0) {
            long q = r / nr;
            std::swap(t -= q * nt, nt);
            std::swap(r -= q * nr, nr);
        }
        return ((t % p) + p) % p;
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    bool is_zero(Elem a) const { return a % p == 0; }
    bool eq(Elem a, Elem b) const { return (a - b) % p == 0; }
    long characteristic() const { return p; }
    std::string to_string(Elem a) const { return std::to_string(a); }
    Elem derive(Elem) const { return 0; }
    bool same(const ZpView& o) const { return p == o.p; }
};

inline bool zp_poly_irreducible(long p, const std::vector<long>& f) {
    ZpView k{p};
    long n = static_cast<long>(f.size()) - 1;
    if (n <= 0) return false;
    if (n == 1) return true;
    Poly<detail::ZpView> x = poly_gen(k);
    // x^{p^n} == x mod f
    Poly<detail::ZpView> xp = poly_pow_mod(k, x, int_pow(Int(p), static_cast<unsigned long>(n)), f);
    if (!poly_eq(k, xp, poly_mod(k, x, f))) return false;
    // gcd(x^{p^{n/l}} - x, f) = 1 for prime divisors l of n
    for (long l = 2; l <= n; ++l) {
        if (n % l != 0) continue;
        bool lp = true;
        for (long d = 2; d * d <= l; ++d)
            if (l % d == 0) { lp = false; break; }
        if (!lp) continue;
        auto xq = poly_pow_mod(k, x, int_pow(Int(p), static_cast<unsigned long>(n / l)), f);
        auto g = poly_gcd(k, poly_sub(k, xq, x), f);
        if (poly_deg<detail::ZpView>(g) != 0) return false;
    }
    return true;
}
} // namespace detail

inline bool FiniteField::is_irreducible_mod_p() const {
    if (data_->e == 1) return true;
    return detail::zp_poly_irreducible(data_->p, data_->mod);
}

inline std::vector<long> FiniteField::default_modulus(long p, long e) {
    if (e == 1) return {0, 1};
    // deterministic search in lexicographic coefficient order
    std::vector<long> f(e + 1, 0);
    f[e] = 1;
    for (long trial = 0;; ++trial) {
        long v = trial;
        for (long i = 0; i < e; ++i) {
            f[i] = v % p;
            v /= p;
        }
        if (detail::zp_poly_irreducible(p, f)) return f;
        require(trial < 100000000L, errc::internal, "no irreducible modulus found");
    }
}

// ---------------------------------------------------------------------------
// Univariate rational function field over a base field.
// derive() is d/d(var) with base constants killed; for the bases used here
// (Q, number fields, F_{p^e}) this is d relative to the prime field.
// ---------------------------------------------------------------------------

template <Field B>
class RatFuncField {
public:
    struct Elem {
        Poly<B> num, den;  // den monic, gcd(num,den)=1, zero <=> num empty
        bool operator==(const Elem& o) const = default;
    };

    RatFuncField() = default;
    explicit RatFuncField(B base, std::string var = "x") : base_(std::move(base)), var_(std::move(var)) {}

    const B& base() const { return base_; }
    const std::string& var_name() const { return var_; }

    Elem zero() const { return {{}, {base_.one()}}; }
    Elem one() const { return {{base_.one()}, {base_.one()}}; }
    Elem gen() const { return {poly_gen(base_), {base_.one()}}; }
    Elem from_int(long n) const { return from_base(base_.from_int(n)); }
    Elem from_rat(const Rat& q) const { return from_base(base_.from_rat(q)); }
    Elem from_base(typename B::Elem c) const { return {poly_const(base_, std::move(c)), {base_.one()}}; }
    Elem from_poly(Poly<B> p) const { return normalize(std::move(p), {base_.one()}); }
    Elem from_fraction(Poly<B> n, Poly<B> d) const { return normalize(std::move(n), std::move(d)); }

    Elem add(const Elem& a, const Elem& b) const {
        auto n = poly_add(base_, poly_mul(base_, a.num, b.den), poly_mul(base_, b.num, a.den));
        return normalize(std::move(n), poly_mul(base_, a.den, b.den));
    }
    Elem sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }
    Elem neg(Elem a) const {
        a.num = poly_neg(base_, a.num);
        return a;
    }
    Elem mul(const Elem& a, const Elem& b) const {
        return normalize(poly_mul(base_, a.num, b.num), poly_mul(base_, a.den, b.den));
    }
    Elem inv(const Elem& a) const {
        require(!a.num.empty(), errc::zero_element, "1/0 in rational function field");
        return normalize(a.den, a.num);
    }
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
    bool is_zero(const Elem& a) const { return a.num.empty(); }
    bool eq(const Elem& a, const Elem& b) const {
        return poly_eq(base_, a.num, b.num) && poly_eq(base_, a.den, b.den);
    }
    long characteristic() const { return base_.characteristic(); }

    Elem derive(const Elem& a) const {
        // (n'd - nd')/d^2, with coefficientwise base derivation folded in
        auto dn = full_deriv(a.num);
        auto dd = full_deriv(a.den);
        auto n = poly_sub(base_, poly_mul(base_, dn, a.den), poly_mul(base_, a.num, dd));
        return normalize(std::move(n), poly_mul(base_, a.den, a.den));
    }

    typename B::Elem eval(const Elem& a, const typename B::Elem& x) const {
        auto d = poly_eval(base_, a.den, x);
        require(!base_.is_zero(d), errc::zero_element, "evaluation at a pole");
        return base_.div(poly_eval(base_, a.num, x), d);
    }

    std::string to_string(const Elem& a) const {
        if (a.num.empty()) return "0";
        std::string n = poly_to_string(base_, a.num, var_);
        if (poly_deg<B>(a.den) == 0 && base_.eq(a.den[0], base_.one())) return n;
        return "(" + n + ")/(" + poly_to_string(base_, a.den, var_) + ")";
    }

    bool same(const RatFuncField& o) const { return var_ == o.var_ && base_.same(o.base_); }

    Elem normalize(Poly<B> n, Poly<B> d) const {
        require(!d.empty(), errc::zero_element, "zero denominator");
        poly_trim(base_, n);
        if (n.empty()) return zero();
        auto g = poly_gcd(base_, n, d);
        if (poly_deg<B>(g) > 0) {
            n = poly_divmod(base_, n, g).first;
            d = poly_divmod(base_, d, g).first;
        }
        auto lin = base_.inv(d.back());
        for (auto& c : d) c = base_.mul(c, lin);
        for (auto& c : n) c = base_.mul(c, lin);
        return {std::move(n), std::move(d)};
    }

private:
    B base_{};
    std::string var_ = "x";

    Poly<B> full_deriv(const Poly<B>& a) const {
        Poly<B> r(a.size(), base_.zero());
        for (size_t i = 0; i < a.size(); ++i) {
            r[i] = base_.derive(a[i]);
            if (i + 1 < a.size())
                r[i] = base_.add(r[i], base_.mul(a[i + 1], base_.from_int(static_cast<long>(i) + 1)));
        }
        poly_trim(base_, r);
        return r;
    }
};

using QxField = RatFuncField<Rationals>;

// ---------------------------------------------------------------------------
// trace() entry points (spec: trace lands in the construction's base field)
// ---------------------------------------------------------------------------

inline Rat trace(const NumberField& k, const NumberField::Elem& a) { return k.trace(a); }
inline long trace(const FiniteField& k, const FiniteField::Elem& a) { return k.trace(a); }

} // namespace adilog
