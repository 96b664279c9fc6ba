#pragma once

// K[t]/(t^m) with exact coefficients.  Arithmetic between different moduli is
// rejected; truncate first.  log_circ/exp_nil implement the branch-free
// logarithm pair; in characteristic p both require m <= p.

#include <vector>

#include "errors.hpp"
#include "poly.hpp"

namespace adilog {

template <Field F>
class Series {
public:
    Series() = default;
    Series(F k, int m) : k_(std::move(k)), c_(check_m(m), k_.zero()) {}
    Series(F k, int m, std::vector<typename F::Elem> coeffs) : k_(std::move(k)), c_(std::move(coeffs)) {
        check_m(m);
        c_.resize(m, k_.zero());
    }

    static Series constant(F k, typename F::Elem c, int m) {
        Series s(k, m);
        s.c_[0] = std::move(c);
        return s;
    }
    static Series gen(F k, int m) {  // t
        Series s(std::move(k), m);
        if (m > 1) s.c_[1] = s.k_.one();
        return s;
    }

    const F& field() const { return k_; }
    int modulus() const { return static_cast<int>(c_.size()); }
    const typename F::Elem& coeff(int i) const {
        require(i >= 0 && i < modulus(), errc::index_out_of_range, "series coefficient index");
        return c_[i];
    }
    typename F::Elem& coeff_mut(int i) {
        require(i >= 0 && i < modulus(), errc::index_out_of_range, "series coefficient index");
        return c_[i];
    }
    const typename F::Elem& constant_term() const { return c_[0]; }
    const std::vector<typename F::Elem>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const auto& c : c_)
            if (!k_.is_zero(c)) return false;
        return true;
    }
    bool is_unit() const { return !k_.is_zero(c_[0]); }
    // x and 1-x both units
    bool is_flat() const {
        return is_unit() && !k_.is_zero(k_.sub(k_.one(), c_[0]));
    }
    bool is_constant() const {
        for (size_t i = 1; i < c_.size(); ++i)
            if (!k_.is_zero(c_[i])) return false;
        return true;
    }

    bool operator==(const Series& o) const {
        if (c_.size() != o.c_.size()) return false;
        for (size_t i = 0; i < c_.size(); ++i)
            if (!k_.eq(c_[i], o.c_[i])) return false;
        return true;
    }

    Series truncated(int m2) const {
        require(m2 >= 1 && m2 <= modulus(), errc::modulus_mismatch, "can only truncate downwards");
        return Series(k_, m2, std::vector<typename F::Elem>(c_.begin(), c_.begin() + m2));
    }
    // re-embed into a larger modulus (coefficients above the old modulus are
    // zero); this is the section k_m -> k_w used by the dilogarithm formulas,
    // not a ring map -- callers only use coefficients below the old modulus.
    Series extended(int m2) const {
        require(m2 >= modulus(), errc::modulus_mismatch, "extension must not lose precision");
        auto c = c_;
        c.resize(m2, k_.zero());
        return Series(k_, m2, std::move(c));
    }

    Series operator+(const Series& o) const {
        auto r = compat(o);
        for (int i = 0; i < r.modulus(); ++i) r.c_[i] = k_.add(c_[i], o.c_[i]);
        return r;
    }
    Series operator-(const Series& o) const {
        auto r = compat(o);
        for (int i = 0; i < r.modulus(); ++i) r.c_[i] = k_.sub(c_[i], o.c_[i]);
        return r;
    }
    Series operator-() const {
        Series r = *this;
        for (auto& c : r.c_) c = k_.neg(c);
        return r;
    }
    Series operator*(const Series& o) const {
        auto r = compat(o);
        int m = r.modulus();
        for (int i = 0; i < m; ++i) {
            if (k_.is_zero(c_[i])) continue;
            for (int j = 0; j + i < m; ++j) {
                if (k_.is_zero(o.c_[j])) continue;
                r.c_[i + j] = k_.add(r.c_[i + j], k_.mul(c_[i], o.c_[j]));
            }
        }
        return r;
    }
    Series inverse() const {
        require(is_unit(), errc::non_unit, "series is not a unit");
        Series r(k_, modulus());
        auto i0 = k_.inv(c_[0]);
        r.c_[0] = i0;
        for (int i = 1; i < modulus(); ++i) {
            auto s = k_.zero();
            for (int j = 1; j <= i; ++j) s = k_.add(s, k_.mul(c_[j], r.c_[i - j]));
            r.c_[i] = k_.neg(k_.mul(s, i0));
        }
        return r;
    }
    Series operator/(const Series& o) const { return *this * o.inverse(); }

    Series scalar_mul(const typename F::Elem& c) const {
        Series r = *this;
        for (auto& x : r.c_) x = k_.mul(x, c);
        return r;
    }

    Series pow(long e) const {
        Series base = e >= 0 ? *this : inverse();
        unsigned long n = static_cast<unsigned long>(e >= 0 ? e : -e);
        Series acc = constant(k_, k_.one(), modulus());
        while (n) {
            if (n & 1) acc = acc * base;
            base = base * base;
            n >>= 1;
        }
        return acc;
    }

    // t-derivative; stays in the same modulus (top coefficient zero)
    Series derivative() const {
        Series r(k_, modulus());
        for (int i = 1; i < modulus(); ++i)
            r.c_[i - 1] = k_.mul(c_[i], k_.from_int(i));
        return r;
    }

    // keep coefficients with index < a, zero above (the paper's q|_a)
    Series restrict_below(int a) const {
        Series r = *this;
        for (int i = a; i < r.modulus(); ++i) r.c_[i] = k_.zero();
        return r;
    }

    std::string str() const {
        std::string s;
        for (int i = 0; i < modulus(); ++i) {
            if (k_.is_zero(c_[i])) continue;
            if (!s.empty()) s += " + ";
            std::string c = k_.to_string(c_[i]);
            if (i == 0) { s += c; continue; }
            if (c == "1") c.clear();
            else c = "(" + c + ")*";
            s += c + "t" + (i > 1 ? "^" + std::to_string(i) : "");
        }
        if (s.empty()) s = "0";
        return s + " (mod t^" + std::to_string(modulus()) + ")";
    }

private:
    F k_{};
    std::vector<typename F::Elem> c_;

    static int check_m(int m) {
        require(m >= 1, errc::modulus_mismatch, "modulus must be >= 1");
        return m;
    }
    Series compat(const Series& o) const {
        require(modulus() == o.modulus(), errc::modulus_mismatch,
                "series moduli differ; truncate first");
        return Series(k_, modulus());
    }
};

// log(x / x(0)): additive in products, kills constants.
template <Field F>
Series<F> log_circ(const Series<F>& x) {
    const F& k = x.field();
    int m = x.modulus();
    require(x.is_unit(), errc::non_unit, "log_circ of a non-unit");
    long p = k.characteristic();
    require(p == 0 || m <= p, errc::char_precision,
            "log_circ in characteristic p needs modulus <= p");
    auto v = x.scalar_mul(k.inv(x.constant_term()));
    v.coeff_mut(0) = k.zero();  // v = x/x(0) - 1
    Series<F> out(k, m);
    Series<F> vk = Series<F>::constant(k, k.one(), m);
    for (int n = 1; n < m; ++n) {
        vk = vk * v;
        auto c = k.inv(k.from_int(n));
        if (n % 2 == 0) c = k.neg(c);
        out = out + vk.scalar_mul(c);
    }
    return out;
}

// exp of a nilpotent: u(0) must vanish; inverse of log_circ up to the constant.
template <Field F>
Series<F> exp_nil(const Series<F>& u) {
    const F& k = u.field();
    int m = u.modulus();
    require(k.is_zero(u.constant_term()), errc::non_nilpotent, "exp_nil needs u(0) = 0");
    long p = k.characteristic();
    require(p == 0 || m <= p, errc::char_precision,
            "exp_nil in characteristic p needs modulus <= p");
    Series<F> out = Series<F>::constant(k, k.one(), m);
    Series<F> uk = Series<F>::constant(k, k.one(), m);
    auto fact = k.one();
    for (int n = 1; n < m; ++n) {
        uk = uk * u;
        fact = k.mul(fact, k.from_int(n));
        out = out + uk.scalar_mul(k.inv(fact));
    }
    return out;
}

// the star action t -> lambda t (a ring automorphism for lambda invertible)
template <Field F>
Series<F> star_scale(const typename F::Elem& lambda, const Series<F>& x) {
    const F& k = x.field();
    require(!k.is_zero(lambda), errc::zero_scalar, "star action needs a nonzero scalar");
    Series<F> r = x;
    auto pw = k.one();
    for (int i = 1; i < x.modulus(); ++i) {
        pw = k.mul(pw, lambda);
        r.coeff_mut(i) = k.mul(r.coeff(i), pw);
    }
    return r;
}

// x = c * exp(u) with c = x(0); reconstructing is exact.
template <Field F>
struct UnitDecomposition {
    typename F::Elem constant;
    Series<F> exponent;
};

template <Field F>
UnitDecomposition<F> unit_decompose(const Series<F>& x) {
    return {x.constant_term(), log_circ(x)};
}

// i-th t-coefficient of log_circ; the coefficient functional ell_i.
template <Field F>
typename F::Elem ell(int i, const Series<F>& x) {
    require(i >= 1 && i < x.modulus(), errc::index_out_of_range, "ell index must satisfy 1 <= i < m");
    return log_circ(x).coeff(i);
}

// ---------------------------------------------------------------------------
// Newton lifting of a simple root of a z-polynomial with series coefficients
// ---------------------------------------------------------------------------

template <Field F>
Series<F> series_poly_eval(const std::vector<Series<F>>& f, const Series<F>& x) {
    require(!f.empty(), errc::zero_element, "empty polynomial");
    Series<F> r = f.back();
    for (size_t i = f.size() - 1; i-- > 0;) r = r * x + f[i];
    return r;
}

template <Field F>
std::vector<Series<F>> series_poly_deriv(const std::vector<Series<F>>& f) {
    std::vector<Series<F>> r;
    for (size_t i = 1; i < f.size(); ++i)
        r.push_back(f[i].scalar_mul(f[i].field().from_int(static_cast<long>(i))));
    if (r.empty() && !f.empty()) r.push_back(Series<F>(f[0].field(), f[0].modulus()));
    return r;
}

// f: polynomial in z with coefficients in K[t]/(t^N); r0: simple root of the
// reduction mod t.  Returns the unique lift r with f(r) = 0 and r(0) = r0.
template <Field F>
Series<F> newton_lift_root(const std::vector<Series<F>>& f, const typename F::Elem& r0) {
    require(!f.empty(), errc::zero_element, "newton_lift_root of the zero polynomial");
    const F& k = f[0].field();
    int N = f[0].modulus();
    Series<F> r = Series<F>::constant(k, r0, N);
    auto fp = series_poly_deriv(f);
    auto d0 = series_poly_eval(fp, r);
    require(!k.is_zero(d0.constant_term()), errc::multiple_root,
            "root is not simple: derivative vanishes at r0");
    require(k.is_zero(series_poly_eval(f, r).constant_term()), errc::multiple_root,
            "r0 is not a root of the reduction");
    for (int it = 0; it < N + 2; ++it) {
        auto val = series_poly_eval(f, r);
        if (val.is_zero()) return r;
        r = r - val / series_poly_eval(fp, r);
    }
    auto val = series_poly_eval(f, r);
    require(val.is_zero(), errc::internal, "newton iteration failed to converge");
    return r;
}

} // namespace adilog
