#pragma once

// Characteristic-p finite polylogarithms over F = F_{p^e}, p >= 5:
// Kontsevich's 1 1/2-logarithm, the star-weight-1 additive dilogarithm on
// F[t]/(t^2), and the higher-modulus diagram functional on F[t]/(t^p).
// Everything here stays integral: no canonical forms, evaluation only.

#include "../bloch/wedge.hpp"
#include "../core/series.hpp"

namespace adilog {

class CharPContext {
public:
    explicit CharPContext(FiniteField f) : field_(std::move(f)) {
        require(field_.p() >= 5, errc::unsupported_field, "char-p dilogarithms need p >= 5");
    }
    const FiniteField& field() const { return field_; }
    long p() const { return field_.p(); }

    Series<FiniteField> ring_elem(int m, std::vector<FiniteField::Elem> coeffs) const {
        require(m == 2 || m == static_cast<int>(field_.p()), errc::modulus_mismatch,
                "char-p moduli are limited to {2, p}");
        return Series<FiniteField>(field_, m, std::move(coeffs));
    }

private:
    FiniteField field_;
};

// Kontsevich's finite logarithm: sum_{1<=k<p} s^k / k
inline FiniteField::Elem finite_log(const FiniteField& F, const FiniteField::Elem& s) {
    auto acc = F.zero();
    auto sk = F.one();
    for (long k = 1; k < F.p(); ++k) {
        sk = F.mul(sk, s);
        acc = F.add(acc, F.mul(sk, F.inv(F.from_int(k))));
    }
    return acc;
}

// Li_2([s + alpha t]) = (alpha / (s(1-s))) sum_{1<=k<p} s^{k/p} / k,
// with s^{1/p} computed by the inverse Frobenius.
inline FiniteField::Elem finite_dilog(const FiniteField& F, const Series<FiniteField>& x) {
    require(x.modulus() == 2, errc::modulus_mismatch, "finite_dilog lives on F[t]/(t^2)");
    require(x.is_flat(), errc::not_flat, "finite_dilog needs s(1-s) != 0");
    auto s = x.constant_term();
    auto alpha = x.coeff(1);
    auto pre = F.div(alpha, F.mul(s, F.sub(F.one(), s)));
    return F.mul(pre, finite_log(F, F.pth_root(s)));
}

// -1/2 (sum_{1<=a<p} a (ell_a ^ ell_{p-a}))(delta(x)) ^{1/p} on F[t]/(t^p)
inline FiniteField::Elem diagram_functional(const FiniteField& F, const Series<FiniteField>& x) {
    require(x.modulus() == static_cast<int>(F.p()), errc::modulus_mismatch,
            "diagram_functional lives on F[t]/(t^p)");
    require(x.is_flat(), errc::not_flat, "diagram_functional needs x(0)(1-x(0)) != 0");
    long p = F.p();
    auto one = Series<FiniteField>::constant(F, F.one(), static_cast<int>(p));
    auto la = log_circ(one - x);  // log of 1-x
    auto lb = log_circ(x);
    auto acc = F.zero();
    for (long a = 1; a < p; ++a) {
        auto term = F.sub(F.mul(la.coeff(static_cast<int>(a)), lb.coeff(static_cast<int>(p - a))),
                          F.mul(lb.coeff(static_cast<int>(a)), la.coeff(static_cast<int>(p - a))));
        acc = F.add(acc, F.mul(F.from_int(a), term));
    }
    auto half = F.inv(F.from_int(2));
    return F.pth_root(F.neg(F.mul(half, acc)));
}

} // namespace adilog
