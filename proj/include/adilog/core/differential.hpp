#pragma once

// Kaehler differentials relative to the prime field, in normalized
// coordinates.  Over K[t]/(t^m) an element is a*dx + b*dt with a mod t^m and
// b mod t^{m-1} (the relation m t^{m-1} dt = 0; for m = 2 this is t dt = 0).
// Over a plain field (m = 1) only the dx part survives, and it is zero unless
// the field has a variable to differentiate by (rational function fields).

#include "series.hpp"

namespace adilog {

template <Field F>
class Differential {
public:
    explicit Differential(F k, int m = 1)
        : dx_(k, m), dt_(k, std::max(1, m - 1)), m_(m) {
        require(m == 1 || k.characteristic() == 0, errc::unsupported_ring,
                "series differentials are char-0 only");
    }
    Differential(Series<F> dx_part, Series<F> dt_part)
        : dx_(std::move(dx_part)), dt_(std::move(dt_part)), m_(dx_.modulus()) {
        require(dt_.modulus() == std::max(1, m_ - 1), errc::modulus_mismatch,
                "dt part must live mod t^{m-1}");
        require(m_ > 1 || dt_.is_zero(), errc::unsupported_ring, "no dt over a plain field");
    }

    const F& field() const { return dx_.field(); }
    int modulus() const { return m_; }
    const Series<F>& dx() const { return dx_; }
    const Series<F>& dt() const { return dt_; }

    bool is_zero() const { return dx_.is_zero() && dt_.is_zero(); }
    bool operator==(const Differential& o) const { return dx_ == o.dx_ && dt_ == o.dt_; }

    Differential operator+(const Differential& o) const { return {dx_ + o.dx_, dt_ + o.dt_}; }
    Differential operator-(const Differential& o) const { return {dx_ - o.dx_, dt_ - o.dt_}; }
    Differential operator-() const { return {-dx_, -dt_}; }

    // module action of the ring on its differentials
    Differential mul(const Series<F>& u) const {
        auto dxp = dx_ * u;
        auto dtp = dt_ * u.truncated(dt_.modulus());
        return {std::move(dxp), std::move(dtp)};
    }
    Differential scalar_mul(const typename F::Elem& c) const {
        return {dx_.scalar_mul(c), dt_.scalar_mul(c)};
    }

    std::string str() const {
        std::string s = "(" + dx_.str() + ") dx";
        if (m_ > 1) s += " + (" + dt_.str() + ") dt";
        return s;
    }

private:
    Series<F> dx_, dt_;
    int m_;
};

// d(u) for u in K[t]/(t^m): coefficientwise field derivation in the dx slot,
// t-derivative truncated mod t^{m-1} in the dt slot.
template <Field F>
Differential<F> d_total(const Series<F>& u) {
    const F& k = u.field();
    int m = u.modulus();
    Series<F> dx(k, m);
    for (int i = 0; i < m; ++i) dx.coeff_mut(i) = k.derive(u.coeff(i));
    Series<F> dt(k, std::max(1, m - 1));
    if (m > 1) dt = u.derivative().truncated(m - 1);
    return {std::move(dx), std::move(dt)};
}

template <Field F>
Differential<F> d_total(const F& k, const typename F::Elem& a) {
    return d_total(Series<F>::constant(k, a, 1));
}

template <Field F>
Differential<F> dlog(const Series<F>& u) {
    require(u.is_unit(), errc::zero_unit, "dlog of a non-unit");
    return d_total(u).mul(u.inverse());
}

template <Field F>
Differential<F> dlog(const F& k, const typename F::Elem& a) {
    require(!k.is_zero(a), errc::zero_unit, "dlog of zero");
    auto da = k.derive(a);
    return Differential<F>(Series<F>::constant(k, k.div(da, a), 1), Series<F>(k, 1));
}

} // namespace adilog
