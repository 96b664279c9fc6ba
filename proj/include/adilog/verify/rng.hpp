#pragma once

// Deterministic random generation for the property suites.  mt19937_64 output
// is standard-mandated, so identical seeds give identical streams on every
// platform.  Flat elements are drawn by rejection from small-height rationals
// (or uniform residues in finite fields); rejections are counted so suites
// can report their bounds.

#include <random>

#include "../core/series.hpp"

namespace adilog {

class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t raw() { return eng_(); }
    // inclusive range; modulo bias is irrelevant for test-data generation
    long uniform(long lo, long hi) {
        return lo + static_cast<long>(eng_() % static_cast<uint64_t>(hi - lo + 1));
    }
    Rat small_rat(long h = 9) { return Rat(uniform(-h, h), uniform(1, h)); }
    Rat nonzero_rat(long h = 9) {
        for (;;) {
            auto q = small_rat(h);
            if (q != 0) return q;
            ++rejected_;
        }
    }

    long rejected() const { return rejected_; }
    void count_rejection() { ++rejected_; }

private:
    std::mt19937_64 eng_;
    long rejected_ = 0;
};

template <Field F>
typename F::Elem random_elem(const F& k, Rng& rng, long h = 9);

inline Rat random_elem(const Rationals&, Rng& rng, long h = 9) { return rng.small_rat(h); }

inline NumberField::Elem random_elem(const NumberField& k, Rng& rng, long h = 9) {
    std::vector<Rat> c(k.degree());
    for (auto& x : c) x = rng.small_rat(h);
    return k.from_coeffs(std::move(c));
}

inline FiniteField::Elem random_elem(const FiniteField& k, Rng& rng, long = 9) {
    std::vector<long> c(k.ext_degree());
    for (auto& x : c) x = rng.uniform(0, k.p() - 1);
    while (!c.empty() && c.back() == 0) c.pop_back();
    return c;
}

template <Field B>
typename RatFuncField<B>::Elem random_elem(const RatFuncField<B>& k, Rng& rng, long h = 9) {
    // low-degree polynomial over the base; enough spread for identity checks
    Poly<B> p(static_cast<size_t>(rng.uniform(1, 3)) + 1, k.base().zero());
    for (auto& c : p) c = random_elem(k.base(), rng, h);
    poly_trim(k.base(), p);
    return k.from_poly(std::move(p));
}

// x with x(1-x) a unit
template <Field F>
typename F::Elem random_flat(const F& k, Rng& rng, long h = 9) {
    for (;;) {
        auto x = random_elem(k, rng, h);
        if (!k.is_zero(x) && !k.is_zero(k.sub(k.one(), x))) return x;
        rng.count_rejection();
    }
}

template <Field F>
Series<F> random_series(const F& k, Rng& rng, int m, long h = 9) {
    Series<F> s(k, m);
    for (int i = 0; i < m; ++i) s.coeff_mut(i) = random_elem(k, rng, h);
    return s;
}

template <Field F>
Series<F> random_flat_series(const F& k, Rng& rng, int m, long h = 9) {
    auto s = random_series(k, rng, m, h);
    s.coeff_mut(0) = random_flat(k, rng, h);
    return s;
}

// x, y flat with x - y a unit: the five-term general position condition
template <Field F>
std::pair<Series<F>, Series<F>> random_five_term_pair(const F& k, Rng& rng, int m, long h = 9) {
    for (;;) {
        auto x = random_flat_series(k, rng, m, h);
        auto y = random_flat_series(k, rng, m, h);
        if ((x - y).is_unit()) return {x, y};
        rng.count_rejection();
    }
}

} // namespace adilog
