#pragma once

// Cathelineau's exact sequence maps: D(<a>) = a (x) a + (1-a) (x) (1-a) into
// K (x) K^x, and L(a (x) b) = a db/b into Omega^1.  beta_2 combinations are
// K-linear in the symbol coefficients; the scalar action multiplies the left
// tensor slot.

#include <map>

#include "../bloch/canonical.hpp"
#include "../core/differential.hpp"

namespace adilog {

// K-linear combination of symbols <a>, a in K-flat
template <Field F>
struct Beta2Sum {
    std::vector<std::pair<typename F::Elem, typename F::Elem>> terms;  // (coefficient, a)

    void add(const F& k, const typename F::Elem& c, const typename F::Elem& a) {
        if (k.is_zero(c)) return;
        require(!k.is_zero(a) && !k.is_zero(k.sub(k.one(), a)), errc::not_flat,
                "beta_2 symbol needs a(1-a) != 0");
        for (auto it = terms.begin(); it != terms.end(); ++it) {
            if (k.eq(it->second, a)) {
                it->first = k.add(it->first, c);
                if (k.is_zero(it->first)) terms.erase(it);
                return;
            }
        }
        terms.emplace_back(c, a);
    }
};

// element of K (x)_Z K^x as a raw term list (scalar, unit)
template <Field F>
struct TensorKUnits {
    std::vector<std::pair<typename F::Elem, typename F::Elem>> terms;

    void add(const F& k, const typename F::Elem& s, const typename F::Elem& u) {
        if (k.is_zero(s)) return;
        require(!k.is_zero(u), errc::zero_unit, "tensor slot must be a unit");
        terms.emplace_back(s, u);
    }
};

template <Field F>
TensorKUnits<F> cathelineau_D(const F& k, const Beta2Sum<F>& xi) {
    TensorKUnits<F> out;
    for (const auto& [c, a] : xi.terms) {
        auto oma = k.sub(k.one(), a);
        out.add(k, k.mul(c, a), a);
        out.add(k, k.mul(c, oma), oma);
    }
    return out;
}

template <Field F>
Differential<F> cathelineau_L(const F& k, const TensorKUnits<F>& tau) {
    Differential<F> out(k, 1);
    for (const auto& [s, u] : tau.terms) out = out + dlog(k, u).scalar_mul(s);
    return out;
}

// Canonical coordinates of K (x) K^x over the factor basis of the unit slot
// (K = Q or Q(z); torsion from signs dies because the left slot is divisible).
template <class K>
std::map<UKey, typename K::Elem> tensor_canonical(const K& k, const TensorKUnits<K>& tau)
    requires(std::same_as<K, Rationals> || std::same_as<K, QxField>)
{
    std::map<UKey, typename K::Elem> out;
    auto acc = [&](UKey key, const typename K::Elem& v) {
        if (k.is_zero(v)) return;
        auto [it, fresh] = out.emplace(std::move(key), v);
        if (!fresh) {
            it->second = k.add(it->second, v);
            if (k.is_zero(it->second)) out.erase(it);
        }
    };
    for (const auto& [s, u] : tau.terms) {
        auto f = factor_unit(k, u);
        for (auto& [p, e] : f.primes)
            acc(UKey{.tag = UKey::MulPrime, .p = p}, k.mul(s, k.from_int(e)));
        for (auto& [q, e] : f.irreducibles)
            acc(UKey{.tag = UKey::MulIrred, .q = q}, k.mul(s, k.from_int(e)));
    }
    return out;
}

template <class K>
bool tensor_is_zero(const K& k, const TensorKUnits<K>& tau)
    requires(std::same_as<K, Rationals> || std::same_as<K, QxField>)
{
    return tensor_canonical(k, tau).empty();
}

// the 4-term combination <p> - <q> + p<q/p> + (1-p)<(1-q)/(1-p)>
template <Field F>
Beta2Sum<F> four_term(const F& k, const typename F::Elem& p, const typename F::Elem& q) {
    require(!k.eq(p, q), errc::not_in_general_position, "4-term relation needs p != q");
    Beta2Sum<F> s;
    auto one = k.one();
    s.add(k, one, p);
    s.add(k, k.neg(one), q);
    s.add(k, p, k.div(q, p));
    s.add(k, k.sub(one, p), k.div(k.sub(one, q), k.sub(one, p)));
    return s;
}

} // namespace adilog
