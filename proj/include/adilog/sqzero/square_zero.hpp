#pragma once

// Square-zero extensions A = Abar + I (I^2 = 0, I free with named basis),
// splittings tau given by derivations, the splitting-dependent dilogarithm
// li_{2,tau} valued in S^3 I, and the homotopy h_f(tau_1,tau_2) = -3/2 H_phi
// comparing dilogarithm branches along an algebra map.

#include <array>
#include <functional>
#include <map>

#include "../bloch/five_term.hpp"
#include "../bloch/wedge.hpp"
#include "../core/poly.hpp"

namespace adilog {

template <Field F>
struct SqAlgebra {
    F base;
    int rank = 1;

    bool same(const SqAlgebra& o) const { return rank == o.rank && base.same(o.base); }
};

template <Field F>
struct SqElem {
    SqAlgebra<F> alg;
    typename F::Elem a;                   // reduced part
    std::vector<typename F::Elem> nil;    // I-coordinates, size = rank

    static SqElem make(const SqAlgebra<F>& A, typename F::Elem a0,
                       std::vector<typename F::Elem> n = {}) {
        n.resize(A.rank, A.base.zero());
        return {A, std::move(a0), std::move(n)};
    }
    static SqElem scalar(const SqAlgebra<F>& A, typename F::Elem a0) {
        return make(A, std::move(a0));
    }

    bool is_unit() const { return !alg.base.is_zero(a); }
    bool is_flat() const {
        const F& k = alg.base;
        return is_unit() && !k.is_zero(k.sub(k.one(), a));
    }
    bool is_zero() const {
        const F& k = alg.base;
        if (!k.is_zero(a)) return false;
        for (const auto& c : nil)
            if (!k.is_zero(c)) return false;
        return true;
    }

    SqElem operator+(const SqElem& o) const {
        const F& k = alg.base;
        SqElem r = *this;
        r.a = k.add(a, o.a);
        for (int i = 0; i < alg.rank; ++i) r.nil[i] = k.add(nil[i], o.nil[i]);
        return r;
    }
    SqElem operator-(const SqElem& o) const {
        const F& k = alg.base;
        SqElem r = *this;
        r.a = k.sub(a, o.a);
        for (int i = 0; i < alg.rank; ++i) r.nil[i] = k.sub(nil[i], o.nil[i]);
        return r;
    }
    SqElem operator*(const SqElem& o) const {
        const F& k = alg.base;
        SqElem r = *this;
        r.a = k.mul(a, o.a);
        for (int i = 0; i < alg.rank; ++i)
            r.nil[i] = k.add(k.mul(a, o.nil[i]), k.mul(o.a, nil[i]));
        return r;
    }
    SqElem inverse() const {
        const F& k = alg.base;
        require(is_unit(), errc::non_unit, "inverse of a non-unit in a square-zero extension");
        SqElem r = *this;
        r.a = k.inv(a);
        auto m = k.neg(k.mul(r.a, r.a));  // -1/a^2
        for (int i = 0; i < alg.rank; ++i) r.nil[i] = k.mul(nil[i], m);
        return r;
    }
    bool operator==(const SqElem& o) const {
        const F& k = alg.base;
        if (!k.eq(a, o.a)) return false;
        for (int i = 0; i < alg.rank; ++i)
            if (!k.eq(nil[i], o.nil[i])) return false;
        return true;
    }
};

template <Field F>
SqElem<F> one_like(const SqElem<F>& x) {
    return SqElem<F>::scalar(x.alg, x.alg.base.one());
}

// splitting tau(a) = (a, derive(a) * theta_gen): a derivation valued in I,
// determined by the image of the base variable (zero over Q / number fields)
template <Field F>
struct Splitting {
    std::vector<typename F::Elem> theta_gen;  // theta(x), size = rank

    static Splitting zero(const SqAlgebra<F>& A) {
        return {std::vector<typename F::Elem>(A.rank, A.base.zero())};
    }
    std::vector<typename F::Elem> theta(const SqAlgebra<F>& A, const typename F::Elem& abar) const {
        const F& k = A.base;
        auto d = k.derive(abar);
        std::vector<typename F::Elem> out(A.rank, k.zero());
        for (int i = 0; i < A.rank; ++i) out[i] = k.mul(d, theta_gen[i]);
        return out;
    }
    SqElem<F> tau(const SqAlgebra<F>& A, const typename F::Elem& abar) const {
        return SqElem<F>::make(A, abar, theta(A, abar));
    }
};

// ---------------------------------------------------------------------------
// symmetric squares and cubes of I in ordered-monomial coordinates
// ---------------------------------------------------------------------------

template <Field F>
struct SymSquare {
    std::map<std::array<int, 2>, typename F::Elem> c;

    void add(const F& k, std::array<int, 2> m, const typename F::Elem& v) {
        if (k.is_zero(v)) return;
        if (m[0] > m[1]) std::swap(m[0], m[1]);
        auto [it, fresh] = c.emplace(m, v);
        if (!fresh) {
            it->second = k.add(it->second, v);
            if (k.is_zero(it->second)) c.erase(it);
        }
    }
    bool is_zero() const { return c.empty(); }
};

template <Field F>
struct SymCube {
    std::map<std::array<int, 3>, typename F::Elem> c;

    void add(const F& k, std::array<int, 3> m, const typename F::Elem& v) {
        if (k.is_zero(v)) return;
        std::sort(m.begin(), m.end());
        auto [it, fresh] = c.emplace(m, v);
        if (!fresh) {
            it->second = k.add(it->second, v);
            if (k.is_zero(it->second)) c.erase(it);
        }
    }
    void add(const F& k, const SymCube& o) {
        for (const auto& [m, v] : o.c) add(k, m, v);
    }
    void scale(const F& k, const typename F::Elem& s) {
        if (k.is_zero(s)) {
            c.clear();
            return;
        }
        for (auto& [m, v] : c) v = k.mul(v, s);
    }
    bool is_zero() const { return c.empty(); }
    bool eq(const SymCube& o) const { return c == o.c; }
};

template <Field F>
SymSquare<F> sym_mul(const F& k, const std::vector<typename F::Elem>& x,
                     const std::vector<typename F::Elem>& y) {
    SymSquare<F> out;
    for (int i = 0; i < static_cast<int>(x.size()); ++i)
        for (int j = 0; j < static_cast<int>(y.size()); ++j)
            out.add(k, {i, j}, k.mul(x[i], y[j]));
    return out;
}

template <Field F>
SymCube<F> sym_mul(const F& k, const std::vector<typename F::Elem>& x, const SymSquare<F>& s) {
    SymCube<F> out;
    for (int i = 0; i < static_cast<int>(x.size()); ++i) {
        if (k.is_zero(x[i])) continue;
        for (const auto& [m, v] : s.c) out.add(k, {i, m[0], m[1]}, k.mul(x[i], v));
    }
    return out;
}

template <Field F>
SymCube<F> sym_cube(const F& k, const std::vector<typename F::Elem>& x) {
    return sym_mul(k, x, sym_mul(k, x, x));
}

// ---------------------------------------------------------------------------
// li_{2,tau}([a]) = -1/2 (a - tau(abar))^3 / (abar^2 (abar - 1)^2) in S^3 I
// ---------------------------------------------------------------------------

template <Field F>
SymCube<F> li2_tau(const SqAlgebra<F>& A, const Splitting<F>& tau, const SqElem<F>& x) {
    const F& k = A.base;
    require(x.is_flat(), errc::not_flat, "li2_tau needs abar(1-abar) invertible");
    auto alpha = (x - tau.tau(A, x.a)).nil;
    auto am1 = k.sub(x.a, k.one());
    auto den = k.mul(k.mul(x.a, x.a), k.mul(am1, am1));
    auto cube = sym_cube(k, alpha);
    cube.scale(k, k.neg(k.div(k.inv(k.from_int(2)), den)));
    return cube;
}

template <Field F>
SymCube<F> li2_tau(const SqAlgebra<F>& A, const Splitting<F>& tau, const FormalSum<SqElem<F>>& xi) {
    const F& k = A.base;
    SymCube<F> out;
    for (const auto& [c, g] : xi.terms) {
        auto v = li2_tau(A, tau, g);
        v.scale(k, k.from_rat(c));
        out.add(k, v);
    }
    return out;
}

// ---------------------------------------------------------------------------
// algebra maps and the homotopy
// ---------------------------------------------------------------------------

template <Field F>
struct AlgMap {
    SqAlgebra<F> from, to;
    std::function<typename F::Elem(const typename F::Elem&)> fbar;  // base field map
    std::vector<std::vector<typename F::Elem>> f_I;  // images of eps_i^{(1)} in I_2
    std::vector<typename F::Elem> theta_f_gen;       // derivation part on the base variable

    static AlgMap identity(const SqAlgebra<F>& A) {
        AlgMap m;
        m.from = m.to = A;
        m.fbar = [](const typename F::Elem& e) { return e; };
        m.f_I.assign(A.rank, {});
        for (int i = 0; i < A.rank; ++i) {
            m.f_I[i].assign(A.rank, A.base.zero());
            m.f_I[i][i] = A.base.one();
        }
        m.theta_f_gen.assign(A.rank, A.base.zero());
        return m;
    }

    std::vector<typename F::Elem> theta_f(const typename F::Elem& abar) const {
        const F& k = to.base;
        auto d = fbar(from.base.derive(abar));
        std::vector<typename F::Elem> out(to.rank, k.zero());
        for (int i = 0; i < to.rank; ++i) out[i] = k.mul(d, theta_f_gen[i]);
        return out;
    }
    std::vector<typename F::Elem> map_I(const std::vector<typename F::Elem>& alpha) const {
        const F& k = to.base;
        std::vector<typename F::Elem> out(to.rank, k.zero());
        for (int i = 0; i < from.rank; ++i) {
            auto ci = fbar(alpha[i]);
            for (int j = 0; j < to.rank; ++j) out[j] = k.add(out[j], k.mul(ci, f_I[i][j]));
        }
        return out;
    }
    SqElem<F> apply(const SqElem<F>& x) const {
        auto img = SqElem<F>::make(to, fbar(x.a), theta_f(x.a));
        auto fi = map_I(x.nil);
        const F& k = to.base;
        for (int j = 0; j < to.rank; ++j) img.nil[j] = k.add(img.nil[j], fi[j]);
        return img;
    }
    // induced map on S^3: coefficients through fbar, basis through f_I
    SymCube<F> push_cube(const SymCube<F>& s) const {
        const F& k = to.base;
        SymCube<F> out;
        for (const auto& [m, v] : s.c) {
            // f(eps_a eps_b eps_c) expanded over the target monomials
            auto vv = fbar(v);
            for (int i = 0; i < to.rank; ++i) {
                if (k.is_zero(f_I[m[0]][i])) continue;
                for (int j = 0; j < to.rank; ++j) {
                    if (k.is_zero(f_I[m[1]][j])) continue;
                    for (int l = 0; l < to.rank; ++l) {
                        auto w = k.mul(vv, k.mul(f_I[m[0]][i], k.mul(f_I[m[1]][j], f_I[m[2]][l])));
                        out.add(k, {i, j, l}, w);
                    }
                }
            }
        }
        return out;
    }
};

// phi on I_1 from chosen basis images: phi(sum c_i eps_i) =
//   sum theta(c_i) . f(eps_i) + fbar(c_i) phi(eps_i)
template <Field F>
struct PhiData {
    std::vector<SymSquare<F>> basis_images;  // default: zeros

    static PhiData zeros(const SqAlgebra<F>& from) {
        PhiData p;
        p.basis_images.assign(from.rank, SymSquare<F>{});
        return p;
    }
};

namespace detail {

template <Field F>
std::vector<typename F::Elem> theta_of(const AlgMap<F>& f, const Splitting<F>& tau1,
                                       const Splitting<F>& tau2, const typename F::Elem& abar) {
    // theta(a) = f(tau_1(a)) - tau_2(fbar(a))
    auto lhs = f.apply(tau1.tau(f.from, abar));
    auto rhs = tau2.tau(f.to, f.fbar(abar));
    return (lhs - rhs).nil;
}

template <Field F>
SymSquare<F> phi_of(const AlgMap<F>& f, const Splitting<F>& tau1, const Splitting<F>& tau2,
                    const PhiData<F>& phi, const std::vector<typename F::Elem>& alpha) {
    const F& k = f.to.base;
    SymSquare<F> out;
    for (int i = 0; i < f.from.rank; ++i) {
        if (f.from.base.is_zero(alpha[i])) continue;
        auto th = theta_of(f, tau1, tau2, alpha[i]);
        auto fei = f.f_I[i];
        auto part = sym_mul(k, th, fei);
        for (const auto& [m, v] : part.c) out.add(k, m, v);
        auto fc = f.fbar(alpha[i]);
        for (const auto& [m, v] : phi.basis_images[i].c) out.add(k, m, k.mul(fc, v));
    }
    return out;
}

} // namespace detail

// h_f(tau_1,tau_2) = -3/2 H_phi restricted to F(Lambda^2 A_1^x)^o; the wedge
// must be presented as delta of a B_2^o combination (every term is decomposed
// through tau_1, the residual tau ^ tau block is zero in Lambda^2 (x) Q).
template <Field F>
SymCube<F> homotopy_h(const AlgMap<F>& f, const Splitting<F>& tau1, const Splitting<F>& tau2,
                      const Wedge2<SqElem<F>>& w, const PhiData<F>& phi) {
    const F& k2 = f.to.base;
    SymCube<F> out;
    for (const auto& term : w.terms) {
        const auto& u = term.a;
        const auto& v = term.b;
        require(u.is_unit() && v.is_unit(), errc::zero_unit, "wedge slots must be units");
        auto alpha = (u * tau1.tau(f.from, u.a).inverse()).nil;  // u = tau(ubar)(1+alpha)
        auto beta = (v * tau1.tau(f.from, v.a).inverse()).nil;
        auto phia = detail::phi_of(f, tau1, tau2, phi, alpha);
        auto phib = detail::phi_of(f, tau1, tau2, phi, beta);
        auto fa = f.map_I(alpha);
        auto fb = f.map_I(beta);
        auto thu = detail::theta_of(f, tau1, tau2, u.a);
        auto thv = detail::theta_of(f, tau1, tau2, v.a);
        auto fu_inv = k2.inv(f.fbar(u.a));
        auto fv_inv = k2.inv(f.fbar(v.a));
        SymCube<F> local;
        // (1+alpha) ^ (1+beta) -> f(alpha) phi(beta) - phi(alpha) f(beta)
        local.add(k2, sym_mul(k2, fa, phib));
        {
            auto t2 = sym_mul(k2, fb, phia);
            t2.scale(k2, k2.neg(k2.one()));
            local.add(k2, t2);
        }
        // tau(ubar) ^ (1+beta) = -(1+beta) ^ tau(ubar) -> + phi(beta) theta(ubar)/fbar(ubar)
        {
            std::vector<typename F::Elem> scaled(thu);
            for (auto& c : scaled) c = k2.mul(c, fu_inv);
            local.add(k2, sym_mul(k2, scaled, phib));
        }
        // (1+alpha) ^ tau(vbar) -> - phi(alpha) theta(vbar)/fbar(vbar)
        {
            std::vector<typename F::Elem> scaled(thv);
            for (auto& c : scaled) c = k2.mul(c, fv_inv);
            auto t3 = sym_mul(k2, scaled, phia);
            t3.scale(k2, k2.neg(k2.one()));
            local.add(k2, t3);
        }
        local.scale(k2, k2.from_rat(term.c * Rat(-3, 2)));
        out.add(k2, local);
    }
    return out;
}

// checked entry point: w = delta(xi) for xi in B_2^o(A_1), presented so that
// the reduction of xi vanishes as a formal sum
template <Field F>
SymCube<F> homotopy_h(const AlgMap<F>& f, const Splitting<F>& tau1, const Splitting<F>& tau2,
                      const FormalSum<SqElem<F>>& xi, const PhiData<F>& phi) {
    std::vector<std::pair<Rat, typename F::Elem>> reduction;
    const F& k = f.from.base;
    for (const auto& [c, g] : xi.terms) {
        bool merged = false;
        for (auto& [cc, gg] : reduction)
            if (k.eq(gg, g.a)) {
                cc += c;
                merged = true;
                break;
            }
        if (!merged) reduction.emplace_back(c, g.a);
    }
    for (const auto& [c, g] : reduction)
        require(c == 0, errc::not_in_filtration,
                "combination is not presented in B_2^o: reduction does not cancel");
    return homotopy_h(f, tau1, tau2, delta(xi), phi);
}

// f applied to a formal sum generator-wise
template <Field F>
FormalSum<SqElem<F>> map_sum(const AlgMap<F>& f, const FormalSum<SqElem<F>>& xi) {
    FormalSum<SqElem<F>> out;
    for (const auto& [c, g] : xi.terms) out.add(c, f.apply(g));
    return out;
}

} // namespace adilog
