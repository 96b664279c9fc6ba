#pragma once

// Formal Q-linear combinations of generators [x] with x in A-flat (x and 1-x
// units).  Like generators merge, zero coefficients drop.  The char-p mode
// simply keeps all coefficients integral; nothing here tensors with Q.

#include <vector>

#include "../core/errors.hpp"
#include "../core/rational.hpp"
#include "../core/series.hpp"

namespace adilog {

template <Field F>
Series<F> one_like(const Series<F>& x) {
    return Series<F>::constant(x.field(), x.field().one(), x.modulus());
}

template <class T>
concept BlochRing = requires(const T a, const T b) {
    { a + b } -> std::same_as<T>;
    { a - b } -> std::same_as<T>;
    { a * b } -> std::same_as<T>;
    { a.inverse() } -> std::same_as<T>;
    { a.is_unit() } -> std::convertible_to<bool>;
    { a.is_flat() } -> std::convertible_to<bool>;
    { a == b } -> std::convertible_to<bool>;
    { one_like(a) } -> std::same_as<T>;
};

template <class T>
struct FormalSum {
    std::vector<std::pair<Rat, T>> terms;

    FormalSum() = default;
    explicit FormalSum(const T& gen) { add(Rat(1), gen); }

    void add(const Rat& c, const T& g) {
        if (c == 0) return;
        require(g.is_flat(), errc::not_flat, "generator violates the flat condition");
        for (auto it = terms.begin(); it != terms.end(); ++it) {
            if (it->second == g) {
                it->first += c;
                if (it->first == 0) terms.erase(it);
                return;
            }
        }
        terms.emplace_back(c, g);
    }
    void add(const FormalSum& o) {
        for (const auto& [c, g] : o.terms) add(c, g);
    }
    void add_scaled(const Rat& s, const FormalSum& o) {
        for (const auto& [c, g] : o.terms) add(s * c, g);
    }
    FormalSum operator+(const FormalSum& o) const {
        FormalSum r = *this;
        r.add(o);
        return r;
    }
    FormalSum operator-(const FormalSum& o) const {
        FormalSum r = *this;
        r.add_scaled(Rat(-1), o);
        return r;
    }
    bool empty() const { return terms.empty(); }
    size_t size() const { return terms.size(); }
};

// generator-wise image under a map of the underlying rings
template <class T, class U, class Fn>
FormalSum<U> map_generators(const FormalSum<T>& s, Fn&& f) {
    FormalSum<U> out;
    for (const auto& [c, g] : s.terms) out.add(c, f(g));
    return out;
}

} // namespace adilog
