#include <catch2/catch_amalgamated.hpp>

#include "adilog/bloch/wedge.hpp"
#include "adilog/cycle/cycle.hpp"
#include "adilog/verify/rng.hpp"

using namespace adilog;

namespace {
constexpr int N = 6;
Rationals Q;

QSeries qs(std::initializer_list<Rat> cs) {
    std::vector<Rat> v(cs);
    v.resize(N, Rat(0));
    return QSeries(Q, N, std::move(v));
}

struct CoordData {
    QSeries c;                         // leading constant
    std::vector<QSeries> zero_roots;   // numerator roots
    std::vector<QSeries> pole_roots;   // denominator roots
};

RatFuncQ build_coord(const CoordData& d) {
    SPoly num{d.c};
    auto one = QSeries::constant(Q, Rat(1), N);
    for (const auto& r : d.zero_roots) num = RatFuncQ::sp_mul(num, {-r, one});
    SPoly den{one};
    for (const auto& r : d.pole_roots) den = RatFuncQ::sp_mul(den, {-r, one});
    return RatFuncQ(num, den);
}

// deg-matched coordinates with distinct small-integer reduction roots
std::array<CoordData, 3> random_cycle_data(Rng& rng) {
    std::array<CoordData, 3> d;
    std::set<long> used;
    auto fresh_root = [&]() {
        for (;;) {
            long r = rng.uniform(-40, 40);
            if (used.insert(r).second) return Rat(r);
        }
    };
    for (int i = 0; i < 3; ++i) {
        d[i].c = qs({Rat(rng.uniform(2, 9)), rng.small_rat(5)});
        d[i].zero_roots = {qs({fresh_root(), rng.small_rat(5)})};
        d[i].pole_roots = {qs({fresh_root(), rng.small_rat(5)})};
    }
    return d;
}

ParamCycle cycle_of(const std::array<CoordData, 3>& d) {
    return ParamCycle(build_coord(d[0]), build_coord(d[1]), build_coord(d[2]));
}
} // namespace

TEST_CASE("boundary basics") {
    // projective version of the (z, z+2, z+3) example: the face y1 = 0 meets
    // the cycle at z = 0 where the remaining coordinates are (2, 3), sign +1
    auto z = RatFuncQ::gen(N);
    auto y1 = z / (z - RatFuncQ::constant(Rat(9), N));
    auto y2 = (z + RatFuncQ::constant(Rat(2), N)) / (z + RatFuncQ::constant(Rat(1), N));
    auto y3 = (z + RatFuncQ::constant(Rat(3), N)) *
              (z - RatFuncQ::constant(Rat(2), N)).inverse() * RatFuncQ::constant(Rat(-2), N);
    auto pts = boundary(ParamCycle(y1, y2, y3));
    bool found = false;
    for (const auto& bp : pts)
        if (bp.face == 1 && bp.zero_face && !bp.at_infinity) {
            found = true;
            CHECK(bp.sign == 1);
            CHECK(bp.w[0] == NFSeries::constant(bp.kp, bp.kp.from_int(2), N));
            CHECK(bp.w[1] == NFSeries::constant(bp.kp, bp.kp.from_int(3), N));
        }
    CHECK(found);
    CHECK(pts.size() == 6);
}

TEST_CASE("boundary collision is rejected") {
    auto z = RatFuncQ::gen(N);
    auto den = z - RatFuncQ::constant(Rat(9), N);
    CHECK_THROWS_AS(boundary(ParamCycle(z / den, (z + RatFuncQ::constant(Rat(2), N)) / den,
                                        (z + RatFuncQ::constant(Rat(3), N)) / den)),
                    calc_error);
    // double root mod t
    auto dbl = (z - RatFuncQ::constant(Rat(1), N)) * (z - RatFuncQ::constant(Rat(1), N));
    CHECK_THROWS_AS(boundary(ParamCycle(dbl / (den * (z - RatFuncQ::constant(Rat(3), N))),
                                        (z - RatFuncQ::constant(Rat(5), N)) / den,
                                        (z - RatFuncQ::constant(Rat(6), N)) / den)),
                    calc_error);
}

TEST_CASE("boundary points and evaluation") {
    Rng rng(3);
    auto d = random_cycle_data(rng);
    auto Z = cycle_of(d);
    auto pts = boundary(Z);
    CHECK(pts.size() == 6);  // one zero + one pole per coordinate, nothing at infinity
    for (const auto& bp : pts) {
        CHECK(bp.root_minpoly.size() == 2);
        CHECK(bp.w[0].is_unit());
        CHECK(bp.w[1].is_unit());
    }
    // y1 = z - (1+t) root lifts to 1 + t
    auto z = RatFuncQ::gen(N);
    ParamCycle Z2((z - RatFuncQ::constant(qs({Rat(1), Rat(1)}))) / (z - RatFuncQ::constant(Rat(17), N)),
                  (z - RatFuncQ::constant(Rat(3), N)) / (z - RatFuncQ::constant(Rat(19), N)),
                  (z - RatFuncQ::constant(Rat(5), N)) / (z - RatFuncQ::constant(Rat(23), N)));
    auto pts2 = boundary(Z2);
    bool found = false;
    for (const auto& bp : pts2)
        if (bp.face == 1 && bp.zero_face) {
            found = true;
            NFSeries expect(bp.kp, N);
            expect.coeff_mut(0) = bp.kp.from_rat(Rat(1));
            expect.coeff_mut(1) = bp.kp.from_rat(Rat(1));
            CHECK(bp.root == expect);
        }
    CHECK(found);
}

TEST_CASE("l_invariant sign and antisymmetry") {
    // single synthetic point with w1 = exp(t), w2 = exp(t^2): value = sign * 1
    NumberField kp({Rat(0), Rat(1)}, "\xce\xb8");
    NFSeries u(kp, N), v(kp, N);
    u.coeff_mut(1) = kp.one();
    v.coeff_mut(2) = kp.one();
    auto w1 = exp_nil(u), w2 = exp_nil(v);
    BoundaryPoint bp{1, true, 1, false, kp, {Rat(0), Rat(1)}, NFSeries(kp, N), {w1, w2}};
    CHECK(l_invariant({bp}) == Rat(1));
    BoundaryPoint swapped = bp;
    std::swap(swapped.w[0], swapped.w[1]);
    CHECK(l_invariant({swapped}) == Rat(-1));
    // constants in t give zero
    BoundaryPoint cst{2, false, -1, false, kp, {Rat(0), Rat(1)}, NFSeries(kp, N),
                      {NFSeries::constant(kp, kp.from_int(2), N),
                       NFSeries::constant(kp, kp.from_int(3), N)}};
    CHECK(l_invariant({cst}) == 0);
    // additivity over point lists
    CHECK(l_invariant({bp, cst, swapped}) == 0);
}

TEST_CASE("rho_f M2 invariance") {
    Rng rng(5);
    for (int trial = 0; trial < 4; ++trial) {
        auto d = random_cycle_data(rng);
        auto v0 = rho_f(cycle_of(d));
        for (int rep = 0; rep < 4; ++rep) {
            auto d2 = d;
            for (int i = 0; i < 3; ++i) {
                for (int k = 2; k < N; ++k) {
                    if (rng.uniform(0, 2)) d2[i].zero_roots[0].coeff_mut(k) += rng.small_rat(5);
                    if (rng.uniform(0, 2)) d2[i].pole_roots[0].coeff_mut(k) += rng.small_rat(5);
                    if (rng.uniform(0, 1)) d2[i].c.coeff_mut(k) += rng.small_rat(5);
                }
            }
            CHECK(rho_f(cycle_of(d2)) == v0);
            // sign-covariance: the opposite boundary convention negates both
            CHECK(rho_f(cycle_of(d2), -1) == -v0);
        }
    }
}

TEST_CASE("rho_f product vanishing") {
    Rng rng(9);
    for (int trial = 0; trial < 6; ++trial) {
        auto d = random_cycle_data(rng);
        // y3 := constant in z, arbitrary in t mod t^2, admissible
        CoordData c3;
        c3.c = qs({Rat(rng.uniform(2, 7)), rng.small_rat(5)});
        d[2] = c3;
        if (trial % 2 == 1) {
            // add t^2-order z-dependence with matching zero/pole reductions:
            // y3 *= (z - a - t^2 b)/(z - a); still constant mod t^2
            Rat a(rng.uniform(41, 60));
            QSeries zr = qs({a});
            zr.coeff_mut(2) = rng.nonzero_rat(5);
            d[2].zero_roots.push_back(zr);
            d[2].pole_roots.push_back(qs({a}));
        }
        CHECK(rho_f(cycle_of(d)) == 0);
    }
    // all coordinates t-constant -> 0
    auto z = RatFuncQ::gen(N);
    auto mk = [&](long a, long b) {
        return (z - RatFuncQ::constant(Rat(a), N)) / (z - RatFuncQ::constant(Rat(b), N));
    };
    CHECK(rho_f(ParamCycle(mk(1, 2), mk(3, 4), mk(5, 6))) == 0);
}

TEST_CASE("rho_f matches the chow dilogarithm route") {
    // rho_f(Z) = -rho(y1 ^ y2 ^ y3) computed through tame residues: the
    // l-term at a boundary point is -(ell_2 ^ ell_1)(w1 ^ w2); this pins the
    // two independent code paths against each other.
    Rng rng(21);
    auto d = random_cycle_data(rng);
    auto Z = cycle_of(d);
    Rat via_wedge(0);
    for (const auto& bp : boundary(Z)) {
        Wedge2<NFSeries> w;
        w.add(Rat(1), bp.w[0], bp.w[1]);
        via_wedge += Rat(bp.sign) * bp.kp.trace(wedge_eval(bp.kp, 2, 1, w));
    }
    CHECK(rho_f(Z) == -via_wedge);
}

TEST_CASE("precision guard") {
    auto z = RatFuncQ::gen(4);
    auto mk = [&](long a, long b) {
        return (z - RatFuncQ::constant(Rat(a), 4)) / (z - RatFuncQ::constant(Rat(b), 4));
    };
    CHECK_THROWS_AS(rho_f(ParamCycle(mk(1, 2), mk(3, 4), mk(5, 6))), calc_error);
}
