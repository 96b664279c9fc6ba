#include <catch2/catch_amalgamated.hpp>

#include "adilog/dilog/additive.hpp"
#include "adilog/sqzero/regulator.hpp"
#include "adilog/sqzero/square_zero.hpp"
#include "adilog/verify/rng.hpp"

using namespace adilog;

namespace {
Rationals Q;
QxField kx(Q, "x");
using QxE = QxField::Elem;

SqElem<QxField> elem(const SqAlgebra<QxField>& A, QxE a, std::vector<QxE> nil) {
    return SqElem<QxField>::make(A, std::move(a), std::move(nil));
}
} // namespace

TEST_CASE("li2_tau pinned values") {
    // Abar = Q, I = Q eps, canonical tau, a = 1/2 + eps -> -8 eps^3
    SqAlgebra<Rationals> A{Q, 1};
    auto tau = Splitting<Rationals>::zero(A);
    auto a = SqElem<Rationals>::make(A, Rat(1, 2), {Rat(1)});
    auto v = li2_tau(A, tau, a);
    REQUIRE(v.c.size() == 1);
    CHECK(v.c.at({0, 0, 0}) == Rat(-8));
    // a = tau(abar) -> 0
    CHECK(li2_tau(A, tau, SqElem<Rationals>::scalar(A, Rat(1, 2))).is_zero());

    // rank 2: a = s + eps1 + eps2 -> -1/2 (eps1+eps2)^3 / (s^2(s-1)^2)
    SqAlgebra<Rationals> A2{Q, 2};
    auto tau2 = Splitting<Rationals>::zero(A2);
    Rat s(3);
    auto d = Rat(-1, 2) / (s * s * (s - 1) * (s - 1));
    auto b = SqElem<Rationals>::make(A2, s, {Rat(1), Rat(1)});
    auto w = li2_tau(A2, tau2, b);
    CHECK(w.c.at({0, 0, 0}) == d);
    CHECK(w.c.at({0, 0, 1}) == 3 * d);
    CHECK(w.c.at({0, 1, 1}) == 3 * d);
    CHECK(w.c.at({1, 1, 1}) == d);
    CHECK_THROWS_AS(li2_tau(A, tau, SqElem<Rationals>::make(A, Rat(1), {Rat(1)})), calc_error);
}

TEST_CASE("li2_tau kills five-term combinations and tau-images") {
    SqAlgebra<Rationals> A{Q, 2};
    auto tau = Splitting<Rationals>::zero(A);
    Rng rng(313);
    for (int rep = 0; rep < 20; ++rep) {
        auto x = SqElem<Rationals>::make(A, random_flat(Q, rng), {rng.small_rat(), rng.small_rat()});
        auto y = SqElem<Rationals>::make(A, random_flat(Q, rng), {rng.small_rat(), rng.small_rat()});
        if (!(x - y).is_unit()) continue;
        CHECK(li2_tau(A, tau, five_term(x, y)).is_zero());
    }
    // vanishes on tau(Abar-flat) even for a twisted splitting over Q(x)
    SqAlgebra<QxField> Ax{kx, 1};
    Splitting<QxField> taux{{kx.gen()}};  // theta(x) = x eps
    Rng rng2(314);
    for (int rep = 0; rep < 10; ++rep) {
        auto abar = random_flat(kx, rng2);
        CHECK(li2_tau(Ax, taux, taux.tau(Ax, abar)).is_zero());
    }
}

TEST_CASE("rank-1 consistency with li_23") {
    // under I = (t)/(t^2), li2_tau with the canonical splitting reproduces li_23
    SqAlgebra<Rationals> A{Q, 1};
    auto tau = Splitting<Rationals>::zero(A);
    Rng rng(99);
    for (int rep = 0; rep < 30; ++rep) {
        Rat s = random_flat(Q, rng);
        Rat a = rng.small_rat();
        auto v = li2_tau(A, tau, SqElem<Rationals>::make(A, s, {a}));
        Rat coeff = v.c.count({0, 0, 0}) ? v.c.at({0, 0, 0}) : Rat(0);
        Series<Rationals> x(Q, 2, {s, a});
        CHECK(coeff == li_23(x));
    }
}

namespace {
struct HomotopySetup {
    SqAlgebra<QxField> A1, A2;
    AlgMap<QxField> f;
    Splitting<QxField> tau1, tau2;
};

HomotopySetup random_setup(Rng& rng, int rank1, int rank2) {
    HomotopySetup s{{kx, rank1}, {kx, rank2}, {}, {}, {}};
    s.f.from = s.A1;
    s.f.to = s.A2;
    // fbar: x -> nonconstant rational map
    Poly<Rationals> img{rng.small_rat(4), Q.one()};
    if (rng.uniform(0, 1)) img.push_back(Q.one());  // quadratic sometimes
    auto image = kx.from_poly(img);
    s.f.fbar = [image](const QxE& e) {
        Rationals Qb;
        auto ev = [&](const Poly<Rationals>& p) {
            QxField kloc(Qb, "x");
            QxE acc = kloc.zero();
            for (size_t i = p.size(); i-- > 0;)
                acc = kloc.add(kloc.mul(acc, image), kloc.from_rat(p[i]));
            return acc;
        };
        QxField kloc(Qb, "x");
        return kloc.div(ev(e.num), ev(e.den));
    };
    s.f.theta_f_gen.assign(rank2, kx.zero());
    for (auto& c : s.f.theta_f_gen)
        if (rng.uniform(0, 1)) c = random_elem(kx, rng, 3);
    s.f.f_I.assign(rank1, {});
    for (auto& row : s.f.f_I) {
        row.assign(rank2, kx.zero());
        for (auto& c : row)
            if (rng.uniform(0, 2)) c = random_elem(kx, rng, 3);
    }
    s.tau1.theta_gen.assign(rank1, kx.zero());
    for (auto& c : s.tau1.theta_gen)
        if (rng.uniform(0, 1)) c = random_elem(kx, rng, 3);
    s.tau2.theta_gen.assign(rank2, kx.zero());
    for (auto& c : s.tau2.theta_gen)
        if (rng.uniform(0, 1)) c = random_elem(kx, rng, 3);
    return s;
}

FormalSum<SqElem<QxField>> random_b2o(const SqAlgebra<QxField>& A, const AlgMap<QxField>& f,
                                      Rng& rng) {
    FormalSum<SqElem<QxField>> xi;
    int terms = static_cast<int>(rng.uniform(1, 2));
    for (int j = 0; j < terms; ++j) {
        for (;;) {
            auto abar = random_flat(kx, rng, 4);
            auto fA = f.fbar(abar);
            if (kx.is_zero(fA) || kx.eq(fA, kx.one())) continue;
            std::vector<QxE> nil(A.rank, kx.zero());
            for (auto& c : nil)
                if (rng.uniform(0, 1)) c = random_elem(kx, rng, 3);
            Rat c = rng.nonzero_rat(3);
            xi.add(c, SqElem<QxField>::make(A, abar, nil));
            xi.add(-c, SqElem<QxField>::scalar(A, abar));
            break;
        }
    }
    return xi;
}
} // namespace

TEST_CASE("homotopy identity") {
    Rng rng(2718);
    for (auto [r1, r2] : {std::pair{1, 1}, {1, 2}, {2, 1}, {2, 2}}) {
        for (int rep = 0; rep < 6; ++rep) {
            auto s = random_setup(rng, r1, r2);
            auto xi = random_b2o(s.A1, s.f, rng);
            auto phi = PhiData<QxField>::zeros(s.A1);
            auto lhs1 = li2_tau(s.A2, s.tau2, map_sum(s.f, xi));
            auto lhs2 = s.f.push_cube(li2_tau(s.A1, s.tau1, xi));
            SymCube<QxField> lhs = lhs1;
            lhs2.scale(kx, kx.neg(kx.one()));
            lhs.add(kx, lhs2);
            auto rhs = homotopy_h(s.f, s.tau1, s.tau2, xi, phi);
            CHECK(lhs.eq(rhs));
            // phi-basis independence on F(Lambda^2)^o
            PhiData<QxField> phi2 = phi;
            for (auto& img : phi2.basis_images)
                for (int i = 0; i < s.A2.rank; ++i)
                    for (int j = i; j < s.A2.rank; ++j)
                        if (rng.uniform(0, 1)) img.add(kx, {i, j}, random_elem(kx, rng, 3));
            auto rhs2 = homotopy_h(s.f, s.tau1, s.tau2, xi, phi2);
            CHECK(rhs.eq(rhs2));
        }
    }
}

TEST_CASE("homotopy degenerate cases") {
    Rng rng(321);
    SqAlgebra<QxField> A{kx, 1};
    auto id = AlgMap<QxField>::identity(A);
    auto tau = Splitting<QxField>{{kx.gen()}};
    auto xi = random_b2o(A, id, rng);
    auto phi = PhiData<QxField>::zeros(A);
    // f = identity, tau1 = tau2 -> 0
    CHECK(homotopy_h(id, tau, tau, xi, phi).is_zero());
    // theta = 0 with different-looking but compatible splittings
    auto tau0 = Splitting<QxField>::zero(A);
    CHECK(homotopy_h(id, tau0, tau0, xi, phi).is_zero());
    // non-infinitesimal presentations are rejected
    FormalSum<SqElem<QxField>> bad;
    bad.add(Rat(1), SqElem<QxField>::make(A, kx.from_int(2), {kx.one()}));
    CHECK_THROWS_AS(homotopy_h(id, tau, tau0, bad, phi), calc_error);
}

TEST_CASE("rho1 log dlog") {
    // (1+at) ^ (1+bt) dies against t^2 = 0 and t dt = 0
    auto xe = kx.gen();
    Series<QxField> u(kx, 2, {kx.one(), xe});  // 1 + x t
    Series<QxField> v(kx, 2, {kx.one(), kx.from_int(3)});
    Wedge2<Series<QxField>> w;
    w.add(Rat(1), u, v);
    CHECK(rho1_logdlog(kx, w).is_zero());
    // [x+t] - [x]: terms cancel exactly
    Series<QxField> xt(kx, 2, {xe, kx.one()});
    Series<QxField> xc(kx, 2, {xe, kx.zero()});
    FormalSum<Series<QxField>> xi;
    xi.add(Rat(1), xt);
    xi.add(Rat(-1), xc);
    auto d = rho1_logdlog(kx, delta(xi));
    CHECK(d.is_zero());
    // zero wedge -> zero
    CHECK(rho1_logdlog(kx, Wedge2<Series<QxField>>{}).is_zero());
    // non-infinitesimal input rejected
    Wedge2<Series<QxField>> bad;
    bad.add(Rat(1), Series<QxField>::constant(kx, kx.add(xe, kx.one()), 2),
            Series<QxField>::constant(kx, xe, 2));
    CHECK_THROWS_AS(rho1_logdlog(kx, bad), calc_error);
}

TEST_CASE("is_exact") {
    Rng rng(555);
    auto xe = kx.gen();
    // d(u) is exact for random u in A
    for (int rep = 0; rep < 10; ++rep) {
        Series<QxField> u(kx, 2, {random_elem(kx, rng, 5), random_elem(kx, rng, 5)});
        CHECK(is_exact(kx, d_total(u)));
    }
    // dx/x is not (nonzero residue)
    Differential<QxField> dxx(Series<QxField>::constant(kx, kx.inv(xe), 2), Series<QxField>(kx, 1));
    CHECK(!is_exact(kx, dxx));
    // t dx + x dt = d(tx) is exact
    Series<QxField> tdx(kx, 2, {kx.zero(), kx.one()});
    Series<QxField> xdt(kx, 1, {xe});
    CHECK(is_exact(kx, Differential<QxField>(tdx, xdt)));
    // 1/x^2 dx is exact (derivative of -1/x), 1/(x^2-1) is not
    Differential<QxField> dxx2(
        Series<QxField>::constant(kx, kx.inv(kx.mul(xe, xe)), 2), Series<QxField>(kx, 1));
    CHECK(is_exact(kx, dxx2));
    Differential<QxField> dlogish(
        Series<QxField>::constant(kx, kx.inv(kx.sub(kx.mul(xe, xe), kx.one())), 2),
        Series<QxField>(kx, 1));
    CHECK(!is_exact(kx, dlogish));
}

TEST_CASE("rho1 of boundaries is exact") {
    Rng rng(777);
    for (int rep = 0; rep < 15; ++rep) {
        // xi in B_2^o(Q(x)_2): sum of ([u] - [u(0)-lift]) with flat u
        FormalSum<Series<QxField>> xi;
        int terms = static_cast<int>(rng.uniform(1, 3));
        for (int j = 0; j < terms; ++j) {
            auto u0 = random_flat(kx, rng, 4);
            Series<QxField> u(kx, 2, {u0, random_elem(kx, rng, 4)});
            Rat c = rng.nonzero_rat(3);
            xi.add(c, u);
            xi.add(-c, Series<QxField>::constant(kx, u0, 2));
        }
        CHECK(is_exact(kx, rho1_logdlog(kx, delta(xi))));
    }
}
