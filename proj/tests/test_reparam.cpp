#include <doctest.h>

#include "jetwronsk/generators.hpp"
#include "jetwronsk/reparam.hpp"

using namespace jetwronsk;

TEST_CASE("composition examples") {
    const Reparam twice(1, {Rational(2)});
    const Reparam half(1, {Rational(1, 2)});
    CHECK(compose_reparam(twice, half) == Reparam::identity(1));

    Rng rng(9001);
    const Reparam psi = rng.reparam(3);
    CHECK(compose_reparam(Reparam::identity(3), psi) == psi);

    const Reparam q(2, {Rational(1), Rational(1)});  // t + t^2
    CHECK(compose_reparam(q, q) == Reparam(2, {Rational(1), Rational(2)}));
}

TEST_CASE("group axioms and inverses") {
    Rng rng(9002);
    for (int t = 0; t < 100; ++t) {
        const int k = static_cast<int>(rng.range(1, 4));
        const Reparam a = rng.reparam(k);
        const Reparam b = rng.reparam(k);
        const Reparam c = rng.reparam(k);
        CHECK(compose_reparam(compose_reparam(a, b), c) ==
              compose_reparam(a, compose_reparam(b, c)));
        CHECK(compose_reparam(a, Reparam::identity(k)) == a);
        CHECK(compose_reparam(Reparam::identity(k), a) == a);
        const Reparam inv = invert_reparam(a);
        CHECK(compose_reparam(a, inv) == Reparam::identity(k));
        CHECK(compose_reparam(inv, a) == Reparam::identity(k));
    }
    CHECK_THROWS_AS(Reparam(2, {Rational(0), Rational(1)}), std::invalid_argument);
}

TEST_CASE("faa di bruno coefficients") {
    // p = 2: P_{2,1} = 2 a2, P_{2,2} = a1^2.
    const Reparam phi(2, {Rational(3, 2), Rational(-5)});
    const auto c2 = faa_di_bruno_coeffs(phi, 2);
    CHECK(c2[0] == Rational(-10));
    CHECK(c2[1] == Rational(9, 4));

    // Identity reparametrization: P_{p,p} = 1 and P_{p,i} = 0 below.
    for (int k = 1; k <= 4; ++k) {
        const Reparam id = Reparam::identity(k);
        for (int p = 1; p <= k; ++p) {
            const auto c = faa_di_bruno_coeffs(id, p);
            for (int i = 1; i < p; ++i) CHECK(c[static_cast<std::size_t>(i - 1)].is_zero());
            CHECK(c.back() == Rational(1));
        }
    }

    // P_{p,p} = a1^p.
    Rng rng(9003);
    for (int t = 0; t < 30; ++t) {
        const int k = static_cast<int>(rng.range(1, 4));
        const Reparam r = rng.reparam(k);
        for (int p = 1; p <= k; ++p)
            CHECK(faa_di_bruno_coeffs(r, p).back() ==
                  pow(r.a1(), static_cast<unsigned long>(p)));
    }
}

TEST_CASE("faa di bruno identity against series composition") {
    Rng rng(9004);
    for (int t = 0; t < 100; ++t) {
        const int k = static_cast<int>(rng.range(1, 4));
        const Reparam phi = rng.reparam(k);
        TruncatedSeries h(k);
        for (int m = 0; m <= k; ++m) h.set_coeff(m, rng.rational(4, 2));
        const TruncatedSeries composed = series_compose(h, phi.to_series());
        for (int p = 1; p <= k; ++p) {
            const auto coeffs = faa_di_bruno_coeffs(phi, p);
            Rational rhs(0);
            Integer fact(1);
            for (int i = 1; i <= p; ++i) {
                fact *= i;
                rhs += coeffs[static_cast<std::size_t>(i - 1)] * Rational(fact) * h.coeff(i);
            }
            CHECK(Rational(factorial(static_cast<unsigned long>(p))) * composed.coeff(p) == rhs);
        }
    }
}

TEST_CASE("action on jet points") {
    const JetContext ctx(1, 1);
    JetPoint w = JetPoint::zero(ctx);
    w.value(1, 1) = Rational(1);
    const JetPoint moved = act(Reparam(1, {Rational(2)}), w);
    CHECK(moved.value(1, 0) == Rational(0));
    CHECK(moved.value(1, 1) == Rational(2));

    Rng rng(9005);
    for (int t = 0; t < 60; ++t) {
        const int n = static_cast<int>(rng.range(1, 3));
        const int k = static_cast<int>(rng.range(1, 4));
        const JetContext c(n, k);
        const JetPoint p = rng.jet_point(c);
        CHECK(act(Reparam::identity(k), p) == p);

        // Right action: act(psi, act(phi, w)) = act(phi o psi, w).
        const Reparam phi = rng.reparam(k);
        const Reparam psi = rng.reparam(k);
        CHECK(act(psi, act(phi, p)) == act(compose_reparam(phi, psi), p));
    }
}

TEST_CASE("action agrees with reparametrizing the curve") {
    Rng rng(9006);
    for (int t = 0; t < 60; ++t) {
        const int n = static_cast<int>(rng.range(1, 3));
        const int k = static_cast<int>(rng.range(1, 4));
        const JetContext ctx(n, k);
        const Reparam phi = rng.reparam(k);
        std::vector<TruncatedSeries> comps;
        for (int i = 0; i < n; ++i) {
            TruncatedSeries c = rng.curve_component(k);
            c.set_coeff(0, rng.rational(2, 2));
            comps.push_back(c);
        }
        const CurveGerm gamma(ctx, comps);
        std::vector<TruncatedSeries> pulled;
        for (const auto& c : gamma.components)
            pulled.push_back(series_compose(c, phi.to_series()));
        CHECK(act(phi, jet_of_curve(gamma)) == jet_of_curve(CurveGerm(ctx, pulled)));
    }
}

TEST_CASE("symbolic action matches the numeric one") {
    Rng rng(9007);
    for (int t = 0; t < 30; ++t) {
        const int k = static_cast<int>(rng.range(1, 3));
        const JetContext ctx(2, k);
        const Reparam phi = rng.reparam(k);
        const Polynomial f = rng.polynomial(ctx.universe(), 2, 4);
        const JetPolynomial jf(ctx, f);
        const JetPoint w = rng.jet_point(ctx);
        CHECK(evaluate(act_symbolic(phi, jf), w) == evaluate(jf, act(phi, w)));
    }
}
