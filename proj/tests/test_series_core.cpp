#include <doctest.h>

#include "jetwronsk/generators.hpp"
#include "jetwronsk/parser.hpp"
#include "jetwronsk/polynomial.hpp"
#include "jetwronsk/series.hpp"

using namespace jetwronsk;

namespace {
const std::vector<std::string> kZ12 = {"z1", "z2"};

Polynomial P(const std::string& text, const std::vector<std::string>& vars = kZ12) {
    return parse_polynomial(text, vars);
}
}  // namespace

TEST_CASE("rational basics") {
    CHECK(Rational(3, 6) == Rational(1, 2));
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK(Rational(3, -6).str() == "-1/2");
    CHECK(Rational::parse("-4/6").str() == "-2/3");
    CHECK(Rational::parse("7").str() == "7");
    CHECK(pow(Rational(2, 3), 3) == Rational(8, 27));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("polynomial arithmetic examples") {
    CHECK((P("z1 + z2") * P("z1 - z2")) == P("z1^2 - z2^2"));
    const Polynomial p = P("3*z1*z2 - 1/2*z2^2");
    CHECK(p + Polynomial(kZ12) == p);
    CHECK(P("z1 + 1").pow(3) == P("z1^3 + 3*z1^2 + 3*z1 + 1"));
    CHECK(P("z1 + 1").pow(3).str() == "z1^3 + 3*z1^2 + 3*z1 + 1");
}

TEST_CASE("ring axioms on random polynomials") {
    Rng rng(7001);
    for (int t = 0; t < 200; ++t) {
        const Polynomial a = rng.polynomial(kZ12, 3, 3);
        const Polynomial b = rng.polynomial(kZ12, 3, 3);
        const Polynomial c = rng.polynomial(kZ12, 3, 3);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("exact division") {
    CHECK(*poly_divide_exact(P("z1^2*z2"), P("z1")) == P("z1*z2"));
    CHECK_FALSE(poly_divide_exact(P("z1^2 + 1"), P("z1")).has_value());
    CHECK_THROWS_AS(poly_divide_exact(P("z1"), Polynomial(kZ12)), std::invalid_argument);

    Rng rng(7002);
    for (int t = 0; t < 100; ++t) {
        const Polynomial a = rng.polynomial(kZ12, 3, 3);
        const Polynomial b = rng.nonzero_polynomial(kZ12, 3, 3);
        const auto q = poly_divide_exact(a * b, b);
        REQUIRE(q.has_value());
        CHECK(*q == a);
    }
}

TEST_CASE("parse/print round trip") {
    Rng rng(7003);
    for (int t = 0; t < 100; ++t) {
        const Polynomial p = rng.polynomial(kZ12, 4, 5);
        CHECK(parse_polynomial(p.str(), kZ12) == p);
    }
}

TEST_CASE("parser grammar and errors") {
    CHECK(P("z1^2 + 2*z1*z2").str() == "z1^2 + 2*z1*z2");
    CHECK(P("1/2*z1") == Rational(1, 2) * P("z1"));
    CHECK(P("(z1 + z2)^2") == P("z1^2 + 2*z1*z2 + z2^2"));
    CHECK(P("-z1 - 3/4") == -(P("z1") + Polynomial::constant(Rational(3, 4), kZ12)));

    try {
        P("z1^^2");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.offset == 3);
    }
    CHECK_THROWS_AS(P("z3"), ParseError);          // unknown variable
    CHECK_THROWS_AS(P("z1 z2"), ParseError);       // implicit multiplication
    CHECK_THROWS_AS(P("z1 + "), ParseError);
    CHECK_THROWS_AS(P("1/0"), ParseError);
}

TEST_CASE("series composition") {
    // h = t, g = 2t
    TruncatedSeries h(1), g(1);
    h.set_coeff(1, Rational(1));
    g.set_coeff(1, Rational(2));
    CHECK(series_compose(h, g) == g);
    CHECK(series_compose(h, h) == h);

    // h = t^2, g = t + t^2 at K = 3: (t+t^2)^2 = t^2 + 2t^3 mod t^4
    TruncatedSeries h2(3), g2(3);
    h2.set_coeff(2, Rational(1));
    g2.set_coeff(1, Rational(1));
    g2.set_coeff(2, Rational(1));
    const TruncatedSeries expect = TruncatedSeries::from_coeffs(
        {Rational(0), Rational(0), Rational(1), Rational(2)});
    CHECK(series_compose(h2, g2) == expect);

    TruncatedSeries bad(3);
    bad.set_coeff(0, Rational(1));
    CHECK_THROWS_AS(series_compose(h2, bad), std::invalid_argument);
    CHECK_THROWS_AS(series_compose(h2, h), std::invalid_argument);  // mixed orders
}

TEST_CASE("series composition is associative") {
    Rng rng(7004);
    for (int t = 0; t < 100; ++t) {
        const int K = static_cast<int>(rng.range(1, 5));
        TruncatedSeries h(K), g(K), f(K);
        for (int m = 0; m <= K; ++m) h.set_coeff(m, rng.rational(4, 2));
        for (int m = 1; m <= K; ++m) {
            g.set_coeff(m, rng.rational(4, 2));
            f.set_coeff(m, rng.rational(4, 2));
        }
        CHECK(series_compose(series_compose(h, g), f) ==
              series_compose(h, series_compose(g, f)));
    }
}
