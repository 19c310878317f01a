#include <doctest.h>

#include "jetwronsk/family.hpp"
#include "jetwronsk/generators.hpp"
#include "jetwronsk/parser.hpp"

using namespace jetwronsk;

namespace {
// n = 2, N = 1, tau = (z1, z2), one coefficient on I.
FamilySpec two_var_family(int k, int delta, int r, const MultiIndex& I, const std::string& aI) {
    FamilySpec spec;
    spec.context = JetContext(2, k);
    spec.N = 1;
    spec.delta = delta;
    spec.r = r;
    const auto base = spec.context.base_vars();
    spec.tau = {parse_polynomial("z1", base), parse_polynomial("z2", base)};
    spec.a[I] = parse_polynomial(aI, base);
    spec.validate();
    return spec;
}
}  // namespace

TEST_CASE("multi-index plumbing") {
    CHECK(multi_index_str({1, 0, 2}) == "(1,0,2)");
    CHECK(parse_multi_index("(1,0,2)", 3) == MultiIndex{1, 0, 2});
    CHECK_THROWS_AS(parse_multi_index("(1,0)", 3), std::invalid_argument);

    const auto all = enumerate_multi_indices(1, 2);
    CHECK(all == std::vector<MultiIndex>{{2, 0}, {1, 1}, {0, 2}});
    CHECK(enumerate_multi_indices(2, 1).size() == 3);
    CHECK(enumerate_multi_indices(2, 0) == std::vector<MultiIndex>{{0, 0, 0}});
}

TEST_CASE("assemble_F") {
    // Single index, a_I = 1, tau = (z1, z2), I = (1,0), r = k = 1: F = z1^2.
    const FamilySpec spec = two_var_family(1, 1, 1, {1, 0}, "1");
    CHECK(assemble_F(spec) == parse_polynomial("z1^2", spec.context.base_vars()));

    FamilySpec empty = spec;
    empty.a.clear();
    CHECK(assemble_F(empty).is_zero());

    // Two terms expand as the sum of the twisted monomials.
    FamilySpec pair = spec;
    pair.a[{0, 1}] = parse_polynomial("z1 - 3", pair.context.base_vars());
    const Polynomial expected = parse_polynomial("z1^2 + (z1 - 3)*z2^2",
                                                 pair.context.base_vars());
    CHECK(assemble_F(pair) == expected);
}

TEST_CASE("reduced jet derivative") {
    // d^[1]_I(a) = z1 d^[1]a + 2 a z1' for tau_0 = z1, I = (1,0), r = k = 1.
    Rng rng(11001);
    for (int t = 0; t < 25; ++t) {
        FamilySpec spec = two_var_family(1, 1, 1, {1, 0}, "1");
        const auto base = spec.context.base_vars();
        const Polynomial a = rng.polynomial(base, 3, 3);
        spec.a[{1, 0}] = a;
        const JetContext& ctx = spec.context;
        const JetPolynomial got = reduced_jet_derivative(spec, {1, 0}, 1);
        const Polynomial z1 = Polynomial::variable("z1", ctx.universe());
        const Polynomial z1p = Polynomial::variable("z1'", ctx.universe());
        const Polynomial expect =
            z1 * jet_derivative(lift_to_jets(ctx, a), 1).poly +
            Rational(2) * (lift_to_jets(ctx, a).poly * z1p);
        CHECK(got.poly == expect);

        // p = 0 gives a tau^(kI).
        CHECK(reduced_jet_derivative(spec, {1, 0}, 0).poly ==
              lift_to_jets(ctx, a * spec.tau_power({1, 0}, ctx.k)).poly);
    }

    // Zero coefficient gives zero.
    const FamilySpec spec = two_var_family(1, 1, 1, {1, 0}, "1");
    CHECK(reduced_jet_derivative(spec, {0, 1}, 1).is_zero());
}

TEST_CASE("reduced derivative is linear in a_I") {
    Rng rng(11002);
    FamilySpec spec = two_var_family(2, 2, 1, {1, 1}, "1");
    const auto base = spec.context.base_vars();
    const Polynomial a = rng.polynomial(base, 2, 3);
    const Polynomial b = rng.polynomial(base, 2, 3);
    for (int p = 0; p <= 2; ++p) {
        spec.a[{1, 1}] = a;
        const Polynomial da = reduced_jet_derivative(spec, {1, 1}, p).poly;
        spec.a[{1, 1}] = b;
        const Polynomial db = reduced_jet_derivative(spec, {1, 1}, p).poly;
        spec.a[{1, 1}] = a + b;
        CHECK(reduced_jet_derivative(spec, {1, 1}, p).poly == da + db);
    }
}

TEST_CASE("factorization divisibility on random specs") {
    Rng rng(11003);
    for (int t = 0; t < 25; ++t) {
        const FamilySpec spec = random_family(rng, static_cast<int>(rng.range(2, 3)),
                                              static_cast<int>(rng.range(1, 3)), 1,
                                              static_cast<int>(rng.range(1, 3)),
                                              static_cast<int>(rng.range(1, 3)));
        for (const auto& [I, aI] : spec.a)
            for (int p = 0; p <= spec.context.k; ++p)
                CHECK_NOTHROW(reduced_jet_derivative(spec, I, p));
    }
}

TEST_CASE("reduced wronskian gluing identity") {
    // Hand-checked k = 1 case with constant coefficients:
    // tau = (z1, 1 + z1), a_(1,0) = c0, a_(0,1) = c1 gives
    // W_red = -2 c0 c1 z1'.
    FamilySpec spec;
    spec.context = JetContext(1, 1);
    spec.N = 1;
    spec.delta = 1;
    spec.r = 1;
    const auto base = spec.context.base_vars();
    spec.tau = {parse_polynomial("z1", base), parse_polynomial("1 + z1", base)};
    spec.a[{1, 0}] = parse_polynomial("3", base);
    spec.a[{0, 1}] = parse_polynomial("5", base);
    spec.validate();
    const JetPolynomial red = reduced_wronskian(spec, {{1, 0}, {0, 1}});
    CHECK(red.str() == "-30*z1'");

    // Repeated index with equal coefficients is alternating.
    CHECK(reduced_wronskian(spec, {{1, 0}, {1, 0}}).is_zero());

    // The gluing law against the plain Wronskian of the twisted sections.
    Rng rng(11004);
    for (int t = 0; t < 10; ++t) {
        const FamilySpec fam = random_family(rng, 2, static_cast<int>(rng.range(1, 2)), 1,
                                             static_cast<int>(rng.range(1, 2)),
                                             static_cast<int>(rng.range(1, 2)));
        const auto all = enumerate_multi_indices(fam.N, fam.delta);
        std::vector<MultiIndex> tuple;
        std::vector<Polynomial> twisted;
        MultiIndex total(static_cast<std::size_t>(fam.N) + 1, 0);
        for (int j = 0; j <= fam.context.k; ++j) {
            const MultiIndex& I = all[static_cast<std::size_t>(
                rng.range(0, static_cast<long>(all.size()) - 1))];
            tuple.push_back(I);
            twisted.push_back(fam.coeff_a(I) * fam.tau_power(I, fam.r + fam.context.k));
            for (std::size_t m = 0; m < total.size(); ++m) total[m] += I[m];
        }
        const JetPolynomial lhs = wronskian(WronskianSpec(fam.context, twisted));
        const Polynomial twist = fam.tau_power(total, fam.r).aligned_to(fam.context.universe());
        CHECK(lhs.poly == twist * reduced_wronskian(fam, tuple).poly);
    }
}

TEST_CASE("germ construction") {
    const JetContext ctx(2, 2);
    const Polynomial F = parse_polynomial("z1 + z2^2", ctx.base_vars());
    const CurveGerm germ = germ_in_hypersurface(ctx, F, {Rational(0), Rational(0)}, {}, 2);
    CHECK(germ.components[0] ==
          TruncatedSeries::from_coeffs({Rational(0), Rational(0), Rational(-1)}));
    CHECK(germ.components[1] ==
          TruncatedSeries::from_coeffs({Rational(0), Rational(1), Rational(0)}));

    const Polynomial flat = parse_polynomial("z1", ctx.base_vars());
    const CurveGerm line = germ_in_hypersurface(ctx, flat, {Rational(0), Rational(0)}, {}, 2);
    CHECK(line.components[0].is_zero());
    CHECK(line.components[1] ==
          TruncatedSeries::from_coeffs({Rational(0), Rational(1), Rational(0)}));

    // Singular point: all partials vanish at the origin of z1^2 + z2^2.
    const Polynomial cone = parse_polynomial("z1^2 + z2^2", ctx.base_vars());
    CHECK_THROWS_AS(germ_in_hypersurface(ctx, cone, {Rational(0), Rational(0)}, {}, 2),
                    SingularPoint);
    CHECK_THROWS_AS(germ_in_hypersurface(ctx, F, {Rational(1), Rational(0)}, {}, 2),
                    std::invalid_argument);  // F(x) != 0
}

TEST_CASE("germs compose to zero under the series oracle") {
    Rng rng(11005);
    for (int t = 0; t < 30; ++t) {
        const FamilyWithPoint fam = random_family_with_point(
            rng, static_cast<int>(rng.range(2, 3)), static_cast<int>(rng.range(1, 2)),
            static_cast<int>(rng.range(2, 3)), static_cast<int>(rng.range(1, 2)), 1);
        const int order = fam.spec.context.k + 2;
        const CurveGerm germ =
            germ_in_hypersurface(JetContext(fam.spec.context.n, fam.spec.context.k), fam.F,
                                 fam.x, {}, order);
        CHECK(compose_with_curve(fam.F, germ).is_zero());
    }
}

TEST_CASE("stratum data") {
    FamilySpec spec;
    spec.context = JetContext(2, 1);
    spec.N = 2;
    spec.delta = 1;
    spec.r = 1;
    const auto base = spec.context.base_vars();
    spec.tau = {parse_polynomial("z1", base), parse_polynomial("z2", base),
                parse_polynomial("z1 + z2", base)};
    spec.validate();

    const StratumData at_11 = stratum_data(spec, {Rational(1), Rational(1)});
    CHECK(at_11.N_x == 3);
    CHECK(at_11.I_x.size() == 3);  // binom(2 + 1, 1)

    const StratumData at_00 = stratum_data(spec, {Rational(0), Rational(0)});
    CHECK(at_00.N_x == 0);
    CHECK(at_00.I_x.empty());

    // N = 2, delta = 4, N_x = 2 gives binom(5, 4) = 5.
    FamilySpec deg4 = spec;
    deg4.delta = 4;
    const StratumData at_01 = stratum_data(deg4, {Rational(0), Rational(1)});
    CHECK(at_01.N_x == 2);
    CHECK(at_01.I_x.size() == 5);

    Rng rng(11006);
    for (int t = 0; t < 40; ++t) {
        const FamilySpec fam = random_family(rng, 2, 1, static_cast<int>(rng.range(1, 3)),
                                             static_cast<int>(rng.range(1, 4)), 1);
        std::vector<Rational> x = {rng.rational(2, 2), rng.rational(2, 2)};
        CHECK_NOTHROW(stratum_data(fam, x));  // internal binomial assertion
    }
}
