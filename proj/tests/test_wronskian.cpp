#include <doctest.h>

#include "jetwronsk/generators.hpp"
#include "jetwronsk/parser.hpp"
#include "jetwronsk/wronskian.hpp"

using namespace jetwronsk;

namespace {
std::vector<Polynomial> parse_all(const JetContext& ctx, std::vector<std::string> texts) {
    std::vector<Polynomial> out;
    for (const auto& t : texts) out.push_back(parse_polynomial(t, ctx.base_vars()));
    return out;
}
}  // namespace

TEST_CASE("wronskian examples") {
    const JetContext c1(2, 1);
    CHECK(wronskian(WronskianSpec(c1, parse_all(c1, {"1", "z1"}))).str() == "z1'");

    const JetContext c2(2, 2);
    CHECK(wronskian(WronskianSpec(c2, parse_all(c2, {"1", "z1", "1/2*z1^2"}))).str() == "z1'^3");

    // Alternating: repeated input kills the determinant.
    CHECK(wronskian(WronskianSpec(c2, parse_all(c2, {"z1", "z1", "z2"}))).is_zero());
}

TEST_CASE("bareiss agrees with cofactor expansion for k <= 2") {
    Rng rng(10001);
    for (int t = 0; t < 40; ++t) {
        const int k = static_cast<int>(rng.range(1, 2));
        const JetContext ctx(2, k);
        const std::size_t size = static_cast<std::size_t>(k) + 1;
        Matrix<Polynomial> m(size, size, Polynomial(ctx.universe()));
        for (std::size_t i = 0; i < size; ++i)
            for (std::size_t j = 0; j < size; ++j) m(i, j) = rng.polynomial(ctx.universe(), 2, 3);
        CHECK(bareiss_determinant(m) == cofactor_determinant(m));
    }
}

TEST_CASE("multilinearity and alternation") {
    Rng rng(10002);
    for (int t = 0; t < 30; ++t) {
        const int k = static_cast<int>(rng.range(1, 2));
        const JetContext ctx(2, k);
        const std::vector<std::string> base = ctx.base_vars();
        std::vector<Polynomial> fs;
        for (int j = 0; j <= k; ++j) fs.push_back(rng.polynomial(base, 2, 3));
        const Polynomial g = rng.polynomial(base, 2, 3);
        const Rational lambda = rng.rational(4, 2);

        // Linearity in slot 0.
        std::vector<Polynomial> shifted = fs;
        shifted[0] = fs[0] + lambda * g;
        std::vector<Polynomial> alt = fs;
        alt[0] = g;
        const Polynomial lam_jet =
            Polynomial::constant(lambda, ctx.universe());
        CHECK(wronskian(WronskianSpec(ctx, shifted)).poly ==
              wronskian(WronskianSpec(ctx, fs)).poly +
                  lam_jet * wronskian(WronskianSpec(ctx, alt)).poly);

        // Swapping two slots flips the sign.
        std::vector<Polynomial> swapped = fs;
        std::swap(swapped[0], swapped[static_cast<std::size_t>(k)]);
        CHECK(wronskian(WronskianSpec(ctx, swapped)).poly ==
              -wronskian(WronskianSpec(ctx, fs)).poly);
    }
}

TEST_CASE("invariance under reparametrization") {
    const JetContext c2(2, 2);
    const WronskianSpec spec(c2, parse_all(c2, {"1", "z1", "1/2*z1^2"}));
    Rng rng(10003);

    // phi = 2t: the value scales by 2^(k') = 8.
    const Reparam twice(2, {Rational(2), Rational(0)});
    const JetPoint w = rng.jet_point(c2);
    const JetPolynomial W = wronskian(spec);
    CHECK(evaluate(W, act(twice, w)) == Rational(8) * evaluate(W, w));
    CHECK(invariance_check(spec, twice, w));
    CHECK(invariance_check(spec, Reparam::identity(2), w));

    for (int t = 0; t < 50; ++t) {
        const int k = static_cast<int>(rng.range(1, 3));
        const JetContext ctx(2, k);
        std::vector<Polynomial> fs;
        for (int j = 0; j <= k; ++j) fs.push_back(rng.polynomial(ctx.base_vars(), 2, 3));
        CHECK(invariance_check(WronskianSpec(ctx, fs), rng.reparam(k), rng.jet_point(ctx)));
    }
}

TEST_CASE("invariance holds symbolically") {
    Rng rng(10004);
    for (int t = 0; t < 10; ++t) {
        const int k = static_cast<int>(rng.range(1, 2));
        const JetContext ctx(2, k);
        std::vector<Polynomial> fs;
        for (int j = 0; j <= k; ++j) fs.push_back(rng.polynomial(ctx.base_vars(), 2, 2));
        const WronskianSpec spec(ctx, fs);
        const Reparam phi = rng.reparam(k);
        const JetPolynomial W = wronskian(spec);
        const Polynomial scale = Polynomial::constant(
            pow(phi.a1(), static_cast<unsigned long>(spec.weight())), ctx.universe());
        CHECK(act_symbolic(phi, W).poly == scale * W.poly);
    }
}

TEST_CASE("weight homogeneity under linear rescaling") {
    // Scaling z_i^(m) by lambda^m multiplies the Wronskian value by lambda^(k').
    Rng rng(10005);
    for (int t = 0; t < 40; ++t) {
        const int k = static_cast<int>(rng.range(1, 3));
        const JetContext ctx(2, k);
        std::vector<Polynomial> fs;
        for (int j = 0; j <= k; ++j) fs.push_back(rng.polynomial(ctx.base_vars(), 2, 3));
        const WronskianSpec spec(ctx, fs);
        const Rational lambda = rng.nonzero_rational(4, 2);
        JetPoint w = rng.jet_point(ctx);
        JetPoint scaled = w;
        for (int i = 1; i <= ctx.n; ++i) {
            Rational power(1);
            for (int m = 1; m <= k; ++m) {
                power *= lambda;
                scaled.value(i, m) = power * w.value(i, m);
            }
        }
        const JetPolynomial W = wronskian(spec);
        CHECK(evaluate(W, scaled) ==
              pow(lambda, static_cast<unsigned long>(spec.weight())) * evaluate(W, w));
    }
}

TEST_CASE("multiplicativity and cocycle") {
    const JetContext c1(2, 1);
    const WronskianSpec pair(c1, parse_all(c1, {"1", "z2"}));
    // W(z1, z1 z2) = z1^2 z2'.
    CHECK(wronskian(WronskianSpec(c1, parse_all(c1, {"z1", "z1*z2"}))).str() == "z1^2*z2'");
    CHECK(multiplicativity_check(parse_polynomial("z1", c1.base_vars()), pair));
    CHECK(multiplicativity_check(parse_polynomial("1", c1.base_vars()), pair));
    CHECK(cocycle_check(parse_polynomial("1", c1.base_vars()), pair));

    // Constant transition g = 2 rescales by 2^(k+1).
    Rng rng(10006);
    for (int k = 1; k <= 3; ++k) {
        const JetContext ctx(2, k);
        std::vector<Polynomial> fs;
        for (int j = 0; j <= k; ++j) fs.push_back(rng.polynomial(ctx.base_vars(), 2, 2));
        const WronskianSpec spec(ctx, fs);
        const Polynomial two = Polynomial::constant(Rational(2), ctx.base_vars());
        CHECK(cocycle_check(two, spec));
        std::vector<Polynomial> doubled;
        for (const auto& f : fs) doubled.push_back(two * f);
        CHECK(wronskian(WronskianSpec(ctx, doubled)).poly ==
              Polynomial::constant(pow(Rational(2), static_cast<unsigned long>(k) + 1),
                                   ctx.universe()) *
                  wronskian(spec).poly);
    }
}

TEST_CASE("nondegeneracy witness equals one") {
    for (int n = 1; n <= 3; ++n)
        for (int k = 1; k <= 4; ++k) {
            const NondegeneracyWitness w = nondegeneracy_witness(JetContext(n, k));
            CHECK(w.value == Rational(1));
            CHECK(w.spec.weight() == k * (k + 1) / 2);
        }
}

TEST_CASE("wronskian value shortcut matches the symbolic determinant") {
    Rng rng(10007);
    for (int t = 0; t < 30; ++t) {
        const int k = static_cast<int>(rng.range(1, 3));
        const JetContext ctx(2, k);
        std::vector<Polynomial> fs;
        for (int j = 0; j <= k; ++j) fs.push_back(rng.polynomial(ctx.base_vars(), 2, 3));
        const JetPoint w = rng.jet_point(ctx);
        CHECK(wronskian_value(ctx, fs, w) == evaluate(wronskian(WronskianSpec(ctx, fs)), w));
    }
}
