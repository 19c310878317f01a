#include "jetwronsk/generators.hpp"

#include <algorithm>
#include <stdexcept>

namespace jetwronsk {

long Rng::range(long lo, long hi) {
    if (hi < lo) throw std::invalid_argument("Rng::range: empty interval");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(next() % span);
}

Rational Rng::rational(long max_abs_num, long max_den) {
    return Rational(range(-max_abs_num, max_abs_num), range(1, max_den));
}

Rational Rng::nonzero_rational(long max_abs_num, long max_den) {
    Rational q = rational(max_abs_num, max_den);
    while (q.is_zero()) q = rational(max_abs_num, max_den);
    return q;
}

Polynomial Rng::polynomial(const std::vector<std::string>& vars, int max_degree, int max_terms) {
    Polynomial p(vars);
    const int terms = static_cast<int>(range(1, max_terms));
    for (int t = 0; t < terms; ++t) {
        int degree = static_cast<int>(range(0, max_degree));
        Monomial m(vars.size(), 0);
        for (int d = 0; d < degree && !vars.empty(); ++d)
            ++m[static_cast<std::size_t>(range(0, static_cast<long>(vars.size()) - 1))];
        Polynomial term(vars);
        term.set_coeff(m, nonzero_rational());
        p += term;
    }
    return p;
}

Polynomial Rng::nonzero_polynomial(const std::vector<std::string>& vars, int max_degree,
                                   int max_terms) {
    Polynomial p = polynomial(vars, max_degree, max_terms);
    while (p.is_zero()) p = polynomial(vars, max_degree, max_terms);
    return p;
}

TruncatedSeries Rng::curve_component(int order) {
    TruncatedSeries s(order);
    for (int m = 1; m <= order; ++m) s.set_coeff(m, rational(4, 2));
    return s;
}

Reparam Rng::reparam(int k) {
    std::vector<Rational> a;
    a.push_back(nonzero_rational(4, 2));
    for (int j = 2; j <= k; ++j) a.push_back(rational(4, 2));
    return Reparam(k, std::move(a));
}

JetPoint Rng::jet_point(const JetContext& ctx) {
    JetPoint w = JetPoint::zero(ctx);
    for (auto& v : w.values) v = rational(4, 2);
    return w;
}

FamilySpec random_family(Rng& rng, int n, int k, int N, int delta, int r, int a_degree) {
    FamilySpec spec;
    spec.context = JetContext(n, k);
    spec.N = N;
    spec.delta = delta;
    spec.r = r;
    const std::vector<std::string> base = spec.context.base_vars();
    for (int j = 0; j <= N; ++j) {
        // Generic linear section: small nonzero gradient, random constant.
        Polynomial tau(base);
        bool nonconstant = false;
        while (!nonconstant) {
            tau = Polynomial::constant(rng.rational(3, 2), base);
            for (int i = 0; i < n; ++i) {
                Rational c = rng.rational(3, 2);
                if (!c.is_zero()) {
                    nonconstant = true;
                    tau += c * Polynomial::variable(base[static_cast<std::size_t>(i)], base);
                }
            }
        }
        spec.tau.push_back(tau);
    }
    const std::vector<MultiIndex> all = enumerate_multi_indices(N, delta);
    const std::size_t picks =
        static_cast<std::size_t>(rng.range(1, std::min<long>(3, static_cast<long>(all.size()))));
    for (std::size_t t = 0; t < picks; ++t) {
        const MultiIndex& I = all[static_cast<std::size_t>(
            rng.range(0, static_cast<long>(all.size()) - 1))];
        spec.a[I] = rng.nonzero_polynomial(base, a_degree, 3);
    }
    spec.validate();
    return spec;
}

FamilyWithPoint random_family_with_point(Rng& rng, int n, int k, int N, int delta, int r) {
    for (int attempt = 0; attempt < 500; ++attempt) {
        FamilySpec spec = random_family(rng, n, k, N, delta, r);
        const std::vector<std::string> base = spec.context.base_vars();

        std::vector<Rational> x;
        for (int i = 0; i < n; ++i) x.push_back(rng.rational(2, 2));

        // Shift the constant term of one coefficient so that F(x) = 0.
        const std::vector<MultiIndex> all = enumerate_multi_indices(N, delta);
        MultiIndex anchor;
        for (const auto& I : all)
            if (!spec.tau_power(I, spec.r + k).evaluate(x).is_zero()) {
                anchor = I;
                break;
            }
        if (anchor.empty()) continue;  // x kills every monomial; resample

        Polynomial aI = spec.coeff_a(anchor);
        if (aI.is_zero()) aI = Polynomial(base);
        Polynomial rest(base);
        for (const auto& [I, c] : spec.a)
            if (I != anchor) rest += c.aligned_to(base) * spec.tau_power(I, spec.r + k);
        const Rational anchor_val = spec.tau_power(anchor, spec.r + k).evaluate(x);
        const Rational needed = -rest.evaluate(x) / anchor_val;
        aI += Polynomial::constant(needed - aI.evaluate(x), base);
        if (aI.is_zero())
            aI += Polynomial::constant(Rational(0), base);  // keep a (possibly zero) entry
        spec.a[anchor] = aI;

        Polynomial F = assemble_F(spec);
        if (!F.evaluate(x).is_zero()) throw std::logic_error("point adjustment failed");
        if (distinguished_variable(F.aligned_to(base), x) < 0) continue;  // singular; resample
        return {std::move(spec), std::move(F), std::move(x)};
    }
    throw std::runtime_error("could not find a smooth pointed family after 500 attempts");
}

}  // namespace jetwronsk
