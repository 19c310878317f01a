#include "jetwronsk/jet.hpp"

#include <stdexcept>

namespace jetwronsk {

JetContext::JetContext(int n, int k) : n(n), k(k) {
    if (n < 1) throw std::invalid_argument("JetContext: n must be >= 1");
    if (k < 0) throw std::invalid_argument("JetContext: k must be >= 0");
    universe_.reserve(static_cast<std::size_t>(var_count()));
    for (int i = 1; i <= n; ++i)
        for (int m = k; m >= 0; --m) universe_.push_back(var_name(i, m));
}

std::size_t JetContext::var_index(int i, int m) const {
    if (i < 1 || i > n || m < 0 || m > k)
        throw std::out_of_range("jet variable outside the context universe");
    return static_cast<std::size_t>((i - 1) * (k + 1) + (k - m));
}

std::string JetContext::var_name(int i, int m) {
    std::string s = "z" + std::to_string(i);
    s.append(static_cast<std::size_t>(m), '\'');
    return s;
}

std::vector<std::string> JetContext::base_vars() const {
    std::vector<std::string> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) out.push_back(var_name(i, 0));
    return out;
}

JetPolynomial::JetPolynomial(JetContext ctx, Polynomial p) : context(ctx) {
    poly = p.vars() == ctx.universe() ? std::move(p) : p.aligned_to(ctx.universe());
}

CurveGerm::CurveGerm(JetContext ctx, std::vector<TruncatedSeries> comps)
    : context(ctx), components(std::move(comps)) {
    if (components.size() != static_cast<std::size_t>(ctx.n))
        throw std::invalid_argument("CurveGerm: expected one component per base variable");
    const int K = components.front().order();
    for (const auto& c : components)
        if (c.order() != K)
            throw std::invalid_argument("CurveGerm: components must share one truncation order");
    if (K < ctx.k)
        throw std::invalid_argument("CurveGerm: truncation order below the jet order");
}

std::vector<Rational> CurveGerm::base_point() const {
    std::vector<Rational> out;
    out.reserve(components.size());
    for (const auto& c : components) out.push_back(c.coeff(0));
    return out;
}

JetPoint::JetPoint(JetContext ctx, std::vector<Rational> vals) : context(ctx) {
    if (vals.empty())
        values.assign(static_cast<std::size_t>(ctx.var_count()), Rational(0));
    else if (vals.size() == static_cast<std::size_t>(ctx.var_count()))
        values = std::move(vals);
    else
        throw std::invalid_argument("JetPoint: incomplete coordinate assignment");
}

JetPolynomial lift_to_jets(const JetContext& ctx, const Polynomial& base) {
    return JetPolynomial(ctx, base.aligned_to(ctx.universe()));
}

namespace {

// One application of the total derivative.
Polynomial total_derivative_step(const JetContext& ctx, const Polynomial& g) {
    Polynomial out(ctx.universe());
    for (int i = 1; i <= ctx.n; ++i) {
        for (int m = 0; m <= ctx.k; ++m) {
            Polynomial partial = g.derivative(ctx.var_index(i, m));
            if (partial.is_zero()) continue;
            if (m == ctx.k)
                throw OrderOverflow("d^[p] needs " + JetContext::var_name(i, ctx.k + 1) +
                                    ", beyond jet order " + std::to_string(ctx.k));
            out += partial * Polynomial::variable(JetContext::var_name(i, m + 1), ctx.universe());
        }
    }
    return out;
}

}  // namespace

JetPolynomial jet_derivative(const JetPolynomial& f, int p) {
    if (p < 0) throw std::invalid_argument("jet_derivative: negative order");
    Polynomial acc = f.poly;
    for (int step = 0; step < p; ++step) acc = total_derivative_step(f.context, acc);
    return JetPolynomial(f.context, std::move(acc));
}

JetPoint jet_of_curve(const CurveGerm& curve) {
    const JetContext& ctx = curve.context;
    JetPoint w = JetPoint::zero(ctx);
    Integer fact(1);
    for (int m = 0; m <= ctx.k; ++m) {
        if (m > 0) fact *= m;
        for (int i = 1; i <= ctx.n; ++i)
            w.value(i, m) = Rational(fact) * curve.components[static_cast<std::size_t>(i - 1)].coeff(m);
    }
    return w;
}

Rational evaluate(const JetPolynomial& f, const JetPoint& w) {
    if (!(f.context == w.context))
        throw std::invalid_argument("evaluate: jet contexts differ");
    return f.poly.evaluate(w.values);
}

bool leibniz_check(const JetPolynomial& f, const JetPolynomial& g, int p) {
    if (!(f.context == g.context))
        throw std::invalid_argument("leibniz_check: jet contexts differ");
    JetPolynomial lhs = jet_derivative(JetPolynomial(f.context, f.poly * g.poly), p);
    Polynomial rhs(f.context.universe());
    for (int i = 0; i <= p; ++i) {
        Rational c(binomial(static_cast<unsigned long>(p), static_cast<unsigned long>(i)));
        rhs += c * (jet_derivative(f, i).poly * jet_derivative(g, p - i).poly);
    }
    return lhs.poly == rhs;
}

TruncatedSeries compose_with_curve(const Polynomial& base_poly, const CurveGerm& curve) {
    Polynomial aligned = base_poly.aligned_to(curve.context.base_vars());
    return compose_polynomial(aligned, curve.components);
}

}  // namespace jetwronsk
