#include "jetwronsk/wronskian.hpp"

#include <algorithm>
#include <stdexcept>

namespace jetwronsk {

WronskianSpec::WronskianSpec(JetContext ctx, std::vector<Polynomial> fs)
    : context(ctx), inputs(std::move(fs)) {
    if (inputs.size() != static_cast<std::size_t>(ctx.k + 1))
        throw std::invalid_argument("WronskianSpec: expected exactly k+1 inputs");
}

JetPolynomial wronskian(const WronskianSpec& spec) {
    const JetContext& ctx = spec.context;
    const std::size_t size = spec.inputs.size();
    Matrix<Polynomial> m(size, size, Polynomial(ctx.universe()));
    for (std::size_t j = 0; j < size; ++j) {
        JetPolynomial entry = lift_to_jets(ctx, spec.inputs[j]);
        m(0, j) = entry.poly;
        for (std::size_t p = 1; p < size; ++p) {
            entry = jet_derivative(entry, 1);
            m(p, j) = entry.poly;
        }
    }
    return JetPolynomial(ctx, bareiss_determinant(std::move(m)));
}

Rational wronskian_value(const JetContext& ctx, const std::vector<Polynomial>& inputs,
                         const JetPoint& w) {
    if (inputs.size() != static_cast<std::size_t>(ctx.k + 1))
        throw std::invalid_argument("wronskian_value: expected exactly k+1 inputs");
    const std::size_t size = inputs.size();
    Matrix<Rational> m(size, size);
    for (std::size_t j = 0; j < size; ++j) {
        JetPolynomial entry = lift_to_jets(ctx, inputs[j]);
        m(0, j) = evaluate(entry, w);
        for (std::size_t p = 1; p < size; ++p) {
            entry = jet_derivative(entry, 1);
            m(p, j) = evaluate(entry, w);
        }
    }
    return bareiss_determinant(std::move(m));
}

bool invariance_check(const WronskianSpec& spec, const Reparam& phi, const JetPoint& w) {
    if (phi.k != spec.context.k || !(w.context == spec.context))
        throw std::invalid_argument("invariance_check: orders or contexts differ");
    const JetPolynomial W = wronskian(spec);
    const Rational lhs = evaluate(W, act(phi, w));
    const Rational rhs = pow(phi.a1(), static_cast<unsigned long>(spec.weight())) * evaluate(W, w);
    return lhs == rhs;
}

bool multiplicativity_check(const Polynomial& s, const WronskianSpec& spec) {
    std::vector<Polynomial> scaled;
    scaled.reserve(spec.inputs.size());
    for (const auto& f : spec.inputs) scaled.push_back(s * f);
    const JetPolynomial lhs = wronskian(WronskianSpec(spec.context, std::move(scaled)));
    const JetPolynomial w = wronskian(spec);
    const Polynomial s_pulled =
        s.pow(static_cast<unsigned>(spec.context.k + 1)).aligned_to(spec.context.universe());
    return lhs.poly == s_pulled * w.poly;
}

bool cocycle_check(const Polynomial& g, const WronskianSpec& spec) {
    // Same computation as multiplicativity; g plays the transition function
    // between the two trivializations.
    return multiplicativity_check(g, spec);
}

NondegeneracyWitness nondegeneracy_witness(const JetContext& ctx) {
    std::vector<Polynomial> inputs;
    const std::vector<std::string> base = ctx.base_vars();
    const Polynomial z1 = Polynomial::variable(JetContext::var_name(1, 0), base);
    Integer fact(1);
    for (int j = 0; j <= ctx.k; ++j) {
        if (j > 0) fact *= j;
        inputs.push_back(Rational(Integer(1), fact) * z1.pow(static_cast<unsigned>(j)));
    }

    std::vector<TruncatedSeries> comps(static_cast<std::size_t>(ctx.n),
                                       TruncatedSeries(std::max(ctx.k, 1)));
    comps[0].set_coeff(1, Rational(1));  // gamma(t) = (t, 0, ..., 0)
    const JetPoint w = jet_of_curve(CurveGerm(ctx, std::move(comps)));

    WronskianSpec spec(ctx, std::move(inputs));
    const Rational value = evaluate(wronskian(spec), w);
    return {std::move(spec), w, value};
}

}  // namespace jetwronsk
