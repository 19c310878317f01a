#include "jetwronsk/family.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "jetwronsk/errors.hpp"
#include "jetwronsk/linalg.hpp"

namespace jetwronsk {

int multi_degree(const MultiIndex& I) {
    int d = 0;
    for (int i : I) d += i;
    return d;
}

std::string multi_index_str(const MultiIndex& I) {
    std::ostringstream out;
    out << '(';
    for (std::size_t j = 0; j < I.size(); ++j) {
        if (j) out << ',';
        out << I[j];
    }
    out << ')';
    return out.str();
}

MultiIndex parse_multi_index(const std::string& text, int len) {
    std::string s = text;
    s.erase(std::remove_if(s.begin(), s.end(),
                           [](char c) { return c == '(' || c == ')' || c == ' '; }),
            s.end());
    MultiIndex I;
    std::istringstream in(s);
    std::string part;
    while (std::getline(in, part, ',')) {
        if (part.empty()) throw std::invalid_argument("bad multi-index: '" + text + "'");
        I.push_back(std::stoi(part));
    }
    if (len >= 0 && I.size() != static_cast<std::size_t>(len))
        throw std::invalid_argument("multi-index '" + text + "' should have " +
                                    std::to_string(len) + " entries");
    for (int e : I)
        if (e < 0) throw std::invalid_argument("multi-index entries must be nonnegative");
    return I;
}

std::vector<MultiIndex> enumerate_multi_indices(int N, int delta) {
    std::vector<MultiIndex> out;
    MultiIndex cur(static_cast<std::size_t>(N) + 1, 0);
    // Descending lex: slot 0 takes the largest remaining degree first.
    struct Rec {
        std::vector<MultiIndex>& out;
        MultiIndex& cur;
        int N;
        void fill(int slot, int remaining) {
            if (slot == N) {
                cur[static_cast<std::size_t>(slot)] = remaining;
                out.push_back(cur);
                return;
            }
            for (int v = remaining; v >= 0; --v) {
                cur[static_cast<std::size_t>(slot)] = v;
                fill(slot + 1, remaining - v);
            }
        }
    } rec{out, cur, N};
    rec.fill(0, delta);
    return out;
}

void FamilySpec::validate() const {
    if (N < 0) throw std::invalid_argument("FamilySpec: N must be >= 0");
    if (delta < 0) throw std::invalid_argument("FamilySpec: delta must be >= 0");
    if (r < 1) throw std::invalid_argument("FamilySpec: r must be >= 1");
    if (tau.size() != static_cast<std::size_t>(N) + 1)
        throw std::invalid_argument("FamilySpec: expected N+1 tau sections");
    for (const auto& [I, aI] : a) {
        if (I.size() != static_cast<std::size_t>(N) + 1)
            throw std::invalid_argument("FamilySpec: index length != N+1");
        if (multi_degree(I) != delta)
            throw std::invalid_argument("FamilySpec: coefficient index with |I| != delta");
        (void)aI;
    }
}

Polynomial FamilySpec::tau_power(const MultiIndex& I, int mult) const {
    Polynomial out = Polynomial::constant(Rational(1), context.base_vars());
    for (std::size_t j = 0; j < I.size(); ++j) {
        if (I[j] == 0) continue;
        out = out * tau[j].aligned_to(context.base_vars()).pow(
                        static_cast<unsigned>(mult * I[j]));
    }
    return out;
}

Polynomial FamilySpec::coeff_a(const MultiIndex& I) const {
    auto it = a.find(I);
    if (it == a.end()) return Polynomial(context.base_vars());
    return it->second.aligned_to(context.base_vars());
}

Polynomial assemble_F(const FamilySpec& spec) {
    Polynomial F(spec.context.base_vars());
    for (const auto& [I, aI] : spec.a)
        F += aI.aligned_to(spec.context.base_vars()) * spec.tau_power(I, spec.r + spec.context.k);
    return F;
}

JetPolynomial reduced_jet_derivative(const FamilySpec& spec, const MultiIndex& I, int p) {
    const JetContext& ctx = spec.context;
    if (p < 0 || p > ctx.k)
        throw std::invalid_argument("reduced_jet_derivative: need 0 <= p <= k");
    if (I.size() != static_cast<std::size_t>(spec.N) + 1 || multi_degree(I) != spec.delta)
        throw std::invalid_argument("reduced_jet_derivative: index not in the family's I set");
    const Polynomial aI = spec.coeff_a(I);
    if (aI.is_zero()) return JetPolynomial(ctx, Polynomial(ctx.universe()));
    const Polynomial twisted = aI * spec.tau_power(I, spec.r + ctx.k);
    const JetPolynomial derived = jet_derivative(lift_to_jets(ctx, twisted), p);
    const Polynomial divisor = spec.tau_power(I, spec.r).aligned_to(ctx.universe());
    auto quotient = poly_divide_exact(derived.poly, divisor);
    if (!quotient)
        throw DivisionFails("tau^(rI) does not divide d^[" + std::to_string(p) +
                            "](a_I tau^((r+k)I)) for I = " + multi_index_str(I));
    return JetPolynomial(ctx, std::move(*quotient));
}

JetPolynomial reduced_wronskian(const FamilySpec& spec, const std::vector<MultiIndex>& indices) {
    const JetContext& ctx = spec.context;
    if (indices.size() != static_cast<std::size_t>(ctx.k) + 1)
        throw std::invalid_argument("reduced_wronskian: expected k+1 multi-indices");
    Matrix<Polynomial> m(indices.size(), indices.size(), Polynomial(ctx.universe()));
    for (std::size_t j = 0; j < indices.size(); ++j)
        for (std::size_t p = 0; p < indices.size(); ++p)
            m(p, j) = reduced_jet_derivative(spec, indices[j], static_cast<int>(p)).poly;
    return JetPolynomial(ctx, bareiss_determinant(std::move(m)));
}

int distinguished_variable(const Polynomial& F, const std::vector<Rational>& x) {
    for (std::size_t i = 0; i < F.vars().size(); ++i)
        if (!F.derivative(i).evaluate(x).is_zero()) return static_cast<int>(i);
    return -1;
}

CurveGerm germ_in_hypersurface(const JetContext& ctx, const Polynomial& F,
                               const std::vector<Rational>& x,
                               const std::vector<TruncatedSeries>& seed, int order) {
    const std::vector<std::string> base = ctx.base_vars();
    const Polynomial f = F.aligned_to(base);
    if (x.size() != base.size())
        throw std::invalid_argument("germ_in_hypersurface: point dimension != n");
    if (order < 1) throw std::invalid_argument("germ_in_hypersurface: order must be >= 1");
    if (!f.evaluate(x).is_zero())
        throw std::invalid_argument("germ_in_hypersurface: F(x) != 0");

    const int pivot = distinguished_variable(f, x);
    if (pivot < 0) throw SingularPoint("all first partials of F vanish at the base point");
    const Rational slope = f.derivative(static_cast<std::size_t>(pivot)).evaluate(x);

    std::vector<TruncatedSeries> comps;
    comps.reserve(base.size());
    for (std::size_t i = 0; i < base.size(); ++i) {
        TruncatedSeries c(order);
        c.set_coeff(0, x[i]);
        if (static_cast<int>(i) != pivot) {
            if (!seed.empty()) {
                if (seed.size() != base.size())
                    throw std::invalid_argument("germ seed must have one series per variable");
                if (seed[i].order() != order)
                    throw std::invalid_argument("germ seed order mismatch");
                if (!seed[i].coeff(0).is_zero())
                    throw std::invalid_argument("germ seed must vanish at t = 0");
                c += seed[i];
            } else {
                c.set_coeff(1, Rational(1));  // default direction: x_i + t
            }
        }
        comps.push_back(std::move(c));
    }

    // Solve the pivot coefficients one order at a time: adding c_m t^m to the
    // pivot component shifts coeff_m(F o gamma) by exactly slope * c_m.
    for (int m = 1; m <= order; ++m) {
        const TruncatedSeries composed = compose_polynomial(f, comps);
        const Rational residue = composed.coeff(m);
        if (residue.is_zero()) continue;
        auto& piv = comps[static_cast<std::size_t>(pivot)];
        piv.set_coeff(m, piv.coeff(m) - residue / slope);
    }

    CurveGerm germ(ctx, std::move(comps));
    if (!compose_polynomial(f, germ.components).is_zero())
        throw std::logic_error("germ construction failed to kill F o gamma");
    return germ;
}

StratumData stratum_data(const FamilySpec& spec, const std::vector<Rational>& x) {
    StratumData out;
    std::vector<bool> alive;
    alive.reserve(spec.tau.size());
    for (const auto& t : spec.tau) {
        const bool nz = !t.aligned_to(spec.context.base_vars()).evaluate(x).is_zero();
        alive.push_back(nz);
        if (nz) ++out.N_x;
    }
    for (const auto& I : enumerate_multi_indices(spec.N, spec.delta)) {
        bool supported = true;
        for (std::size_t j = 0; j < I.size(); ++j)
            if (I[j] > 0 && !alive[j]) {
                supported = false;
                break;
            }
        if (supported) out.I_x.push_back(I);
    }
    const int top = out.N_x - 1 + spec.delta;
    const Integer expected =
        top < 0 ? Integer(spec.delta == 0 ? 1 : 0)
                : binomial(static_cast<unsigned long>(top), static_cast<unsigned long>(spec.delta));
    if (Integer(static_cast<long>(out.I_x.size())) != expected)
        throw std::logic_error("stratum count disagrees with binom(N_x-1+delta, delta)");
    return out;
}

}  // namespace jetwronsk
