#ifndef JETWRONSK_WRONSKIAN_HPP
#define JETWRONSK_WRONSKIAN_HPP

#include <vector>

#include "jetwronsk/jet.hpp"
#include "jetwronsk/linalg.hpp"
#include "jetwronsk/reparam.hpp"

namespace jetwronsk {

// The (k+1) functions whose Wronskian is taken. Inputs are polynomials in
// the base variables only; the Wronskian lives in the jet coordinates and
// is an invariant jet differential of weight k' = k(k+1)/2.
struct WronskianSpec {
    JetContext context;
    std::vector<Polynomial> inputs;  // f_0..f_k, base variables only

    WronskianSpec() = default;
    WronskianSpec(JetContext ctx, std::vector<Polynomial> fs);

    int weight() const { return context.k * (context.k + 1) / 2; }
};

// det (d^[p] f_j), rows p = 0..k, expanded by fraction-free elimination.
JetPolynomial wronskian(const WronskianSpec& spec);

// Same determinant evaluated at a jet point without symbolic expansion
// (determinant and evaluation commute). Used where only values are needed.
Rational wronskian_value(const JetContext& ctx, const std::vector<Polynomial>& inputs,
                         const JetPoint& w);

// W(phi . w) == a_1^(k') W(w), exactly.
bool invariance_check(const WronskianSpec& spec, const Reparam& phi, const JetPoint& w);

// W(s f_0, ..., s f_k) == s^(k+1) W(f_0, ..., f_k) as jet polynomials.
bool multiplicativity_check(const Polynomial& s, const WronskianSpec& spec);

// Gluing form of the same identity: g is the transition function between
// two trivializations, W_{U1} = g^(k+1) W_{U2}.
bool cocycle_check(const Polynomial& g, const WronskianSpec& spec);

struct NondegeneracyWitness {
    WronskianSpec spec;   // (1, z1, z1^2/2!, ..., z1^k/k!)
    JetPoint point;       // jet of gamma(t) = (t, 0, ..., 0)
    Rational value;       // always 1
};

// The explicit nonvanishing Wronskian used to show the Wronskian ideal is
// trivial along regular jets.
NondegeneracyWitness nondegeneracy_witness(const JetContext& ctx);

}  // namespace jetwronsk

#endif
