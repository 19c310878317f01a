#ifndef JETWRONSK_FAMILY_HPP
#define JETWRONSK_FAMILY_HPP

#include <map>
#include <string>
#include <vector>

#include "jetwronsk/jet.hpp"
#include "jetwronsk/polynomial.hpp"

namespace jetwronsk {

// Exponent tuple I = (i_0, ..., i_N); tau^I = prod tau_j^(i_j).
using MultiIndex = std::vector<int>;

int multi_degree(const MultiIndex& I);
std::string multi_index_str(const MultiIndex& I);                 // "(i0,...,iN)"
MultiIndex parse_multi_index(const std::string& text, int len);   // inverse of the above

// All I with |I| = delta over N+1 slots, in descending lexicographic order
// starting from (delta, 0, ..., 0).
std::vector<MultiIndex> enumerate_multi_indices(int N, int delta);

// The data of a Fermat-type family F(a) = sum_I a_I tau^((r+k)I). The tau_j
// and the coefficients a_I are concrete polynomials in the chart coordinates;
// multi-indices absent from `a` stand for a zero coefficient.
struct FamilySpec {
    JetContext context;
    int N = 1;      // tau_0..tau_N
    int delta = 1;  // |I| = delta for every index
    int r = 1;
    int epsilon = 0;  // carried for the bounds bookkeeping only
    std::vector<Polynomial> tau;
    std::map<MultiIndex, Polynomial> a;

    void validate() const;

    // prod_j tau_j^(mult * i_j) as a base polynomial.
    Polynomial tau_power(const MultiIndex& I, int mult) const;
    // a_I, or zero when the index carries no coefficient.
    Polynomial coeff_a(const MultiIndex& I) const;
};

// F(a) = sum_I a_I tau^((r+k)I).
Polynomial assemble_F(const FamilySpec& spec);

// The reduced derivative d^[p]_I(a_I) with d^[p](a_I tau^((r+k)I)) =
// tau^(rI) d^[p]_I(a_I). Throws DivisionFails if the factorization identity
// breaks (never on valid inputs).
JetPolynomial reduced_jet_derivative(const FamilySpec& spec, const MultiIndex& I, int p);

// det (d^[p]_{I_j}(a_{I_j}))_{p,j}, the glued Wronskian with the tau^(rI)
// twist divided out.
JetPolynomial reduced_wronskian(const FamilySpec& spec, const std::vector<MultiIndex>& indices);

// Lowest variable index with a nonvanishing first partial of F at x, or -1
// when x is a singular point of (F = 0).
int distinguished_variable(const Polynomial& F, const std::vector<Rational>& x);

// Truncated curve gamma with gamma(0) = x and F o gamma = 0 mod t^(K+1),
// built order by order at a smooth point. The seed fixes the components for
// every variable except the distinguished one (which is solved for); pass an
// empty seed to use gamma_i(t) = x_i + t. Seeds must vanish at t = 0.
CurveGerm germ_in_hypersurface(const JetContext& ctx, const Polynomial& F,
                               const std::vector<Rational>& x,
                               const std::vector<TruncatedSeries>& seed, int order);

struct StratumData {
    int N_x = 0;                     // #{j : tau_j(x) != 0}
    std::vector<MultiIndex> I_x;     // {I : tau^I(x) != 0}
};

// Stratum bookkeeping at a base point; checks #I_x = binom(N_x-1+delta, delta).
StratumData stratum_data(const FamilySpec& spec, const std::vector<Rational>& x);

}  // namespace jetwronsk

#endif
