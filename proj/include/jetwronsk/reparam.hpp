#ifndef JETWRONSK_REPARAM_HPP
#define JETWRONSK_REPARAM_HPP

#include <vector>

#include "jetwronsk/jet.hpp"
#include "jetwronsk/polynomial.hpp"
#include "jetwronsk/rational.hpp"
#include "jetwronsk/series.hpp"

namespace jetwronsk {

// Element of G_k: phi(t) = a_1 t + ... + a_k t^k with a_1 != 0, composition
// taken mod t^(k+1).
struct Reparam {
    int k = 1;
    std::vector<Rational> a;  // a[j] = a_{j+1}

    Reparam() = default;
    Reparam(int k, std::vector<Rational> coeffs);
    static Reparam identity(int k);

    const Rational& a1() const { return a.front(); }
    TruncatedSeries to_series() const;  // order k, zero constant term
    std::string str() const;

    friend bool operator==(const Reparam& x, const Reparam& y) { return x.k == y.k && x.a == y.a; }
};

// Group law: (phi o psi)(t) = phi(psi(t)) mod t^(k+1).
Reparam compose_reparam(const Reparam& phi, const Reparam& psi);

// Unique psi with phi o psi = psi o phi = t, solved order by order.
Reparam invert_reparam(const Reparam& phi);

// Symbolic Bell polynomial table: bell(p, i) is P_{p,i} as a polynomial in
// g1..gp where gj stands for g^(j)(0). Built from the recurrence
//   P_{p+1,i} = P_{p,i}' + g1 * P_{p,i-1},   P_{1,1} = g1,
// where ' is the derivation gj -> g_{j+1}.
const Polynomial& bell_polynomial(int p, int i);

// Faa di Bruno coefficients P_{p,1}..P_{p,p} of phi, exact. P_{p,p} = a1^p.
std::vector<Rational> faa_di_bruno_coeffs(const Reparam& phi, int p);

// Right action phi . [gamma]_k = [gamma o phi]_k on jet coordinates:
//   z_i^(p)  ->  sum_{q=1..p} P_{p,q}(phi) z_i^(q).
JetPoint act(const Reparam& phi, const JetPoint& w);

// Same substitution applied symbolically to a jet polynomial, so invariance
// laws can be checked as exact polynomial identities.
JetPolynomial act_symbolic(const Reparam& phi, const JetPolynomial& f);

}  // namespace jetwronsk

#endif
