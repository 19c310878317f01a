#ifndef JETWRONSK_GRASSMANN_HPP
#define JETWRONSK_GRASSMANN_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "jetwronsk/family.hpp"
#include "jetwronsk/jet.hpp"
#include "jetwronsk/linalg.hpp"

namespace jetwronsk {

// Point of the Plucker embedding of Gr_{k+1}(C^I): one coordinate per sorted
// (k+1)-tuple of ambient indices, defined up to a global nonzero scale.
struct PluckerVector {
    std::vector<MultiIndex> ambient;                    // the ordered index set I
    std::map<std::vector<std::size_t>, Rational> coords;  // key: sorted tuple of positions

    // Signed lookup for arbitrarily ordered tuples: repeated entries give 0,
    // odd permutations flip the sign.
    Rational signed_coord(std::vector<std::size_t> tuple) const;

    // Scale-invariant equality: both sides normalized by the first nonzero
    // coordinate in lexicographic tuple order.
    static bool equal_mod_scale(const PluckerVector& a, const PluckerVector& b);
};

// Refuses index sets larger than this; desk-scale guardrail.
inline constexpr std::size_t kDefaultIndexCap = 3003;

// The (k+1) x #I matrix of reduced derivatives evaluated at w:
// entry (p, column of I) = d^[p]_I(a_I)(w). Columns follow
// enumerate_multi_indices(N, delta).
Matrix<Rational> phi_matrix(const FamilySpec& spec, const JetPoint& w,
                            std::size_t index_cap = kDefaultIndexCap);

// All (k+1) x (k+1) minors of a (k+1)-row matrix; nullopt when every minor
// vanishes, i.e. the row span has rank < k+1. `ambient` labels the columns;
// when omitted the columns are labeled by unit multi-indices.
std::optional<PluckerVector> plucker_of(const Matrix<Rational>& m,
                                        std::vector<MultiIndex> ambient = {});

// Brute-force check of the quadratic Plucker relations of the output of
// plucker_of (row count = k+1).
bool plucker_relations_hold(const PluckerVector& v, std::size_t rows);

// The incidence test of the universal family: each of the k+1 degree-delta
// forms with coefficient row p of phi_matrix vanishes at
// [T] = [tau_0^r(x) : ... : tau_N^r(x)], x = gamma(0). Equivalently,
// d^[p]F(a)([gamma]_k) = 0 for every 0 <= p <= k.
bool incidence_check(const FamilySpec& spec, const CurveGerm& germ);

// The per-row values sum_I d^[p]_I(a_I)(w) tau^(rI)(x); all zero iff the
// incidence holds. Exposed for failure witnesses.
std::vector<Rational> incidence_values(const FamilySpec& spec, const CurveGerm& germ);

// Cramer's-rule functional: l^p_I(b) = W(b_0,..,b_{p-1}, b tau^((r+k)I),
// b_{p+1},..,b_k)(w) / (tau^(rI)(x) W(b_0,..,b_k)(w)) with b_j = s bt_j.
// Throws FrameDegenerate when the frame Wronskian vanishes at w.
Rational ell_functional(const FamilySpec& spec, const MultiIndex& I,
                        const std::vector<Polynomial>& frame_bt, const Polynomial& s, int p,
                        const Polynomial& arg, const JetPoint& w);

// The determinant identity behind the rank lemma:
//   det_{p,j} l^p_I(bt_j)  =  tau^(k(k+1)I)(x) / s^(k+1)(x).
// Returns (lhs, rhs) for exact comparison.
std::pair<Rational, Rational> local_frame_determinant(const FamilySpec& spec, const MultiIndex& I,
                                                      const std::vector<Polynomial>& frame_bt,
                                                      const Polynomial& s, const JetPoint& w);

// Rank of b -> (l^0_I(b)(w), ..., l^k_I(b)(w)) over the span of `basis`.
std::size_t ell_rank_over_basis(const FamilySpec& spec, const MultiIndex& I,
                                const std::vector<Polynomial>& frame_bt, const Polynomial& s,
                                const JetPoint& w, const std::vector<Polynomial>& basis);

}  // namespace jetwronsk

#endif
