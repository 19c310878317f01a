#ifndef JETWRONSK_BOUNDS_HPP
#define JETWRONSK_BOUNDS_HPP

#include <utility>

#include "jetwronsk/rational.hpp"

namespace jetwronsk {

// Pure-numeric bookkeeping for the effective bounds. m_inf, M and R stand in
// for the noetherian constants the argument does not compute.
struct ParamSet {
    long n = 2;
    long N = 2;
    long k = 1;
    long delta = 1;
    long epsilon = 0;
    long u = 1;
    long v = 1;
    long m_inf = 0;
    long M = 0;
    long R = 0;

    // Theorem-level hypotheses: N >= n >= 2, k >= N-1, v,u >= 1.
    void validate_theorem_hypotheses() const;
};

struct DegreeDecomposition {
    Integer d;
    Integer epsilon;
    Integer r;
};

// Dimension of the k-th Demailly-Semple level over an n-fold: n + k(n-1).
long jet_dim(long n, long k);

// (#I, #I_x) = (binom(N+delta, delta), binom(N_x-1+delta, delta)).
std::pair<Integer, Integer> index_counts(long N, long delta, long N_x);

struct DeltaReport {
    bool basic = false;       // delta >= n(k+1)
    bool optimal1 = false;    // binom(N-n+delta, delta) > jet_dim(n,k) + k
    bool optimal2 = false;    // delta+1 > jet_dim(dim X_J, k) on every stratum
    long margin = 0;          // n + k(n-1) + k - delta - 1; basic <=> margin < 0
};

DeltaReport delta_conditions(const ParamSet& p);

// ceil((M(k+1)(u e + k v delta) + 1) / v).
Integer r_threshold(long v, long u, long M, long k, long epsilon, long delta);

// u(m_inf + v delta) + (R + k) v delta, the effective degree threshold.
Integer degree_threshold(const ParamSet& p);

// Writes d = u e + (r+k) v delta with m_inf <= e < m_inf + v delta and
// r >= R, via one modular inverse. Throws GcdError when gcd(u, v delta) != 1
// and TooSmall when d < d_0.
DegreeDecomposition decompose_degree(const ParamSet& p, const Integer& d);

// Deng's effective bound together with its cap (n+1)^(2n+6).
std::pair<Integer, Integer> deng_bound(long n);

// k' = k(k+1)/2, the Wronskian weight.
long kprime(long k);

}  // namespace jetwronsk

#endif
