#include "jetwronsk/bounds.hpp"

#include <stdexcept>

#include "jetwronsk/errors.hpp"

namespace jetwronsk {

void ParamSet::validate_theorem_hypotheses() const {
    if (!(N >= n && n >= 2)) throw std::invalid_argument("need N >= n >= 2");
    if (!(k >= N - 1)) throw std::invalid_argument("need k >= N-1");
    if (v < 1 || u < 1) throw std::invalid_argument("need u, v >= 1");
}

long jet_dim(long n, long k) {
    if (n < 1 || k < 0) throw std::invalid_argument("jet_dim: need n >= 1, k >= 0");
    return n + k * (n - 1);
}

std::pair<Integer, Integer> index_counts(long N, long delta, long N_x) {
    if (N < 0 || delta < 0 || N_x < 0 || N_x > N + 1)
        throw std::invalid_argument("index_counts: need 0 <= N_x <= N+1, delta >= 0");
    Integer total = binomial(static_cast<unsigned long>(N + delta),
                             static_cast<unsigned long>(delta));
    Integer at_x;
    if (N_x - 1 + delta < 0)
        at_x = delta == 0 ? 1 : 0;
    else
        at_x = binomial(static_cast<unsigned long>(N_x - 1 + delta),
                        static_cast<unsigned long>(delta));
    return {total, at_x};
}

DeltaReport delta_conditions(const ParamSet& p) {
    if (p.n < 1 || p.k < 0 || p.delta < 0 || p.N < p.n)
        throw std::invalid_argument("delta_conditions: need n >= 1, k >= 0, delta >= 0, N >= n");
    DeltaReport rep;
    rep.basic = p.delta >= p.n * (p.k + 1);
    rep.margin = p.n + p.k * (p.n - 1) + p.k - p.delta - 1;

    Integer lhs = binomial(static_cast<unsigned long>(p.N - p.n + p.delta),
                           static_cast<unsigned long>(p.delta));
    rep.optimal1 = lhs > Integer(jet_dim(p.n, p.k) + p.k);

    // Strata X_J have dim = max(-1, n - #J); the empty ones impose nothing,
    // and the check runs over every stratum of dimension >= 1.
    rep.optimal2 = true;
    for (long j = 0; j <= p.n - 1; ++j) {
        const long dim = p.n - j;
        if (p.delta + 1 <= jet_dim(dim, p.k)) {
            rep.optimal2 = false;
            break;
        }
    }
    return rep;
}

Integer r_threshold(long v, long u, long M, long k, long epsilon, long delta) {
    if (v < 1) throw std::invalid_argument("r_threshold: need v >= 1");
    Integer num = Integer(M) * Integer(k + 1) *
                  (Integer(u) * Integer(epsilon) + Integer(k) * Integer(v) * Integer(delta));
    num += 1;
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), Integer(v).get_mpz_t());
    return q;
}

Integer degree_threshold(const ParamSet& p) {
    Integer vd = Integer(p.v) * Integer(p.delta);
    return Integer(p.u) * (Integer(p.m_inf) + vd) + (Integer(p.R) + Integer(p.k)) * vd;
}

DegreeDecomposition decompose_degree(const ParamSet& p, const Integer& d) {
    if (p.v < 1 || p.u < 1 || p.delta < 1)
        throw std::invalid_argument("decompose_degree: need u, v, delta >= 1");
    Integer vd = Integer(p.v) * Integer(p.delta);
    Integer g;
    mpz_gcd(g.get_mpz_t(), Integer(p.u).get_mpz_t(), vd.get_mpz_t());
    if (g != 1) throw GcdError("gcd(u, v*delta) = " + g.get_str() + ", expected 1");
    const Integer d0 = degree_threshold(p);
    if (d < d0)
        throw TooSmall("d = " + d.get_str() + " is below d_0 = " + d0.get_str());

    // epsilon is the unique element of {m_inf, ..., m_inf + v delta - 1}
    // with u epsilon = d (mod v delta).
    Integer uinv;
    if (mpz_invert(uinv.get_mpz_t(), Integer(p.u).get_mpz_t(), vd.get_mpz_t()) == 0)
        throw GcdError("u has no inverse mod v*delta");
    Integer target = uinv * d;
    Integer offset = target - Integer(p.m_inf);
    Integer shift;
    mpz_mod(shift.get_mpz_t(), offset.get_mpz_t(), vd.get_mpz_t());
    Integer epsilon = Integer(p.m_inf) + shift;

    Integer rest = d - Integer(p.u) * epsilon;  // = t * v delta, t >= R + k + 1
    Integer t = rest / vd;
    DegreeDecomposition out{d, epsilon, t - Integer(p.k)};
    if (Integer(p.u) * out.epsilon + (out.r + Integer(p.k)) * vd != d)
        throw std::logic_error("degree decomposition identity violated");
    if (out.r < Integer(p.R)) throw std::logic_error("degree decomposition gave r < R");
    return out;
}

std::pair<Integer, Integer> deng_bound(long n) {
    if (n < 2) throw std::invalid_argument("deng_bound: need n >= 2");
    const Integer zn(n), zn1(n + 1);
    Integer head = pow(zn, static_cast<unsigned long>(n + 1)) *
                   pow(zn1, static_cast<unsigned long>(n + 2)) *
                   (zn * zn * zn + 2 * zn * zn + 2 * zn - 1);
    Integer tail = zn * zn * zn + 3 * zn * zn + 3 * zn;
    Integer d0 = head + tail;
    Integer cap = pow(zn1, static_cast<unsigned long>(2 * n + 6));
    if (d0 > cap) throw std::logic_error("Deng bound exceeded its cap (n+1)^(2n+6)");
    return {d0, cap};
}

long kprime(long k) {
    if (k < 0) throw std::invalid_argument("kprime: need k >= 0");
    return k * (k + 1) / 2;
}

}  // namespace jetwronsk
