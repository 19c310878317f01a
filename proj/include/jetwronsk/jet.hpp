#ifndef JETWRONSK_JET_HPP
#define JETWRONSK_JET_HPP

#include <string>
#include <vector>

#include "jetwronsk/errors.hpp"
#include "jetwronsk/polynomial.hpp"
#include "jetwronsk/rational.hpp"
#include "jetwronsk/series.hpp"

namespace jetwronsk {

// Chart data: n base variables z1..zn and jet order k. The induced variable
// universe is {z_i^(m) : 1 <= i <= n, 0 <= m <= k}, where z_i^(m) is spelled
// zi followed by m primes and z_i^(0) is zi itself.
struct JetContext {
    int n = 1;
    int k = 0;

    JetContext() = default;
    JetContext(int n, int k);

    bool operator==(const JetContext&) const = default;

    int var_count() const { return n * (k + 1); }

    // Position of z_i^(m) in the polynomial universe. Variables are grouped
    // by base index, highest derivative order first, so that graded-lex
    // printing ranks z1'' above z1' above z1.
    std::size_t var_index(int i, int m) const;

    static std::string var_name(int i, int m);

    // Universe in storage order: z1^(k), ..., z1, z2^(k), ..., zn.
    const std::vector<std::string>& universe() const { return universe_; }
    // z1..zn, the chart coordinates.
    std::vector<std::string> base_vars() const;

private:
    std::vector<std::string> universe_;
};

// Element of O(p_k^-1(U)): a polynomial in the jet coordinates.
struct JetPolynomial {
    JetContext context;
    Polynomial poly;  // vars == context.universe()

    JetPolynomial() = default;
    JetPolynomial(JetContext ctx, Polynomial p);

    bool is_zero() const { return poly.is_zero(); }
    std::string str() const { return poly.str(); }

    friend bool operator==(const JetPolynomial& a, const JetPolynomial& b) {
        return a.context == b.context && a.poly == b.poly;
    }
};

// Truncated curve germ gamma : (C,0) -> C^n; component i is gamma_i(t).
struct CurveGerm {
    JetContext context;
    std::vector<TruncatedSeries> components;  // size n, equal orders >= k

    CurveGerm() = default;
    CurveGerm(JetContext ctx, std::vector<TruncatedSeries> comps);

    int order() const { return components.front().order(); }
    // gamma(0), the base point.
    std::vector<Rational> base_point() const;
};

// A point of J_k X in coordinates: the tuple of derivatives
// (gamma_1(0), ..., gamma_n^(k)(0)).
struct JetPoint {
    JetContext context;
    std::vector<Rational> values;  // aligned with context.universe()

    JetPoint() = default;
    JetPoint(JetContext ctx, std::vector<Rational> vals);
    static JetPoint zero(JetContext ctx) { return JetPoint(ctx, {}); }

    const Rational& value(int i, int m) const { return values[context.var_index(i, m)]; }
    Rational& value(int i, int m) { return values[context.var_index(i, m)]; }

    friend bool operator==(const JetPoint& a, const JetPoint& b) {
        return a.context == b.context && a.values == b.values;
    }
};

// Embeds a polynomial in the base variables z1..zn into the jet universe.
JetPolynomial lift_to_jets(const JetContext& ctx, const Polynomial& base);

// The total derivative d^[p], computed by iterating
//   d^[p+1] f = sum_m sum_i  d(d^[p] f)/dz_i^(m) * z_i^(m+1).
// Throws OrderOverflow when the result would need coordinates beyond order k.
JetPolynomial jet_derivative(const JetPolynomial& f, int p);

// Coordinates of [gamma]_k: z_i^(m) = m! * (coefficient of t^m in gamma_i).
JetPoint jet_of_curve(const CurveGerm& curve);

// Exact substitution.
Rational evaluate(const JetPolynomial& f, const JetPoint& w);

// d^[p](fg) = sum_i binom(p,i) d^[i]f d^[p-i]g, as an exact polynomial identity.
bool leibniz_check(const JetPolynomial& f, const JetPolynomial& g, int p);

// The analytic side of the jet oracle: f o gamma as a truncated series.
TruncatedSeries compose_with_curve(const Polynomial& base_poly, const CurveGerm& curve);

}  // namespace jetwronsk

#endif
