#ifndef JETWRONSK_SERIES_HPP
#define JETWRONSK_SERIES_HPP

#include <string>
#include <vector>

#include "jetwronsk/polynomial.hpp"
#include "jetwronsk/rational.hpp"

namespace jetwronsk {

// Univariate power series in t known mod t^(order+1). The truncation order
// is carried explicitly; mixing orders is an error, never a silent truncation.
class TruncatedSeries {
public:
    TruncatedSeries() : coeffs_(1) {}  // zero series, order 0
    explicit TruncatedSeries(int order) : coeffs_(static_cast<std::size_t>(order) + 1) {
        if (order < 0) throw std::invalid_argument("series order must be >= 0");
    }
    static TruncatedSeries from_coeffs(std::vector<Rational> coeffs);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational& coeff(int m) const;
    void set_coeff(int m, const Rational& c);
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;

    TruncatedSeries operator-() const;
    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const Rational& c, TruncatedSeries s) { return s.scale(c); }
    TruncatedSeries& scale(const Rational& c);
    TruncatedSeries pow(unsigned e) const;

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) {
        return !(a == b);
    }

    std::string str() const;  // e.g. "1 - 1/2*t^2" (reporting only)

private:
    void check_same_order(const TruncatedSeries& o) const;
    std::vector<Rational> coeffs_;  // c_0..c_order
};

// h(g(t)) mod t^(K+1). Requires g(0) = 0 and equal truncation orders.
TruncatedSeries series_compose(const TruncatedSeries& h, const TruncatedSeries& g);

// f(c_1(t), ..., c_n(t)) mod t^(K+1) for a polynomial f in n variables.
// This is the analytic side of the jet oracle.
TruncatedSeries compose_polynomial(const Polynomial& f,
                                   const std::vector<TruncatedSeries>& components);

}  // namespace jetwronsk

#endif
