#ifndef JETWRONSK_RATIONAL_HPP
#define JETWRONSK_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace jetwronsk {

// Arbitrary-precision integer. GMP's expression templates are kept out of
// the rest of the code base: assign results to Integer, never to auto.
using Integer = mpz_class;

inline std::string to_string(const Integer& z) { return z.get_str(); }

inline Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Integer pow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// Exact rational scalar. Always reduced, denominator > 0.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design, scalars mix freely
    Rational(const Integer& n) : v_(n) {}
    Rational(long num, long den) : v_(num, den) { normalize(); }
    Rational(const Integer& num, const Integer& den) : v_(num, den) { normalize(); }

    // Accepts "p" or "p/q", e.g. "-3/4".
    static Rational parse(const std::string& text) {
        mpq_class q;
        if (q.set_str(text, 10) != 0)
            throw std::invalid_argument("invalid rational literal: '" + text + "'");
        Rational r;
        r.v_ = q;
        r.normalize();
        return r;
    }

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const {
        Rational r;
        r.v_ = -v_;
        return r;
    }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational abs() const {
        Rational r;
        r.v_ = ::abs(v_);
        return r;
    }

    // Canonical text: "p" when q = 1, else "p/q".
    std::string str() const {
        if (v_.get_den() == 1) return v_.get_num().get_str();
        return v_.get_str();
    }

private:
    void normalize() {
        if (sgn(v_.get_den()) == 0) throw std::domain_error("rational with zero denominator");
        v_.canonicalize();
    }

    mpq_class v_;  // canonical: reduced, den > 0
};

inline Rational pow(const Rational& base, unsigned long e) {
    Integer n = pow(base.num(), e);
    Integer d = pow(base.den(), e);
    return Rational(n, d);
}

inline std::string to_string(const Rational& q) { return q.str(); }

}  // namespace jetwronsk

#endif
