#ifndef JETWRONSK_POLYNOMIAL_HPP
#define JETWRONSK_POLYNOMIAL_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jetwronsk/rational.hpp"

namespace jetwronsk {

// Exponent vector; length always equals the owning polynomial's variable count.
using Monomial = std::vector<int>;

int monomial_degree(const Monomial& m);

// Graded-lex, ascending. Total degree first, then lexicographic on the
// exponent vector (earlier variable = more significant). Reverse iteration
// over a map with this comparator yields the canonical descending print order.
struct GradedLexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// Multivariate polynomial over Q with a fixed ordered variable list.
// No zero coefficients are stored; the zero polynomial has an empty term map.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, GradedLexLess>;

    Polynomial() = default;  // zero polynomial with empty variable list
    explicit Polynomial(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static Polynomial constant(const Rational& c, std::vector<std::string> vars = {});
    static Polynomial variable(const std::string& name, const std::vector<std::string>& vars);

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Constant term (coefficient of the all-zero monomial).
    Rational constant_term() const;
    // -1 for the zero polynomial.
    int total_degree() const;

    void set_coeff(const Monomial& m, const Rational& c);
    Rational coeff(const Monomial& m) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& c, Polynomial p) { return p.scale(c); }
    Polynomial& scale(const Rational& c);
    Polynomial pow(unsigned e) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b);
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial derivative(std::size_t var_index) const;

    // Exact substitution of one value per variable (aligned to vars()).
    Rational evaluate(const std::vector<Rational>& values) const;

    // Substitute a polynomial per variable. All images must share one
    // variable list, which becomes the result's list.
    Polynomial substitute(const std::vector<Polynomial>& images) const;

    // Re-expresses the polynomial over `universe`, which must contain every
    // variable of vars() by name.
    Polynomial aligned_to(const std::vector<std::string>& universe) const;

    // Canonical text: graded-lex descending, explicit '*' and '^',
    // coefficients as integers or "p/q".
    std::string str() const;

private:
    void prune();

    std::vector<std::string> vars_;
    TermMap terms_;
};

// Exact quotient q with q*den == num, or nullopt when no such polynomial
// exists. den must be nonzero.
std::optional<Polynomial> poly_divide_exact(const Polynomial& num, const Polynomial& den);

// Shared variable order for two operands: a's variables followed by b's
// extras, in their original order.
std::vector<std::string> merged_universe(const std::vector<std::string>& a,
                                         const std::vector<std::string>& b);

}  // namespace jetwronsk

#endif
