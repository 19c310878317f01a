#include "jetwronsk/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace jetwronsk {

int monomial_degree(const Monomial& m) {
    int d = 0;
    for (int e : m) d += e;
    return d;
}

bool GradedLexLess::operator()(const Monomial& a, const Monomial& b) const {
    const int da = monomial_degree(a);
    const int db = monomial_degree(b);
    if (da != db) return da < db;
    // Same length is an invariant inside one polynomial; guard anyway.
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return a.size() < b.size();
}

Polynomial Polynomial::constant(const Rational& c, std::vector<std::string> vars) {
    Polynomial p(std::move(vars));
    if (!c.is_zero()) p.terms_.emplace(Monomial(p.vars_.size(), 0), c);
    return p;
}

Polynomial Polynomial::variable(const std::string& name, const std::vector<std::string>& vars) {
    auto it = std::find(vars.begin(), vars.end(), name);
    if (it == vars.end())
        throw std::invalid_argument("variable '" + name + "' not in the variable list");
    Polynomial p(vars);
    Monomial m(vars.size(), 0);
    m[static_cast<std::size_t>(it - vars.begin())] = 1;
    p.terms_.emplace(std::move(m), Rational(1));
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && monomial_degree(terms_.begin()->first) == 0);
}

Rational Polynomial::constant_term() const {
    auto it = terms_.find(Monomial(vars_.size(), 0));
    return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::total_degree() const {
    if (terms_.empty()) return -1;
    return monomial_degree(terms_.rbegin()->first);
}

void Polynomial::set_coeff(const Monomial& m, const Rational& c) {
    if (m.size() != vars_.size())
        throw std::invalid_argument("exponent vector length does not match variable count");
    if (c.is_zero())
        terms_.erase(m);
    else
        terms_[m] = c;
}

Rational Polynomial::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second.is_zero())
            it = terms_.erase(it);
        else
            ++it;
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

std::vector<std::string> merged_universe(const std::vector<std::string>& a,
                                         const std::vector<std::string>& b) {
    std::vector<std::string> u = a;
    for (const auto& v : b)
        if (std::find(u.begin(), u.end(), v) == u.end()) u.push_back(v);
    return u;
}

Polynomial Polynomial::aligned_to(const std::vector<std::string>& universe) const {
    if (universe == vars_) return *this;
    std::vector<std::size_t> where(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::find(universe.begin(), universe.end(), vars_[i]);
        if (it == universe.end())
            throw std::invalid_argument("variable '" + vars_[i] + "' missing from target universe");
        where[i] = static_cast<std::size_t>(it - universe.begin());
    }
    Polynomial r(universe);
    for (const auto& [m, c] : terms_) {
        Monomial t(universe.size(), 0);
        for (std::size_t i = 0; i < m.size(); ++i) t[where[i]] = m[i];
        r.terms_.emplace(std::move(t), c);
    }
    return r;
}

namespace {

// Brings a and b onto one universe, preferring the cheap identical-list path.
void align_pair(Polynomial& a, Polynomial& b) {
    if (a.vars() == b.vars()) return;
    std::vector<std::string> u = merged_universe(a.vars(), b.vars());
    a = a.aligned_to(u);
    b = b.aligned_to(u);
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (vars_ != o.vars_) {
        Polynomial lhs = *this, rhs = o;
        align_pair(lhs, rhs);
        *this = lhs += rhs;
        return *this;
    }
    for (const auto& [m, c] : o.terms_) {
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (vars_ != o.vars_) {
        Polynomial lhs = *this, rhs = o;
        align_pair(lhs, rhs);
        *this = lhs -= rhs;
        return *this;
    }
    for (const auto& [m, c] : o.terms_) {
        auto [it, inserted] = terms_.emplace(m, -c);
        if (!inserted) {
            it->second -= c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.vars_ != b.vars_) {
        Polynomial lhs = a, rhs = b;
        align_pair(lhs, rhs);
        return lhs * rhs;
    }
    Polynomial r(a.vars_);
    const std::size_t nv = a.vars_.size();
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m(nv);
            for (std::size_t i = 0; i < nv; ++i) m[i] = ma[i] + mb[i];
            Rational c = ca * cb;
            auto [it, inserted] = r.terms_.emplace(std::move(m), c);
            if (!inserted) {
                it->second += c;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
    }
    return r;
}

Polynomial& Polynomial::scale(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial r = Polynomial::constant(Rational(1), vars_);
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1u) r = r * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.vars_ == b.vars_) return a.terms_ == b.terms_;
    Polynomial lhs = a, rhs = b;
    align_pair(lhs, rhs);
    return lhs.terms_ == rhs.terms_;
}

Polynomial Polynomial::derivative(std::size_t var_index) const {
    if (var_index >= vars_.size()) throw std::invalid_argument("derivative: bad variable index");
    Polynomial r(vars_);
    for (const auto& [m, c] : terms_) {
        if (m[var_index] == 0) continue;
        Monomial t = m;
        t[var_index] -= 1;
        r.terms_.emplace(std::move(t), c * Rational(m[var_index]));
    }
    return r;
}

Rational Polynomial::evaluate(const std::vector<Rational>& values) const {
    if (values.size() != vars_.size())
        throw std::invalid_argument("evaluate: value count does not match variable count");
    Rational acc(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i] > 0) t *= jetwronsk::pow(values[i], static_cast<unsigned long>(m[i]));
        acc += t;
    }
    return acc;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
    if (images.size() != vars_.size())
        throw std::invalid_argument("substitute: image count does not match variable count");
    std::vector<std::string> target = images.empty() ? vars_ : images.front().vars();
    for (const auto& im : images)
        if (im.vars() != target)
            throw std::invalid_argument("substitute: images must share one variable list");

    // Cache image powers per variable up to the largest exponent used.
    std::vector<std::vector<Polynomial>> powers(images.size());
    for (std::size_t i = 0; i < images.size(); ++i)
        powers[i].push_back(Polynomial::constant(Rational(1), target));

    Polynomial r(target);
    for (const auto& [m, c] : terms_) {
        Polynomial t = Polynomial::constant(c, target);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            auto& pw = powers[i];
            while (pw.size() <= static_cast<std::size_t>(m[i]))
                pw.push_back(pw.back() * images[i]);
            t = t * pw[static_cast<std::size_t>(m[i])];
        }
        r += t;
    }
    return r;
}

std::optional<Polynomial> poly_divide_exact(const Polynomial& num, const Polynomial& den) {
    if (den.is_zero()) throw std::invalid_argument("poly_divide_exact: zero divisor");
    Polynomial n = num, d = den;
    if (n.vars() != d.vars()) {
        std::vector<std::string> u = merged_universe(n.vars(), d.vars());
        n = n.aligned_to(u);
        d = d.aligned_to(u);
    }
    Polynomial q(n.vars());
    const auto& dlead = *d.terms().rbegin();
    Polynomial rem = n;
    // Single-divisor graded-lex division. If num = q*den exactly, the lead
    // term of the remainder is divisible by the lead term of den at every
    // step, so hitting a non-divisible lead term proves non-divisibility.
    while (!rem.is_zero()) {
        const auto& rlead = *rem.terms().rbegin();
        Monomial qm(rlead.first.size());
        for (std::size_t i = 0; i < qm.size(); ++i) {
            qm[i] = rlead.first[i] - dlead.first[i];
            if (qm[i] < 0) return std::nullopt;
        }
        Polynomial qt(n.vars());
        qt.set_coeff(qm, rlead.second / dlead.second);
        q += qt;
        rem -= qt * d;
    }
    return q;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Monomial& m = it->first;
        const Rational& c = it->second;
        const bool neg = c.sign() < 0;
        if (first) {
            if (neg) out << '-';
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        const Rational mag = c.abs();
        const bool has_vars = monomial_degree(m) > 0;
        if (!has_vars) {
            out << mag.str();
            continue;
        }
        bool need_star = false;
        if (!mag.is_one()) {
            out << mag.str();
            need_star = true;
        }
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (need_star) out << '*';
            out << vars_[i];
            if (m[i] != 1) out << '^' << m[i];
            need_star = true;
        }
    }
    return out.str();
}

}  // namespace jetwronsk
