#include "jetwronsk/series.hpp"

#include <sstream>
#include <stdexcept>

namespace jetwronsk {

TruncatedSeries TruncatedSeries::from_coeffs(std::vector<Rational> coeffs) {
    if (coeffs.empty()) throw std::invalid_argument("series needs at least the constant term");
    TruncatedSeries s;
    s.coeffs_ = std::move(coeffs);
    return s;
}

const Rational& TruncatedSeries::coeff(int m) const {
    if (m < 0 || m > order()) throw std::out_of_range("series coefficient beyond truncation");
    return coeffs_[static_cast<std::size_t>(m)];
}

void TruncatedSeries::set_coeff(int m, const Rational& c) {
    if (m < 0 || m > order()) throw std::out_of_range("series coefficient beyond truncation");
    coeffs_[static_cast<std::size_t>(m)] = c;
}

bool TruncatedSeries::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

void TruncatedSeries::check_same_order(const TruncatedSeries& o) const {
    if (coeffs_.size() != o.coeffs_.size())
        throw std::invalid_argument("truncation orders differ (" + std::to_string(order()) +
                                    " vs " + std::to_string(o.order()) + ")");
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    check_same_order(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
    check_same_order(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.check_same_order(b);
    TruncatedSeries r(a.order());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < b.coeffs_.size(); ++j)
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return r;
}

TruncatedSeries& TruncatedSeries::scale(const Rational& c) {
    for (auto& v : coeffs_) v *= c;
    return *this;
}

TruncatedSeries TruncatedSeries::pow(unsigned e) const {
    TruncatedSeries r(order());
    r.set_coeff(0, Rational(1));
    TruncatedSeries base = *this;
    while (e > 0) {
        if (e & 1u) r = r * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return r;
}

TruncatedSeries series_compose(const TruncatedSeries& h, const TruncatedSeries& g) {
    if (h.order() != g.order())
        throw std::invalid_argument("series_compose: truncation orders differ (" +
                                    std::to_string(h.order()) + " vs " +
                                    std::to_string(g.order()) + ")");
    if (!g.coeff(0).is_zero())
        throw std::invalid_argument("series_compose: inner series must vanish at 0");
    // Horner from the top coefficient down; every product stays truncated.
    const int K = h.order();
    TruncatedSeries r(K);
    r.set_coeff(0, h.coeff(K));
    for (int i = K - 1; i >= 0; --i) {
        r = r * g;
        r.set_coeff(0, r.coeff(0) + h.coeff(i));
    }
    return r;
}

TruncatedSeries compose_polynomial(const Polynomial& f,
                                   const std::vector<TruncatedSeries>& components) {
    if (components.size() != f.vars().size())
        throw std::invalid_argument("compose_polynomial: component count mismatch");
    int K = components.empty() ? 0 : components.front().order();
    for (const auto& c : components)
        if (c.order() != K)
            throw std::invalid_argument("compose_polynomial: components must share one order");

    std::vector<std::vector<TruncatedSeries>> powers(components.size());
    TruncatedSeries one(K);
    one.set_coeff(0, Rational(1));
    for (auto& pw : powers) pw.push_back(one);

    TruncatedSeries acc(K);
    for (const auto& [m, c] : f.terms()) {
        TruncatedSeries t = one;
        t.scale(c);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            auto& pw = powers[i];
            while (pw.size() <= static_cast<std::size_t>(m[i]))
                pw.push_back(pw.back() * components[i]);
            t = t * pw[static_cast<std::size_t>(m[i])];
        }
        acc += t;
    }
    return acc;
}

std::string TruncatedSeries::str() const {
    std::ostringstream out;
    bool first = true;
    for (int m = 0; m <= order(); ++m) {
        const Rational& c = coeffs_[static_cast<std::size_t>(m)];
        if (c.is_zero()) continue;
        const bool neg = c.sign() < 0;
        if (first) {
            if (neg) out << '-';
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        const Rational mag = c.abs();
        if (m == 0) {
            out << mag.str();
        } else {
            if (!mag.is_one()) out << mag.str() << '*';
            out << 't';
            if (m != 1) out << '^' << m;
        }
    }
    if (first) out << '0';
    return out.str();
}

}  // namespace jetwronsk
