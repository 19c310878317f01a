#include "jetwronsk/reparam.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace jetwronsk {

Reparam::Reparam(int k, std::vector<Rational> coeffs) : k(k), a(std::move(coeffs)) {
    if (k < 1) throw std::invalid_argument("Reparam: order must be >= 1");
    if (a.size() != static_cast<std::size_t>(k))
        throw std::invalid_argument("Reparam: expected k coefficients a_1..a_k");
    if (a.front().is_zero()) throw std::invalid_argument("Reparam: a_1 must be nonzero");
}

Reparam Reparam::identity(int k) {
    std::vector<Rational> c(static_cast<std::size_t>(k), Rational(0));
    c.front() = Rational(1);
    return Reparam(k, std::move(c));
}

TruncatedSeries Reparam::to_series() const {
    TruncatedSeries s(k);
    for (int j = 1; j <= k; ++j) s.set_coeff(j, a[static_cast<std::size_t>(j - 1)]);
    return s;
}

std::string Reparam::str() const {
    std::ostringstream out;
    bool first = true;
    for (int j = 1; j <= k; ++j) {
        const Rational& c = a[static_cast<std::size_t>(j - 1)];
        if (c.is_zero()) continue;
        if (!first) out << (c.sign() < 0 ? " - " : " + ");
        else if (c.sign() < 0) out << '-';
        first = false;
        const Rational mag = c.abs();
        if (!mag.is_one()) out << mag.str() << '*';
        out << 't';
        if (j != 1) out << '^' << j;
    }
    if (first) out << '0';
    return out.str();
}

Reparam compose_reparam(const Reparam& phi, const Reparam& psi) {
    if (phi.k != psi.k) throw std::invalid_argument("compose_reparam: orders differ");
    TruncatedSeries s = series_compose(phi.to_series(), psi.to_series());
    std::vector<Rational> c;
    c.reserve(static_cast<std::size_t>(phi.k));
    for (int j = 1; j <= phi.k; ++j) c.push_back(s.coeff(j));
    return Reparam(phi.k, std::move(c));
}

Reparam invert_reparam(const Reparam& phi) {
    const int k = phi.k;
    std::vector<Rational> b(static_cast<std::size_t>(k), Rational(0));
    b[0] = Rational(1) / phi.a1();
    // Adding b_m t^m changes coeff_m(phi o psi) by exactly a_1 b_m.
    for (int m = 2; m <= k; ++m) {
        Reparam partial(k, b);
        TruncatedSeries comp = series_compose(phi.to_series(), partial.to_series());
        b[static_cast<std::size_t>(m - 1)] = -comp.coeff(m) / phi.a1();
    }
    return Reparam(k, std::move(b));
}

namespace {

std::vector<std::string> bell_vars(int p) {
    std::vector<std::string> v;
    v.reserve(static_cast<std::size_t>(p));
    for (int j = 1; j <= p; ++j) v.push_back("g" + std::to_string(j));
    return v;
}

// Derivation gj -> g_{j+1} on polynomials in g1..g_{p} (target universe g1..g_{p+1}).
Polynomial bell_derive(const Polynomial& q, int p) {
    const std::vector<std::string> target = bell_vars(p + 1);
    Polynomial aligned = q.aligned_to(target);
    Polynomial out(target);
    for (int j = 1; j <= p; ++j) {
        Polynomial partial = aligned.derivative(static_cast<std::size_t>(j - 1));
        if (partial.is_zero()) continue;
        out += partial * Polynomial::variable("g" + std::to_string(j + 1), target);
    }
    return out;
}

}  // namespace

const Polynomial& bell_polynomial(int p, int i) {
    if (p < 1 || i < 1 || i > p) throw std::invalid_argument("bell_polynomial: need 1 <= i <= p");
    static std::map<std::pair<int, int>, Polynomial> table;
    static std::mutex mutex;
    std::lock_guard<std::mutex> guard(mutex);
    auto found = table.find({p, i});
    if (found != table.end()) return found->second;
    // Fill row by row up to p.
    if (table.find({1, 1}) == table.end())
        table.emplace(std::make_pair(1, 1), Polynomial::variable("g1", bell_vars(1)));
    for (int q = 1; q < p; ++q) {
        for (int j = 1; j <= q + 1; ++j) {
            if (table.count({q + 1, j})) continue;
            Polynomial val(bell_vars(q + 1));
            if (j <= q) val += bell_derive(table.at({q, j}), q);
            if (j >= 2 && j - 1 <= q)
                val += Polynomial::variable("g1", bell_vars(q + 1)) *
                       table.at({q, j - 1}).aligned_to(bell_vars(q + 1));
            table.emplace(std::make_pair(q + 1, j), std::move(val));
        }
    }
    return table.at({p, i});
}

std::vector<Rational> faa_di_bruno_coeffs(const Reparam& phi, int p) {
    if (p < 1 || p > phi.k)
        throw std::invalid_argument("faa_di_bruno_coeffs: need 1 <= p <= k");
    // gj = phi^(j)(0) = j! a_j (zero beyond the reparametrization order).
    std::vector<Rational> derivs;
    Integer fact(1);
    for (int j = 1; j <= p; ++j) {
        fact *= j;
        Rational aj = j <= phi.k ? phi.a[static_cast<std::size_t>(j - 1)] : Rational(0);
        derivs.push_back(Rational(fact) * aj);
    }
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(p));
    for (int i = 1; i <= p; ++i) {
        Polynomial b = bell_polynomial(p, i).aligned_to(bell_vars(p));
        out.push_back(b.evaluate(derivs));
    }
    return out;
}

JetPoint act(const Reparam& phi, const JetPoint& w) {
    const JetContext& ctx = w.context;
    if (phi.k != ctx.k) throw std::invalid_argument("act: reparametrization order != jet order");
    JetPoint out = w;
    for (int p = 1; p <= ctx.k; ++p) {
        const std::vector<Rational> coeffs = faa_di_bruno_coeffs(phi, p);
        for (int i = 1; i <= ctx.n; ++i) {
            Rational acc(0);
            for (int q = 1; q <= p; ++q)
                acc += coeffs[static_cast<std::size_t>(q - 1)] * w.value(i, q);
            out.value(i, p) = acc;
        }
    }
    return out;
}

JetPolynomial act_symbolic(const Reparam& phi, const JetPolynomial& f) {
    const JetContext& ctx = f.context;
    if (phi.k != ctx.k)
        throw std::invalid_argument("act_symbolic: reparametrization order != jet order");
    std::vector<Polynomial> images(static_cast<std::size_t>(ctx.var_count()));
    for (int i = 1; i <= ctx.n; ++i) {
        images[ctx.var_index(i, 0)] = Polynomial::variable(JetContext::var_name(i, 0), ctx.universe());
        for (int p = 1; p <= ctx.k; ++p) {
            const std::vector<Rational> coeffs = faa_di_bruno_coeffs(phi, p);
            Polynomial img(ctx.universe());
            for (int q = 1; q <= p; ++q)
                img += coeffs[static_cast<std::size_t>(q - 1)] *
                       Polynomial::variable(JetContext::var_name(i, q), ctx.universe());
            images[ctx.var_index(i, p)] = std::move(img);
        }
    }
    return JetPolynomial(ctx, f.poly.substitute(images));
}

}  // namespace jetwronsk
