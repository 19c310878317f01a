#include "jetwronsk/grassmann.hpp"

#include <algorithm>
#include <stdexcept>

#include "jetwronsk/errors.hpp"
#include "jetwronsk/wronskian.hpp"

namespace jetwronsk {

Rational PluckerVector::signed_coord(std::vector<std::size_t> tuple) const {
    // Sort with a parity count; equal entries kill the coordinate.
    bool negate = false;
    for (std::size_t i = 0; i + 1 < tuple.size(); ++i)
        for (std::size_t j = 0; j + 1 < tuple.size() - i; ++j) {
            if (tuple[j] == tuple[j + 1]) return Rational(0);
            if (tuple[j] > tuple[j + 1]) {
                std::swap(tuple[j], tuple[j + 1]);
                negate = !negate;
            }
        }
    auto it = coords.find(tuple);
    if (it == coords.end()) return Rational(0);
    return negate ? -it->second : it->second;
}

bool PluckerVector::equal_mod_scale(const PluckerVector& a, const PluckerVector& b) {
    if (a.ambient != b.ambient) return false;
    auto first_nonzero = [](const PluckerVector& v) {
        for (const auto& [t, c] : v.coords)
            if (!c.is_zero()) return std::make_pair(t, c);
        return std::make_pair(std::vector<std::size_t>{}, Rational(0));
    };
    const auto [ta, ca] = first_nonzero(a);
    const auto [tb, cb] = first_nonzero(b);
    if (ta != tb) return false;
    if (ca.is_zero()) return cb.is_zero();
    // Compare a / ca with b / cb coordinatewise.
    for (const auto& [t, c] : a.coords) {
        auto it = b.coords.find(t);
        const Rational other = it == b.coords.end() ? Rational(0) : it->second;
        if (c / ca != other / cb) return false;
    }
    for (const auto& [t, c] : b.coords)
        if (a.coords.find(t) == a.coords.end() && !(c / cb).is_zero()) return false;
    return true;
}

Matrix<Rational> phi_matrix(const FamilySpec& spec, const JetPoint& w, std::size_t index_cap) {
    if (!(w.context == spec.context))
        throw std::invalid_argument("phi_matrix: jet contexts differ");
    const std::vector<MultiIndex> all = enumerate_multi_indices(spec.N, spec.delta);
    if (all.size() > index_cap)
        throw std::invalid_argument("phi_matrix: #I = " + std::to_string(all.size()) +
                                    " exceeds the cap of " + std::to_string(index_cap));
    const std::size_t rows = static_cast<std::size_t>(spec.context.k) + 1;
    Matrix<Rational> m(rows, all.size());
    for (std::size_t col = 0; col < all.size(); ++col)
        for (std::size_t p = 0; p < rows; ++p)
            m(p, col) = evaluate(reduced_jet_derivative(spec, all[col], static_cast<int>(p)), w);
    return m;
}

std::optional<PluckerVector> plucker_of(const Matrix<Rational>& m,
                                        std::vector<MultiIndex> ambient) {
    const std::size_t rows = m.rows();
    if (ambient.empty()) {
        // Label columns by unit multi-indices.
        for (std::size_t j = 0; j < m.cols(); ++j) {
            MultiIndex I(m.cols(), 0);
            I[j] = 1;
            ambient.push_back(std::move(I));
        }
    }
    if (ambient.size() != m.cols())
        throw std::invalid_argument("plucker_of: ambient labels must match the column count");
    PluckerVector v;
    v.ambient = std::move(ambient);
    bool any_nonzero = false;
    for (const auto& cols : combinations(m.cols(), rows)) {
        Rational minor = column_minor(m, cols);
        if (!minor.is_zero()) any_nonzero = true;
        v.coords.emplace(cols, std::move(minor));
    }
    if (!any_nonzero) return std::nullopt;  // rank < k+1, no Grassmannian point
    return v;
}

bool plucker_relations_hold(const PluckerVector& v, std::size_t rows) {
    const std::size_t n = v.ambient.size();
    if (rows < 1 || rows > n) return true;
    // For every alpha of size rows-1 and beta of size rows+1:
    //   sum_l (-1)^l p_{alpha, beta_l} p_{beta \ beta_l} = 0.
    for (const auto& alpha : combinations(n, rows - 1)) {
        for (const auto& beta : combinations(n, rows + 1)) {
            Rational acc(0);
            for (std::size_t l = 0; l < beta.size(); ++l) {
                std::vector<std::size_t> left = alpha;
                left.push_back(beta[l]);
                std::vector<std::size_t> right;
                for (std::size_t j = 0; j < beta.size(); ++j)
                    if (j != l) right.push_back(beta[j]);
                Rational term = v.signed_coord(left) * v.signed_coord(right);
                if (l % 2 == 0)
                    acc += term;
                else
                    acc -= term;
            }
            if (!acc.is_zero()) return false;
        }
    }
    return true;
}

std::vector<Rational> incidence_values(const FamilySpec& spec, const CurveGerm& germ) {
    const JetPoint w = jet_of_curve(germ);
    const std::vector<Rational> x = germ.base_point();
    const std::vector<MultiIndex> all = enumerate_multi_indices(spec.N, spec.delta);
    const Matrix<Rational> phi = phi_matrix(spec, w);
    // T^I at [T] = [tau_0^r(x) : ... : tau_N^r(x)] is tau^(rI)(x).
    std::vector<Rational> tau_rI;
    tau_rI.reserve(all.size());
    for (const auto& I : all) tau_rI.push_back(spec.tau_power(I, spec.r).evaluate(x));
    std::vector<Rational> out;
    for (std::size_t p = 0; p < phi.rows(); ++p) {
        Rational acc(0);
        for (std::size_t col = 0; col < all.size(); ++col) acc += phi(p, col) * tau_rI[col];
        out.push_back(acc);
    }
    return out;
}

bool incidence_check(const FamilySpec& spec, const CurveGerm& germ) {
    for (const auto& v : incidence_values(spec, germ))
        if (!v.is_zero()) return false;
    return true;
}

namespace {

// Frame b_j = s * bt_j together with the shared denominator at w.
struct FrameData {
    std::vector<Polynomial> b;
    Rational frame_wronskian;  // W(b_0,...,b_k)(w)
    Rational tau_rI_at_x;      // tau^(rI)(x)
};

FrameData prepare_frame(const FamilySpec& spec, const MultiIndex& I,
                        const std::vector<Polynomial>& frame_bt, const Polynomial& s,
                        const JetPoint& w) {
    const JetContext& ctx = spec.context;
    if (frame_bt.size() != static_cast<std::size_t>(ctx.k) + 1)
        throw std::invalid_argument("frame must consist of k+1 sections");
    FrameData data;
    data.b.reserve(frame_bt.size());
    for (const auto& bt : frame_bt) data.b.push_back(s * bt);
    data.frame_wronskian = wronskian_value(ctx, data.b, w);
    if (data.frame_wronskian.is_zero())
        throw FrameDegenerate("the frame Wronskian W(s bt_0, ..., s bt_k) vanishes at w");
    std::vector<Rational> x;
    x.reserve(static_cast<std::size_t>(ctx.n));
    for (int i = 1; i <= ctx.n; ++i) x.push_back(w.value(i, 0));
    data.tau_rI_at_x = spec.tau_power(I, spec.r).evaluate(x);
    if (data.tau_rI_at_x.is_zero())
        throw std::invalid_argument("tau^(rI) vanishes at the base point of w");
    return data;
}

Rational ell_value(const FamilySpec& spec, const FrameData& data, const MultiIndex& I, int p,
                   const Polynomial& arg, const JetPoint& w) {
    std::vector<Polynomial> column = data.b;
    column[static_cast<std::size_t>(p)] =
        arg * spec.tau_power(I, spec.r + spec.context.k);
    const Rational numerator = wronskian_value(spec.context, column, w);
    return numerator / (data.tau_rI_at_x * data.frame_wronskian);
}

}  // namespace

Rational ell_functional(const FamilySpec& spec, const MultiIndex& I,
                        const std::vector<Polynomial>& frame_bt, const Polynomial& s, int p,
                        const Polynomial& arg, const JetPoint& w) {
    if (p < 0 || p > spec.context.k)
        throw std::invalid_argument("ell_functional: need 0 <= p <= k");
    const FrameData data = prepare_frame(spec, I, frame_bt, s, w);
    return ell_value(spec, data, I, p, arg, w);
}

std::pair<Rational, Rational> local_frame_determinant(const FamilySpec& spec, const MultiIndex& I,
                                                      const std::vector<Polynomial>& frame_bt,
                                                      const Polynomial& s, const JetPoint& w) {
    const JetContext& ctx = spec.context;
    const FrameData data = prepare_frame(spec, I, frame_bt, s, w);
    const std::size_t size = frame_bt.size();
    Matrix<Rational> m(size, size);
    for (std::size_t p = 0; p < size; ++p)
        for (std::size_t j = 0; j < size; ++j)
            m(p, j) = ell_value(spec, data, I, static_cast<int>(p), frame_bt[j], w);
    const Rational lhs = bareiss_determinant(std::move(m));

    std::vector<Rational> x;
    x.reserve(static_cast<std::size_t>(ctx.n));
    for (int i = 1; i <= ctx.n; ++i) x.push_back(w.value(i, 0));
    const Rational s_at_x = s.aligned_to(ctx.base_vars()).evaluate(x);
    const Rational rhs = spec.tau_power(I, ctx.k * (ctx.k + 1)).evaluate(x) /
                         pow(s_at_x, static_cast<unsigned long>(ctx.k) + 1);
    return {lhs, rhs};
}

std::size_t ell_rank_over_basis(const FamilySpec& spec, const MultiIndex& I,
                                const std::vector<Polynomial>& frame_bt, const Polynomial& s,
                                const JetPoint& w, const std::vector<Polynomial>& basis) {
    const FrameData data = prepare_frame(spec, I, frame_bt, s, w);
    const std::size_t rows = frame_bt.size();
    Matrix<Rational> m(rows, basis.size());
    for (std::size_t col = 0; col < basis.size(); ++col)
        for (std::size_t p = 0; p < rows; ++p)
            m(p, col) = ell_value(spec, data, I, static_cast<int>(p), basis[col], w);
    return matrix_rank(std::move(m));
}

}  // namespace jetwronsk
