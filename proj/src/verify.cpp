#include "jetwronsk/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "jetwronsk/bounds.hpp"
#include "jetwronsk/errors.hpp"
#include "jetwronsk/generators.hpp"
#include "jetwronsk/grassmann.hpp"
#include "jetwronsk/wronskian.hpp"

namespace jetwronsk {

namespace {

// Accumulates one named check over many cases, keeping the first failure.
struct Tally {
    Check check;
    explicit Tally(std::string name) { check.name = std::move(name); check.pass = true; }
    void record(bool ok, const std::function<std::string()>& witness) {
        if (ok || !check.pass) return;
        check.pass = false;
        check.witness = witness();
    }
};

std::string describe_series(const TruncatedSeries& s) { return s.str(); }

std::string describe_curve(const CurveGerm& g) {
    std::string out = "(";
    for (std::size_t i = 0; i < g.components.size(); ++i) {
        if (i) out += "; ";
        out += describe_series(g.components[i]);
    }
    return out + ")";
}

std::string describe_point(const JetPoint& w) {
    std::string out = "{";
    for (std::size_t i = 0; i < w.values.size(); ++i) {
        if (i) out += ", ";
        out += w.context.universe()[i] + "=" + w.values[i].str();
    }
    return out + "}";
}

std::string describe_family(const FamilySpec& spec) {
    std::ostringstream out;
    out << "n=" << spec.context.n << " k=" << spec.context.k << " N=" << spec.N
        << " delta=" << spec.delta << " r=" << spec.r << " tau=[";
    for (std::size_t j = 0; j < spec.tau.size(); ++j) {
        if (j) out << ", ";
        out << spec.tau[j].str();
    }
    out << "] a={";
    bool first = true;
    for (const auto& [I, aI] : spec.a) {
        if (!first) out << ", ";
        first = false;
        out << multi_index_str(I) << ": " << aI.str();
    }
    out << "}";
    return out.str();
}

// ---------------------------------------------------------------- oracle

SuiteResult suite_oracle(std::uint64_t seed, int trials) {
    SuiteResult res{"oracle", seed, trials, {}};
    Rng rng(seed);
    for (int n = 1; n <= 3; ++n) {
        for (int k = 1; k <= 4; ++k) {
            const JetContext ctx(n, k);
            const std::vector<std::string> base = ctx.base_vars();
            Tally tally("oracle n=" + std::to_string(n) + " k=" + std::to_string(k));
            for (int t = 0; t < trials; ++t) {
                const Polynomial f = rng.polynomial(base, 3, 4);
                std::vector<TruncatedSeries> comps;
                for (int i = 0; i < n; ++i) comps.push_back(rng.curve_component(k));
                // Allow nonzero base points as well.
                for (auto& c : comps) c.set_coeff(0, rng.rational(2, 2));
                const CurveGerm gamma(ctx, comps);
                const int p = static_cast<int>(rng.range(0, k));

                const Rational lhs = evaluate(jet_derivative(lift_to_jets(ctx, f), p),
                                              jet_of_curve(gamma));
                const Rational rhs =
                    Rational(factorial(static_cast<unsigned long>(p))) *
                    compose_with_curve(f, gamma).coeff(p);
                tally.record(lhs == rhs, [&] {
                    return "f = " + f.str() + ", gamma = " + describe_curve(gamma) +
                           ", p = " + std::to_string(p) + ", lhs = " + lhs.str() +
                           ", rhs = " + rhs.str();
                });
            }
            res.checks.push_back(tally.check);
        }
    }
    return res;
}

// ---------------------------------------------------------------- leibniz

SuiteResult suite_leibniz(std::uint64_t seed, int trials) {
    SuiteResult res{"leibniz", seed, trials, {}};
    Rng rng(seed);
    for (int n = 1; n <= 2; ++n) {
        for (int k = 1; k <= 3; ++k) {
            const JetContext ctx(n, k);
            const std::vector<std::string> base = ctx.base_vars();
            Tally tally("leibniz n=" + std::to_string(n) + " k=" + std::to_string(k));
            for (int t = 0; t < trials; ++t) {
                const Polynomial f = rng.polynomial(base, 3, 3);
                const Polynomial g = rng.polynomial(base, 3, 3);
                const int p = static_cast<int>(rng.range(0, k));
                const bool ok = leibniz_check(lift_to_jets(ctx, f), lift_to_jets(ctx, g), p);
                tally.record(ok, [&] {
                    return "f = " + f.str() + ", g = " + g.str() + ", p = " + std::to_string(p);
                });
            }
            res.checks.push_back(tally.check);
        }
    }
    return res;
}

// ----------------------------------------------------------- faa-di-bruno

// Partition-sum Bell polynomial, the independent cross-check of the
// recurrence: B_{p,i} = sum p!/(prod j_m! (m!)^{j_m}) prod g_m^{j_m} over
// j_1 + j_2 + ... = i, 1 j_1 + 2 j_2 + ... = p.
Polynomial bell_by_partitions(int p, int i) {
    std::vector<std::string> vars;
    for (int j = 1; j <= p; ++j) vars.push_back("g" + std::to_string(j));
    Polynomial acc(vars);
    std::vector<int> counts(static_cast<std::size_t>(p), 0);
    std::function<void(int, int, int)> walk = [&](int m, int parts_left, int degree_left) {
        if (m > p || parts_left == 0) {
            if (parts_left == 0 && degree_left == 0) {
                Rational coeff(factorial(static_cast<unsigned long>(p)));
                Monomial mono(vars.size(), 0);
                for (int j = 1; j <= p; ++j) {
                    const int c = counts[static_cast<std::size_t>(j - 1)];
                    if (c == 0) continue;
                    mono[static_cast<std::size_t>(j - 1)] = c;
                    coeff /= Rational(factorial(static_cast<unsigned long>(c)));
                    coeff /= Rational(pow(factorial(static_cast<unsigned long>(j)),
                                          static_cast<unsigned long>(c)));
                }
                Polynomial term(vars);
                term.set_coeff(mono, coeff);
                acc += term;
            }
            return;
        }
        for (int c = 0; c <= parts_left && c * m <= degree_left; ++c) {
            counts[static_cast<std::size_t>(m - 1)] = c;
            walk(m + 1, parts_left - c, degree_left - c * m);
        }
        counts[static_cast<std::size_t>(m - 1)] = 0;
    };
    walk(1, i, p);
    return acc;
}

SuiteResult suite_faa_di_bruno(std::uint64_t seed, int trials) {
    SuiteResult res{"faa-di-bruno", seed, trials, {}};
    Rng rng(seed);

    Tally bell("bell recurrence vs partition sum, p <= 4");
    for (int p = 1; p <= 4; ++p)
        for (int i = 1; i <= p; ++i) {
            const bool ok = bell_polynomial(p, i) == bell_by_partitions(p, i);
            bell.record(ok, [&] { return "p = " + std::to_string(p) + ", i = " + std::to_string(i); });
        }
    res.checks.push_back(bell.check);

    for (int k = 2; k <= 4; ++k) {
        Tally identity("faa-di-bruno identity k=" + std::to_string(k));
        Tally action("reparametrization action oracle k=" + std::to_string(k));
        const JetContext ctx(2, k);
        for (int t = 0; t < trials; ++t) {
            const Reparam phi = rng.reparam(k);
            const int p = static_cast<int>(rng.range(1, k));

            // h as a univariate polynomial; only the first k derivatives at 0
            // can matter because phi(0) = 0.
            TruncatedSeries h(k);
            for (int m = 0; m <= k; ++m) h.set_coeff(m, rng.rational(4, 2));
            const TruncatedSeries composed = series_compose(h, phi.to_series());
            Rational lhs = Rational(factorial(static_cast<unsigned long>(p))) * composed.coeff(p);
            Rational rhs(0);
            const std::vector<Rational> coeffs = faa_di_bruno_coeffs(phi, p);
            Integer fact(1);
            for (int i = 1; i <= p; ++i) {
                fact *= i;
                rhs += coeffs[static_cast<std::size_t>(i - 1)] * Rational(fact) * h.coeff(i);
            }
            identity.record(lhs == rhs, [&] {
                return "phi = " + phi.str() + ", h = " + h.str() + ", p = " + std::to_string(p);
            });

            std::vector<TruncatedSeries> comps;
            for (int i = 0; i < ctx.n; ++i) {
                TruncatedSeries c = rng.curve_component(k);
                c.set_coeff(0, rng.rational(2, 2));
                comps.push_back(c);
            }
            const CurveGerm gamma(ctx, comps);
            std::vector<TruncatedSeries> reparametrized;
            for (const auto& c : gamma.components)
                reparametrized.push_back(series_compose(c, phi.to_series()));
            const JetPoint via_act = act(phi, jet_of_curve(gamma));
            const JetPoint via_curve = jet_of_curve(CurveGerm(ctx, reparametrized));
            action.record(via_act == via_curve, [&] {
                return "phi = " + phi.str() + ", gamma = " + describe_curve(gamma);
            });
        }
        res.checks.push_back(identity.check);
        res.checks.push_back(action.check);
    }
    return res;
}

// -------------------------------------------------------------- invariance

SuiteResult suite_invariance(std::uint64_t seed, int trials) {
    SuiteResult res{"invariance", seed, trials, {}};
    Rng rng(seed);
    for (int k = 1; k <= 3; ++k) {
        const JetContext ctx(2, k);
        const std::vector<std::string> base = ctx.base_vars();
        Tally tally("wronskian invariance k=" + std::to_string(k));
        for (int t = 0; t < trials; ++t) {
            std::vector<Polynomial> fs;
            for (int j = 0; j <= k; ++j) fs.push_back(rng.polynomial(base, 2, 3));
            const WronskianSpec spec(ctx, fs);
            const Reparam phi = rng.reparam(k);
            const JetPoint w = rng.jet_point(ctx);
            tally.record(invariance_check(spec, phi, w), [&] {
                std::string s = "f = [";
                for (std::size_t j = 0; j < fs.size(); ++j)
                    s += (j ? ", " : "") + fs[j].str();
                return s + "], phi = " + phi.str() + ", w = " + describe_point(w);
            });
        }
        res.checks.push_back(tally.check);

        // The weight is pinned down uniquely: with phi = 2t at the
        // nondegeneracy witness, only e = k(k+1)/2 satisfies the law.
        Tally weight("weight exponent unique k=" + std::to_string(k));
        const NondegeneracyWitness witness = nondegeneracy_witness(ctx);
        std::vector<Rational> two_t(static_cast<std::size_t>(k), Rational(0));
        two_t[0] = Rational(2);
        const Reparam doubling(k, two_t);
        const JetPolynomial W = wronskian(witness.spec);
        const Rational lhs = evaluate(W, act(doubling, witness.point));
        const Rational base_val = evaluate(W, witness.point);
        std::vector<int> matches;
        for (int e = 0; e <= 10; ++e)
            if (lhs == pow(Rational(2), static_cast<unsigned long>(e)) * base_val)
                matches.push_back(e);
        const bool ok = matches.size() == 1 && matches.front() == k * (k + 1) / 2;
        weight.record(ok, [&] {
            std::string s = "matching exponents = {";
            for (std::size_t i = 0; i < matches.size(); ++i)
                s += (i ? "," : "") + std::to_string(matches[i]);
            return s + "}";
        });
        res.checks.push_back(weight.check);
    }
    return res;
}

// ----------------------------------------------- multiplicativity / cocycle

SuiteResult suite_scaling(const std::string& label, std::uint64_t seed, int trials) {
    SuiteResult res{label, seed, trials, {}};
    Rng rng(seed);
    for (int k = 1; k <= 3; ++k) {
        const JetContext ctx(2, k);
        const std::vector<std::string> base = ctx.base_vars();
        const int degree = k >= 3 ? 1 : 2;
        Tally tally(label + " k=" + std::to_string(k));
        for (int t = 0; t < trials; ++t) {
            const Polynomial s = rng.nonzero_polynomial(base, degree, 2);
            std::vector<Polynomial> fs;
            for (int j = 0; j <= k; ++j) fs.push_back(rng.polynomial(base, degree, 2));
            const WronskianSpec spec(ctx, fs);
            const bool ok = label == "cocycle" ? cocycle_check(s, spec)
                                               : multiplicativity_check(s, spec);
            tally.record(ok, [&] {
                std::string w = "s = " + s.str() + ", f = [";
                for (std::size_t j = 0; j < fs.size(); ++j) w += (j ? ", " : "") + fs[j].str();
                return w + "]";
            });
        }
        res.checks.push_back(tally.check);
    }
    return res;
}

// ------------------------------------------------------------ factorization

SuiteResult suite_factorization(std::uint64_t seed, int trials) {
    SuiteResult res{"factorization", seed, trials, {}};
    Rng rng(seed);

    Tally divisibility("tau^(rI) divides d^[p](a_I tau^((r+k)I))");
    for (int t = 0; t < trials; ++t) {
        const int n = static_cast<int>(rng.range(2, 3));
        const int k = static_cast<int>(rng.range(1, 3));
        const int delta = static_cast<int>(rng.range(1, 3));
        const int r = static_cast<int>(rng.range(1, 3));
        const int N = static_cast<int>(rng.range(1, 2));
        const FamilySpec spec = random_family(rng, n, k, N, delta, r);
        for (const auto& [I, aI] : spec.a) {
            for (int p = 0; p <= k; ++p) {
                bool ok = true;
                std::string reason;
                try {
                    (void)reduced_jet_derivative(spec, I, p);
                } catch (const DivisionFails& e) {
                    ok = false;
                    reason = e.what();
                }
                divisibility.record(ok, [&] {
                    return describe_family(spec) + ", I = " + multi_index_str(I) +
                           ", p = " + std::to_string(p) + ": " + reason;
                });
            }
        }
    }
    res.checks.push_back(divisibility.check);

    Tally gluing("W(a tau^((r+k)I_0..k)) = tau^(r sum I_j) W_(I_0..I_k)(a)");
    const int gluing_trials = std::max(1, trials / 4);
    for (int t = 0; t < gluing_trials; ++t) {
        const int k = static_cast<int>(rng.range(1, 2));
        const int delta = static_cast<int>(rng.range(1, 2));
        const int r = static_cast<int>(rng.range(1, 2));
        const FamilySpec spec = random_family(rng, 2, k, 1, delta, r);
        const std::vector<MultiIndex> all = enumerate_multi_indices(spec.N, spec.delta);
        std::vector<MultiIndex> tuple;
        std::vector<Polynomial> twisted;
        MultiIndex total(static_cast<std::size_t>(spec.N) + 1, 0);
        for (int j = 0; j <= k; ++j) {
            const MultiIndex& I =
                all[static_cast<std::size_t>(rng.range(0, static_cast<long>(all.size()) - 1))];
            tuple.push_back(I);
            twisted.push_back(spec.coeff_a(I) * spec.tau_power(I, spec.r + k));
            for (std::size_t m = 0; m < total.size(); ++m) total[m] += I[m];
        }
        const JetPolynomial lhs = wronskian(WronskianSpec(spec.context, twisted));
        const JetPolynomial reduced = reduced_wronskian(spec, tuple);
        const Polynomial twist =
            spec.tau_power(total, spec.r).aligned_to(spec.context.universe());
        const bool ok = lhs.poly == twist * reduced.poly;
        gluing.record(ok, [&] {
            std::string s = describe_family(spec) + ", I tuple = [";
            for (std::size_t j = 0; j < tuple.size(); ++j)
                s += (j ? ", " : "") + multi_index_str(tuple[j]);
            return s + "]";
        });
    }
    res.checks.push_back(gluing.check);
    return res;
}

// ---------------------------------------------------------------- incidence

SuiteResult suite_incidence(std::uint64_t seed, int trials) {
    SuiteResult res{"incidence", seed, trials, {}};
    Rng rng(seed);
    Tally member("germs inside H_a pass the incidence test");
    Tally compose_zero("F o gamma = 0 mod t^(k+1) (series oracle)");
    Tally perturbed("perturbed germs fail the incidence test");
    for (int t = 0; t < trials; ++t) {
        const int n = static_cast<int>(rng.range(2, 3));
        const int k = static_cast<int>(rng.range(1, 2));
        const int delta = static_cast<int>(rng.range(1, 2));
        const int r = static_cast<int>(rng.range(1, 2));
        const FamilyWithPoint fam = random_family_with_point(rng, n, k, n, delta, r);
        const JetContext& ctx = fam.spec.context;
        const CurveGerm germ = germ_in_hypersurface(ctx, fam.F, fam.x, {}, k);

        compose_zero.record(compose_with_curve(fam.F, germ).is_zero(), [&] {
            return describe_family(fam.spec) + ", gamma = " + describe_curve(germ);
        });
        member.record(incidence_check(fam.spec, germ), [&] {
            return describe_family(fam.spec) + ", gamma = " + describe_curve(germ);
        });

        // Knock the top coefficient of the solved component off the surface.
        const int pivot = distinguished_variable(fam.F.aligned_to(ctx.base_vars()), fam.x);
        CurveGerm broken = germ;
        auto& comp = broken.components[static_cast<std::size_t>(pivot)];
        comp.set_coeff(k, comp.coeff(k) + rng.nonzero_rational(3, 2));
        perturbed.record(!incidence_check(fam.spec, broken), [&] {
            return describe_family(fam.spec) + ", gamma~ = " + describe_curve(broken);
        });
    }
    res.checks.push_back(member.check);
    res.checks.push_back(compose_zero.check);
    res.checks.push_back(perturbed.check);
    return res;
}

// --------------------------------------------------------- frame-determinant

struct FrameConfig {
    FamilySpec spec;
    std::vector<Rational> x;
    JetPoint w;
    std::vector<Polynomial> frame;
    Polynomial s;
};

FrameConfig random_frame_config(Rng& rng, int n, int k, int N, int delta) {
    for (int attempt = 0; attempt < 500; ++attempt) {
        FamilySpec spec = random_family(rng, n, k, N, delta, 1);
        const JetContext& ctx = spec.context;
        const std::vector<std::string> base = ctx.base_vars();

        std::vector<Rational> x;
        for (int i = 0; i < n; ++i) x.push_back(rng.rational(2, 2));
        bool tau_alive = true;
        for (const auto& tau : spec.tau)
            if (tau.evaluate(x).is_zero()) tau_alive = false;
        if (!tau_alive) continue;  // want I_x = I at this point

        Polynomial s = rng.nonzero_polynomial(base, 1, 2);
        if (s.evaluate(x).is_zero()) continue;

        std::vector<Polynomial> frame;
        for (int j = 0; j <= k; ++j) frame.push_back(rng.polynomial(base, 2, 3));

        JetPoint w = rng.jet_point(ctx);
        for (int i = 1; i <= n; ++i) w.value(i, 0) = x[static_cast<std::size_t>(i - 1)];

        std::vector<Polynomial> b;
        for (const auto& bt : frame) b.push_back(s * bt);
        if (wronskian_value(ctx, b, w).is_zero()) continue;
        return {std::move(spec), std::move(x), std::move(w), std::move(frame), std::move(s)};
    }
    throw std::runtime_error("no admissible frame configuration after 500 attempts");
}

SuiteResult suite_frame_determinant(std::uint64_t seed, int trials) {
    SuiteResult res{"frame-determinant", seed, trials, {}};
    Rng rng(seed);
    Tally identity("det(l^p_I(bt_j)) = tau^(k(k+1)I)/s^(k+1)");
    for (int t = 0; t < trials; ++t) {
        const int k = static_cast<int>(rng.range(1, 2));
        const int delta = static_cast<int>(rng.range(1, 2));
        const FrameConfig cfg = random_frame_config(rng, 2, k, 1, delta);
        const std::vector<MultiIndex> all = enumerate_multi_indices(cfg.spec.N, cfg.spec.delta);
        const MultiIndex& I =
            all[static_cast<std::size_t>(rng.range(0, static_cast<long>(all.size()) - 1))];
        const auto [lhs, rhs] = local_frame_determinant(cfg.spec, I, cfg.frame, cfg.s, cfg.w);
        identity.record(lhs == rhs, [&] {
            return describe_family(cfg.spec) + ", I = " + multi_index_str(I) +
                   ", s = " + cfg.s.str() + ", w = " + describe_point(cfg.w) +
                   ", lhs = " + lhs.str() + ", rhs = " + rhs.str();
        });
    }
    res.checks.push_back(identity.check);

    Tally rank_check("rank of a_I -> (l^0_I..l^k_I)(w) is k+1 for every I in I_x");
    const int rank_trials = std::max(1, (trials * 2) / 5);
    for (int t = 0; t < rank_trials; ++t) {
        const int k = static_cast<int>(rng.range(1, 2));
        const int delta = static_cast<int>(rng.range(1, 2));
        const FrameConfig cfg = random_frame_config(rng, 2, k, 1, delta);
        const std::vector<std::string> base = cfg.spec.context.base_vars();
        // Monomial basis of degree <= 2; the frame sections lie in its span.
        std::vector<Polynomial> basis;
        for (int d = 0; d <= 2; ++d)
            for (const auto& expo : enumerate_multi_indices(static_cast<int>(base.size()) - 1, d)) {
                Polynomial m(base);
                m.set_coeff(expo, Rational(1));
                basis.push_back(m);
            }
        const StratumData stratum = stratum_data(cfg.spec, cfg.x);
        for (const auto& I : stratum.I_x) {
            const std::size_t rank =
                ell_rank_over_basis(cfg.spec, I, cfg.frame, cfg.s, cfg.w, basis);
            rank_check.record(rank == static_cast<std::size_t>(k) + 1, [&] {
                return describe_family(cfg.spec) + ", I = " + multi_index_str(I) +
                       ", rank = " + std::to_string(rank);
            });
        }
    }
    res.checks.push_back(rank_check.check);
    return res;
}

// ------------------------------------------------------------------ plucker

SuiteResult suite_plucker(std::uint64_t seed, int trials) {
    SuiteResult res{"plucker", seed, trials, {}};
    Rng rng(seed);
    Tally relations("plucker quadratic relations");
    Tally degeneracy("degenerate output iff rank < k+1");
    for (int t = 0; t < trials; ++t) {
        const std::size_t rows = static_cast<std::size_t>(rng.range(2, 3));
        const std::size_t cols = static_cast<std::size_t>(rng.range(static_cast<long>(rows), 6));
        Matrix<Rational> m(rows, cols);
        if (t % 4 == 3) {
            // Deliberately rank-deficient: product of thin factors.
            Matrix<Rational> a(rows, rows - 1), b(rows - 1, cols);
            for (std::size_t i = 0; i < rows; ++i)
                for (std::size_t j = 0; j + 1 < rows; ++j) a(i, j) = rng.rational(3, 2);
            for (std::size_t i = 0; i + 1 < rows; ++i)
                for (std::size_t j = 0; j < cols; ++j) b(i, j) = rng.rational(3, 2);
            for (std::size_t i = 0; i < rows; ++i)
                for (std::size_t j = 0; j < cols; ++j) {
                    Rational acc(0);
                    for (std::size_t l = 0; l + 1 < rows; ++l) acc += a(i, l) * b(l, j);
                    m(i, j) = acc;
                }
        } else {
            for (std::size_t i = 0; i < rows; ++i)
                for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.rational(4, 2);
        }
        const auto v = plucker_of(m);
        const bool deficient = matrix_rank(m) < rows;
        degeneracy.record(v.has_value() == !deficient, [&] {
            return "rows = " + std::to_string(rows) + ", cols = " + std::to_string(cols) +
                   ", rank deficient = " + (deficient ? "yes" : "no");
        });
        if (v) {
            relations.record(plucker_relations_hold(*v, rows), [&] {
                return "rows = " + std::to_string(rows) + ", cols = " + std::to_string(cols);
            });
        }
    }
    res.checks.push_back(relations.check);
    res.checks.push_back(degeneracy.check);
    return res;
}

// ------------------------------------------------------------------- bounds

SuiteResult suite_bounds(std::uint64_t seed, int trials) {
    SuiteResult res{"bounds", seed, trials, {}};
    Rng rng(seed);

    Tally deng("deng bound: values and cap for 2 <= n <= 50");
    {
        const auto [d0, cap] = deng_bound(2);
        deng.record(d0 == Integer(12338) && cap == Integer(59049),
                    [&] { return "n=2 gave (" + d0.get_str() + ", " + cap.get_str() + ")"; });
        for (long n = 2; n <= 50; ++n) {
            bool ok = true;
            std::string what;
            try {
                (void)deng_bound(n);  // throws if d0 > cap
            } catch (const std::exception& e) {
                ok = false;
                what = e.what();
            }
            deng.record(ok, [&] { return "n = " + std::to_string(n) + ": " + what; });
        }
    }
    res.checks.push_back(deng.check);

    Tally decompose("degree decomposition on [d_0, d_0 + 10 v delta]");
    Tally unique_eps("epsilon unique in its window");
    for (int set = 0; set < 5; ++set) {
        ParamSet p;
        p.n = 2;
        p.N = 2;
        p.k = rng.range(1, 3);
        p.delta = rng.range(1, 6);
        p.v = rng.range(1, 3);
        p.m_inf = rng.range(0, 5);
        p.R = rng.range(0, 6);
        p.u = rng.range(1, 12);
        Integer vd = Integer(p.v) * Integer(p.delta);
        Integer g;
        mpz_gcd(g.get_mpz_t(), Integer(p.u).get_mpz_t(), vd.get_mpz_t());
        while (g != 1) {
            p.u = rng.range(1, 12);
            mpz_gcd(g.get_mpz_t(), Integer(p.u).get_mpz_t(), vd.get_mpz_t());
        }
        const Integer d0 = degree_threshold(p);
        const Integer dmax = d0 + 10 * vd;
        for (Integer d = d0; d <= dmax; d += 1) {
            bool ok = true;
            std::string what;
            try {
                const DegreeDecomposition dec = decompose_degree(p, d);
                Integer recomposed = Integer(p.u) * dec.epsilon +
                                     (dec.r + Integer(p.k)) * vd;
                ok = recomposed == d && dec.epsilon >= Integer(p.m_inf) &&
                     dec.epsilon < Integer(p.m_inf) + vd && dec.r >= Integer(p.R);
                if (!ok) what = "invariants violated";
            } catch (const std::exception& e) {
                ok = false;
                what = e.what();
            }
            decompose.record(ok, [&] {
                return "u=" + std::to_string(p.u) + " v=" + std::to_string(p.v) +
                       " delta=" + std::to_string(p.delta) + " m_inf=" + std::to_string(p.m_inf) +
                       " R=" + std::to_string(p.R) + " k=" + std::to_string(p.k) +
                       " d=" + d.get_str() + ": " + what;
            });

            // Direct modular scan of the window.
            int hits = 0;
            const Integer emax = Integer(p.m_inf) + vd;
            for (Integer e = Integer(p.m_inf); e < emax; e += 1) {
                Integer lhs = Integer(p.u) * e - d;
                Integer rem;
                mpz_mod(rem.get_mpz_t(), lhs.get_mpz_t(), vd.get_mpz_t());
                if (rem == 0) ++hits;
            }
            unique_eps.record(hits == 1,
                              [&] { return "d = " + d.get_str() + ", hits = " + std::to_string(hits); });
        }
    }
    res.checks.push_back(decompose.check);
    res.checks.push_back(unique_eps.check);

    Tally equivalence("delta >= n(k+1) iff dimension margin < 0 (n,k,delta <= 30)");
    for (long n = 2; n <= 30; ++n)
        for (long k = 0; k <= 30; ++k)
            for (long delta = 0; delta <= 30; ++delta) {
                ParamSet p;
                p.n = n;
                p.N = n;
                p.k = k;
                p.delta = delta;
                const DeltaReport rep = delta_conditions(p);
                equivalence.record(rep.basic == (rep.margin < 0), [&] {
                    return "n=" + std::to_string(n) + " k=" + std::to_string(k) +
                           " delta=" + std::to_string(delta);
                });
            }
    res.checks.push_back(equivalence.check);

    Tally kp("k' matches the observed invariance weight, k <= 3");
    for (int k = 1; k <= 3; ++k) {
        const JetContext ctx(2, k);
        const NondegeneracyWitness witness = nondegeneracy_witness(ctx);
        std::vector<Rational> two_t(static_cast<std::size_t>(k), Rational(0));
        two_t[0] = Rational(2);
        const JetPolynomial W = wronskian(witness.spec);
        const Rational lhs = evaluate(W, act(Reparam(k, two_t), witness.point));
        const Rational base_val = evaluate(W, witness.point);
        int found = -1;
        for (int e = 0; e <= 10; ++e)
            if (lhs == pow(Rational(2), static_cast<unsigned long>(e)) * base_val) {
                found = e;
                break;
            }
        kp.record(found == kprime(k), [&] {
            return "k = " + std::to_string(k) + ", observed = " + std::to_string(found) +
                   ", kprime = " + std::to_string(kprime(k));
        });
    }
    res.checks.push_back(kp.check);

    Tally sum("k' equals 1 + 2 + ... + k for k <= 100");
    for (long k = 0; k <= 100; ++k) {
        long s = 0;
        for (long i = 1; i <= k; ++i) s += i;
        sum.record(kprime(k) == s, [&] { return "k = " + std::to_string(k); });
    }
    res.checks.push_back(sum.check);
    return res;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "oracle",        "leibniz",   "faa-di-bruno", "invariance",
        "multiplicativity", "cocycle", "factorization", "incidence",
        "frame-determinant", "plucker", "bounds"};
    return names;
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed, int trials) {
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    if (name == "oracle") return suite_oracle(seed, trials);
    if (name == "leibniz") return suite_leibniz(seed, trials);
    if (name == "faa-di-bruno") return suite_faa_di_bruno(seed, trials);
    if (name == "invariance") return suite_invariance(seed, trials);
    if (name == "multiplicativity") return suite_scaling("multiplicativity", seed, trials);
    if (name == "cocycle") return suite_scaling("cocycle", seed, trials);
    if (name == "factorization") return suite_factorization(seed, trials);
    if (name == "incidence") return suite_incidence(seed, trials);
    if (name == "frame-determinant") return suite_frame_determinant(seed, trials);
    if (name == "plucker") return suite_plucker(seed, trials);
    if (name == "bounds") return suite_bounds(seed, trials);
    throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace jetwronsk
