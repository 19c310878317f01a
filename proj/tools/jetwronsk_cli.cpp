// Batch front end: every subcommand prints a machine-readable JSON report on
// stdout (schema "jetwronsk/1") and a short human summary on stderr.
// Exit codes: 0 pass, 1 verification failure, 2 usage/parse error.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "jetwronsk/bounds.hpp"
#include "jetwronsk/errors.hpp"
#include "jetwronsk/family.hpp"
#include "jetwronsk/grassmann.hpp"
#include "jetwronsk/jet.hpp"
#include "jetwronsk/json_io.hpp"
#include "jetwronsk/parser.hpp"
#include "jetwronsk/verify.hpp"
#include "jetwronsk/wronskian.hpp"

namespace {

using jetwronsk::json;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct Report {
    std::string command;
    json inputs = json::object();
    json results = json::object();
    json checks = json::object();
    std::uint64_t seed = 0;

    void add_check(const std::string& name, bool pass, const std::string& witness = "") {
        json entry;
        entry["pass"] = pass;
        if (!pass && !witness.empty()) entry["witness"] = witness;
        checks[name] = entry;
    }

    bool all_pass() const {
        for (const auto& [name, entry] : checks.items()) {
            (void)name;
            if (!entry.at("pass").get<bool>()) return false;
        }
        return true;
    }
};

int emit(const Report& report, std::chrono::steady_clock::time_point start) {
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
    json out;
    out["schema"] = "jetwronsk/1";
    out["command"] = report.command;
    out["inputs"] = report.inputs;
    out["results"] = report.results;
    out["checks"] = report.checks;
    out["seed"] = report.seed;
    out["timing_ms"] = ms;
    std::cout << out.dump(2) << "\n";

    std::cerr << report.command << ":";
    if (report.checks.empty()) {
        std::cerr << " done\n";
    } else {
        std::cerr << "\n";
        for (const auto& [name, entry] : report.checks.items())
            std::cerr << "  " << (entry.at("pass").get<bool>() ? "PASS" : "FAIL") << "  " << name
                      << "\n";
    }
    return report.all_pass() ? kExitPass : kExitCheckFailed;
}

std::vector<jetwronsk::Rational> parse_point(const std::string& text, int n) {
    std::vector<jetwronsk::Rational> out;
    std::istringstream in(text);
    std::string part;
    while (std::getline(in, part, ',')) out.push_back(jetwronsk::Rational::parse(part));
    if (out.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("expected " + std::to_string(n) +
                                    " comma-separated rationals, got '" + text + "'");
    return out;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file '" + path + "'");
    json j;
    in >> j;
    return j;
}

// ------------------------------------------------------------------- diff

int cmd_diff(const std::string& expr, int p, int n, int k,
             std::chrono::steady_clock::time_point start) {
    using namespace jetwronsk;
    const JetContext ctx(n, k);
    const Polynomial f = parse_polynomial(expr, ctx.universe());
    const JetPolynomial d = jet_derivative(JetPolynomial(ctx, f), p);
    Report report;
    report.command = "diff";
    report.inputs = {{"expr", expr}, {"p", p}, {"n", n}, {"k", k}};
    report.results = {{"derivative", d.str()}};
    return emit(report, start);
}

// -------------------------------------------------------------- wronskian

int cmd_wronskian(const std::vector<std::string>& exprs, int n, int k,
                  std::chrono::steady_clock::time_point start) {
    using namespace jetwronsk;
    const JetContext ctx(n, k);
    if (exprs.size() != static_cast<std::size_t>(k) + 1)
        throw std::invalid_argument("wronskian needs exactly k+1 = " + std::to_string(k + 1) +
                                    " input polynomials, got " + std::to_string(exprs.size()));
    std::vector<Polynomial> inputs;
    for (const auto& e : exprs) inputs.push_back(parse_polynomial(e, ctx.base_vars()));
    const WronskianSpec spec(ctx, inputs);
    const JetPolynomial w = wronskian(spec);
    Report report;
    report.command = "wronskian";
    report.inputs = {{"f", exprs}, {"n", n}, {"k", k}};
    report.results = {{"wronskian", w.str()}, {"weight", spec.weight()}};
    return emit(report, start);
}

// ------------------------------------------------------- reduced-wronskian

int cmd_reduced_wronskian(const std::string& input_path, const std::vector<std::string>& indices,
                          std::chrono::steady_clock::time_point start) {
    using namespace jetwronsk;
    const FamilySpec spec = family_from_json(load_json_file(input_path));
    if (indices.size() != static_cast<std::size_t>(spec.context.k) + 1)
        throw std::invalid_argument("reduced-wronskian needs exactly k+1 multi-indices");
    std::vector<MultiIndex> tuple;
    for (const auto& s : indices) tuple.push_back(parse_multi_index(s, spec.N + 1));
    const JetPolynomial w = reduced_wronskian(spec, tuple);
    Report report;
    report.command = "reduced-wronskian";
    report.inputs = {{"input", family_to_json(spec)}, {"I", indices}};
    report.results = {{"reduced_wronskian", w.str()}};
    return emit(report, start);
}

// ------------------------------------------------------------------- germ

int cmd_germ(const std::string& input_path, const std::string& f_expr, int n,
             const std::string& x_text, int order,
             std::chrono::steady_clock::time_point start) {
    using namespace jetwronsk;
    Report report;
    report.command = "germ";
    Polynomial F;
    JetContext ctx(1, 0);
    if (!input_path.empty()) {
        const FamilySpec spec = family_from_json(load_json_file(input_path));
        ctx = spec.context;
        F = assemble_F(spec);
        report.inputs["input"] = family_to_json(spec);
    } else {
        if (f_expr.empty() || n <= 0)
            throw std::invalid_argument("germ needs either --input or both --F and --n");
        ctx = JetContext(n, std::max(order, 1));
        F = parse_polynomial(f_expr, ctx.base_vars());
        report.inputs["F"] = f_expr;
        report.inputs["n"] = n;
    }
    const std::vector<Rational> x = parse_point(x_text, ctx.n);
    const int germ_order = std::max(order, ctx.k);
    const CurveGerm germ = germ_in_hypersurface(ctx, F, x, {}, germ_order);
    report.inputs["x"] = x_text;
    report.inputs["order"] = germ_order;
    report.results["germ"] = curve_to_json(germ);
    report.add_check("F o gamma = 0 mod t^(order+1)", compose_with_curve(F, germ).is_zero());
    return emit(report, start);
}

// ----------------------------------------------------------------- plucker

int cmd_plucker(const std::string& matrix_text, const std::string& input_path,
                std::chrono::steady_clock::time_point start) {
    using namespace jetwronsk;
    json jmat;
    if (!input_path.empty())
        jmat = load_json_file(input_path).at("matrix");
    else if (!matrix_text.empty())
        jmat = json::parse(matrix_text);
    else
        throw std::invalid_argument("plucker needs --matrix or --input");
    if (!jmat.is_array() || jmat.empty())
        throw std::invalid_argument("matrix must be a nonempty array of rows");
    const std::size_t rows = jmat.size();
    const std::size_t cols = jmat.at(0).size();
    Matrix<Rational> m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (jmat.at(i).size() != cols)
            throw std::invalid_argument("matrix rows must have equal length");
        for (std::size_t j = 0; j < cols; ++j) {
            const json& cell = jmat.at(i).at(j);
            m(i, j) = cell.is_string() ? Rational::parse(cell.get<std::string>())
                                       : Rational(cell.get<long>());
        }
    }
    Report report;
    report.command = "plucker";
    report.inputs = {{"matrix", jmat}};
    const auto v = plucker_of(m);
    if (!v) {
        report.results["degenerate"] = true;
    } else {
        report.results["degenerate"] = false;
        report.results["plucker"] = plucker_to_json(*v);
        report.add_check("plucker quadratic relations", plucker_relations_hold(*v, rows));
    }
    return emit(report, start);
}

// --------------------------------------------------------------- incidence

int cmd_incidence(const std::string& input_path, const std::string& x_text,
                  const std::string& germ_text, int order,
                  std::chrono::steady_clock::time_point start) {
    using namespace jetwronsk;
    const FamilySpec spec = family_from_json(load_json_file(input_path));
    const JetContext& ctx = spec.context;
    const Polynomial F = assemble_F(spec);
    Report report;
    report.command = "incidence";
    report.inputs["input"] = family_to_json(spec);

    CurveGerm germ;
    if (!germ_text.empty()) {
        // User-supplied germ: semicolon-separated components, each a comma
        // list of coefficients c_0..c_K.
        std::vector<TruncatedSeries> comps;
        std::istringstream in(germ_text);
        std::string part;
        while (std::getline(in, part, ';')) {
            std::vector<Rational> coeffs;
            std::istringstream cin(part);
            std::string cell;
            while (std::getline(cin, cell, ',')) coeffs.push_back(Rational::parse(cell));
            comps.push_back(TruncatedSeries::from_coeffs(coeffs));
        }
        germ = CurveGerm(ctx, comps);
        report.inputs["germ"] = germ_text;
    } else {
        if (x_text.empty()) throw std::invalid_argument("incidence needs --x or --germ");
        const std::vector<Rational> x = parse_point(x_text, ctx.n);
        const int germ_order = std::max(order, ctx.k);
        germ = germ_in_hypersurface(ctx, F, x, {}, germ_order);
        report.inputs["x"] = x_text;
        report.inputs["order"] = germ_order;
    }
    report.results["germ"] = curve_to_json(germ);

    const std::vector<Rational> values = incidence_values(spec, germ);
    json vals = json::array();
    for (const auto& v : values) vals.push_back(v.str());
    report.results["d_p_F_values"] = vals;
    std::string witness;
    bool ok = true;
    for (std::size_t p = 0; p < values.size(); ++p)
        if (!values[p].is_zero()) {
            ok = false;
            witness = "d^[" + std::to_string(p) + "]F(a) = " + values[p].str() + " at the jet";
            break;
        }
    report.add_check("incidence: all d^[p]F(a) vanish on the jet", ok, witness);
    return emit(report, start);
}

// ------------------------------------------------------------------ bounds

int cmd_bounds(const CLI::App* sub, long n, long N, long k, long delta, long epsilon, long u,
               long v, long m_inf, long M, long R, long d_value, bool deng,
               std::chrono::steady_clock::time_point start) {
    using namespace jetwronsk;
    Report report;
    report.command = "bounds";
    auto given = [&](const std::string& flag) { return sub->count(flag) > 0; };

    bool produced = false;
    if (deng) {
        if (!given("--n")) throw std::invalid_argument("--deng needs --n");
        const auto [d0, cap] = deng_bound(n);
        report.inputs["n"] = n;
        report.results["deng"] = {{"d0", d0.get_str()}, {"cap", cap.get_str()}};
        report.add_check("deng d0 <= (n+1)^(2n+6)", d0 <= cap);
        produced = true;
    }

    if (given("--n") && given("--N") && given("--k") && given("--delta")) {
        ParamSet p;
        p.n = n;
        p.N = N;
        p.k = k;
        p.delta = delta;
        const DeltaReport rep = delta_conditions(p);
        report.inputs["n"] = n;
        report.inputs["N"] = N;
        report.inputs["k"] = k;
        report.inputs["delta"] = delta;
        report.results["delta_conditions"] = {{"basic", rep.basic},
                                              {"optimal1", rep.optimal1},
                                              {"optimal2", rep.optimal2},
                                              {"margin", rep.margin}};
        report.results["jet_dim"] = jet_dim(p.n, p.k);
        report.results["kprime"] = kprime(p.k);
        const auto [total, at_x] = index_counts(p.N, p.delta, p.N + 1);
        report.results["index_count"] = total.get_str();
        (void)at_x;
        produced = true;
    }

    if (given("--v") && given("--u") && given("--M") && given("--k") && given("--epsilon") &&
        given("--delta")) {
        report.inputs["u"] = u;
        report.inputs["v"] = v;
        report.inputs["M"] = M;
        report.inputs["epsilon"] = epsilon;
        report.results["r_threshold"] = r_threshold(v, u, M, k, epsilon, delta).get_str();
        produced = true;
    }

    if (given("--d")) {
        if (!(given("--u") && given("--v") && given("--delta") && given("--m-inf") &&
              given("--R") && given("--k")))
            throw std::invalid_argument("--d needs --u --v --delta --m-inf --R --k");
        ParamSet p;
        p.n = given("--n") ? n : 2;
        p.N = given("--N") ? N : p.n;
        p.k = k;
        p.delta = delta;
        p.u = u;
        p.v = v;
        p.m_inf = m_inf;
        p.R = R;
        report.inputs["d"] = d_value;
        report.inputs["m_inf"] = m_inf;
        report.inputs["R"] = R;
        const Integer d0 = degree_threshold(p);
        report.results["d0"] = d0.get_str();
        const DegreeDecomposition dec = decompose_degree(p, Integer(d_value));
        report.results["decomposition"] = {{"epsilon", dec.epsilon.get_str()},
                                           {"r", dec.r.get_str()}};
        const Integer vd = Integer(p.v) * Integer(p.delta);
        const bool valid = Integer(p.u) * dec.epsilon + (dec.r + Integer(p.k)) * vd ==
                           Integer(d_value);
        report.add_check("d = u e + (r+k) v delta", valid);
        produced = true;
    }

    if (!produced)
        throw std::invalid_argument(
            "bounds needs at least --deng --n, or --n --N --k --delta, or the r/decomposition "
            "flag groups");
    return emit(report, start);
}

// ------------------------------------------------------------------ verify

int cmd_verify(const std::string& suite, std::uint64_t seed, int trials,
               std::chrono::steady_clock::time_point start) {
    using namespace jetwronsk;
    SuiteResult res;
    try {
        res = run_suite(suite, seed, trials);
    } catch (const std::invalid_argument& e) {
        throw;  // unknown suite or bad trial count: usage error
    }
    Report report;
    report.command = "verify";
    report.seed = seed;
    report.inputs = {{"suite", suite}, {"trials", trials}};
    report.results = suite_result_to_json(res);
    for (const auto& c : res.checks) report.add_check(c.name, c.pass, c.witness);
    return emit(report, start);
}

}  // namespace

int main(int argc, char** argv) {
    const auto start = std::chrono::steady_clock::now();
    CLI::App app{"jetwronsk: exact jet-differential and Wronskian calculator"};
    app.require_subcommand(1);

    // diff
    std::string diff_expr;
    int diff_p = 0, diff_n = 1, diff_k = 0;
    CLI::App* diff = app.add_subcommand("diff", "total jet derivative d^[p] of a polynomial");
    diff->add_option("--expr", diff_expr, "polynomial in the jet variables")->required();
    diff->add_option("--p", diff_p, "derivative order")->required();
    diff->add_option("--n", diff_n, "number of base variables")->required();
    diff->add_option("--k", diff_k, "jet order")->required();

    // wronskian
    std::vector<std::string> wr_exprs;
    int wr_n = 1, wr_k = 1;
    CLI::App* wr = app.add_subcommand("wronskian", "Wronskian of k+1 base polynomials");
    wr->add_option("--f", wr_exprs, "input polynomial (repeat k+1 times)")->required();
    wr->add_option("--n", wr_n, "number of base variables")->required();
    wr->add_option("--k", wr_k, "jet order")->required();

    // reduced-wronskian
    std::string rw_input;
    std::vector<std::string> rw_indices;
    CLI::App* rw = app.add_subcommand("reduced-wronskian",
                                      "Wronskian of twisted sections with tau^(rI) divided out");
    rw->add_option("--input", rw_input, "family JSON file")->required();
    rw->add_option("--I", rw_indices, "multi-index \"(i0,...,iN)\" (repeat k+1 times)")->required();

    // germ
    std::string germ_input, germ_f, germ_x;
    int germ_n = 0, germ_order = 1;
    CLI::App* germ = app.add_subcommand("germ", "curve germ inside a hypersurface");
    germ->add_option("--input", germ_input, "family JSON file");
    germ->add_option("--F", germ_f, "hypersurface polynomial");
    germ->add_option("--n", germ_n, "number of base variables (with --F)");
    germ->add_option("--x", germ_x, "base point \"x1,...,xn\"")->required();
    germ->add_option("--order", germ_order, "truncation order");

    // plucker
    std::string pl_matrix, pl_input;
    CLI::App* pl = app.add_subcommand("plucker", "Plucker coordinates of a (k+1)-row matrix");
    pl->add_option("--matrix", pl_matrix, "JSON array of rows of rationals");
    pl->add_option("--input", pl_input, "JSON file with a \"matrix\" field");

    // incidence
    std::string inc_input, inc_x, inc_germ;
    int inc_order = 0;
    CLI::App* inc = app.add_subcommand("incidence", "universal family incidence test");
    inc->add_option("--input", inc_input, "family JSON file")->required();
    inc->add_option("--x", inc_x, "smooth base point on the hypersurface");
    inc->add_option("--germ", inc_germ, "explicit germ \"c0,c1,..;c0,c1,..\"");
    inc->add_option("--order", inc_order, "germ truncation order");

    // bounds
    long b_n = 0, b_N = 0, b_k = 0, b_delta = 0, b_eps = 0, b_u = 1, b_v = 1, b_minf = 0,
         b_M = 0, b_R = 0, b_d = 0;
    bool b_deng = false;
    CLI::App* bounds = app.add_subcommand("bounds", "numeric bound formulas and thresholds");
    bounds->add_option("--n", b_n, "dimension");
    bounds->add_option("--N", b_N, "number of tau sections minus one");
    bounds->add_option("--k", b_k, "jet order");
    bounds->add_option("--delta", b_delta, "index degree");
    bounds->add_option("--epsilon", b_eps, "coefficient degree");
    bounds->add_option("--u", b_u, "twist exponent u");
    bounds->add_option("--v", b_v, "twist exponent v");
    bounds->add_option("--m-inf", b_minf, "Wronskian ideal stabilization stand-in");
    bounds->add_option("--M", b_M, "base locus stabilization stand-in");
    bounds->add_option("--R", b_R, "r threshold stand-in");
    bounds->add_option("--d", b_d, "degree to decompose");
    bounds->add_flag("--deng", b_deng, "evaluate the effective degree bound");

    // verify
    std::string vf_suite;
    std::uint64_t vf_seed = 42;
    int vf_trials = 50;
    CLI::App* vf = app.add_subcommand("verify", "run a randomized verification suite");
    vf->add_option("--suite", vf_suite, "suite name")->required();
    vf->add_option("--seed", vf_seed, "PRNG seed");
    vf->add_option("--trials", vf_trials, "cases per configuration");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*diff) return cmd_diff(diff_expr, diff_p, diff_n, diff_k, start);
        if (*wr) return cmd_wronskian(wr_exprs, wr_n, wr_k, start);
        if (*rw) return cmd_reduced_wronskian(rw_input, rw_indices, start);
        if (*germ) return cmd_germ(germ_input, germ_f, germ_n, germ_x, germ_order, start);
        if (*pl) return cmd_plucker(pl_matrix, pl_input, start);
        if (*inc) return cmd_incidence(inc_input, inc_x, inc_germ, inc_order, start);
        if (*bounds)
            return cmd_bounds(bounds, b_n, b_N, b_k, b_delta, b_eps, b_u, b_v, b_minf, b_M, b_R,
                              b_d, b_deng, start);
        if (*vf) return cmd_verify(vf_suite, vf_seed, vf_trials, start);
    } catch (const jetwronsk::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const jetwronsk::OrderOverflow& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const jetwronsk::SingularPoint& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const jetwronsk::FrameDegenerate& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const jetwronsk::GcdError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const jetwronsk::TooSmall& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const jetwronsk::DivisionFails& e) {
        // An identity the library guarantees failed: verification failure.
        std::cerr << "identity violation: " << e.what() << "\n";
        return kExitCheckFailed;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    return kExitUsage;
}
