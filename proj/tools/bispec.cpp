// Command-line workbench for exact matrix bispectral problems.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "bispec/conjectures.hpp"
#include "bispec/fixtures.hpp"
#include "bispec/kdv.hpp"
#include "bispec/report.hpp"

using namespace bispec;

namespace {

struct Clock {
    std::chrono::steady_clock::time_point start =
        std::chrono::steady_clock::now();
    std::int64_t ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
            .count();
    }
};

struct Output {
    bool json = false;
    bool quiet = false;

    void emit(const Report& r) const {
        if (json)
            std::cout << r.to_json() << "\n";
        else if (!quiet)
            std::cout << r.to_text();
    }
};

ProblemFile load_problem(const std::string& input, int example) {
    if (example > 0) return load_example(example);
    std::ifstream in(input);
    if (!in) throw Error("cannot open input file: " + input);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_problem(buf.str());
}

const ExpKernel& require_psi(const ProblemFile& pf) {
    auto it = pf.funs.find("Psi");
    if (it == pf.funs.end())
        throw UndefinedNameError("the problem must bind 'fun Psi'");
    return it->second;
}

void push_residuals(Report& rep, const std::string& tag, const MatRF& diff) {
    for (int r = 0; r < diff.rows(); ++r)
        for (int c = 0; c < diff.cols(); ++c)
            if (!diff.at(r, c).is_zero())
                rep.residuals.emplace_back(
                    tag + "(" + std::to_string(r) + "," + std::to_string(c) + ")",
                    diff.at(r, c).to_string());
}

Report::BasisElement basis_element(const MatRF& m, Var v, int deg) {
    Report::BasisElement e;
    e.pretty = m.to_string();
    for (const Scalar& s : eigen_to_vector(m, v, deg))
        e.coeffs.push_back(s.to_exact_string());
    return e;
}

int run_verify(const std::string& input, int example, const Output& out) {
    Clock clock;
    Report rep;
    rep.command = "verify";
    ProblemFile pf = load_problem(input, example);
    const ExpKernel& psi = require_psi(pf);

    bool checked = false;
    if (auto l = pf.ops.find("L"); l != pf.ops.end()) {
        ExpKernel lhs = apply_left(l->second, psi);
        if (auto p = pf.lets.find("p"); p != pf.lets.end()) {
            push_residuals(rep, "L:", lhs.m() - psi.m().scale(p->second));
            checked = true;
        } else if (auto f = pf.mats.find("F"); f != pf.mats.end()) {
            push_residuals(rep, "L:",
                           lhs.m() - mult_right(psi, f->second).m());
            checked = true;
        } else {
            throw UndefinedNameError(
                "verifying L needs 'let p' or 'mat F' as its eigenvalue");
        }
    }
    if (auto b = pf.ops.find("B"); b != pf.ops.end()) {
        auto theta = pf.mats.find("Theta");
        if (theta == pf.mats.end())
            throw UndefinedNameError("verifying B needs 'mat Theta'");
        push_residuals(rep, "B:",
                       apply_right(psi, b->second).m() -
                           mult_left(theta->second, psi).m());
        checked = true;
    }
    if (!checked)
        throw UndefinedNameError("nothing to verify: bind L (with p or F) or B");

    rep.status = rep.residuals.empty() ? "verified" : "failed";
    rep.ms = clock.ms();
    out.emit(rep);
    return rep.residuals.empty() ? 0 : 1;
}

int compare_and_report(Report& rep, const SolutionSpace& space,
                       const std::string& compare, const Output& out,
                       const Clock& clock) {
    for (const auto& m : space.eigen_basis)
        rep.basis.push_back(basis_element(m, space.eigen_var, space.eigen_deg));
    int code = 0;
    if (!compare.empty()) {
        Family fam = compare == "C1"   ? Family::C1
                     : compare == "C2" ? Family::C2
                                       : Family::F3;
        auto conj = conjecture_family(fam, space.eigen_deg);
        rep.dims["conjectured_dim"] = static_cast<std::int64_t>(conj.size());
        CompareResult cmp = compare_spaces(space, conj);
        rep.status = cmp.relation_name();
        rep.dims["computed_rank"] = cmp.computed_rank;
        rep.dims["conjectured_rank"] = cmp.conjectured_rank;
        rep.dims["joint_rank"] = cmp.joint_rank;
        if (cmp.certificate) {
            rep.notes.push_back("certificate (" + cmp.certificate_side +
                                " side): " + cmp.certificate->to_string());
        }
        code = cmp.relation == CompareResult::Relation::equal ? 0 : 1;
    } else {
        rep.status = "ok";
    }
    rep.ms = clock.ms();
    out.emit(rep);
    return code;
}

int run_solve_theta(const std::string& input, int example, int deg, int border,
                    int zlow, int zhigh, const std::string& compare,
                    bool escalate, const Output& out) {
    Clock clock;
    Report rep;
    rep.command = "solve-theta";
    ProblemFile pf = load_problem(input, example);
    const ExpKernel& psi = require_psi(pf);
    BAnsatz an{border, zlow, zhigh, psi.size()};

    SolutionSpace space;
    BAnsatz used = an;
    if (escalate)
        space = solve_theta_space_escalating(psi, deg, an, 4, &used);
    else
        space = solve_theta_space(psi, deg, an);
    rep.dims["theta_dim"] = space.eigen_dim();
    rep.dims["nullspace_dim"] = static_cast<std::int64_t>(space.basis.size());
    rep.bounds_used["b_order"] = used.max_order;
    rep.bounds_used["z_low"] = used.laurent_low;
    rep.bounds_used["z_high"] = used.laurent_high;
    return compare_and_report(rep, space, compare, out, clock);
}

int run_solve_f(const std::string& input, int example, int deg, int lorder,
                const std::string& den, int numdeg, const std::string& compare,
                const Output& out) {
    Clock clock;
    Report rep;
    rep.command = "solve-f";
    ProblemFile pf = load_problem(input, example);
    const ExpKernel& psi = require_psi(pf);
    RatFunc denf = parse_ratfunc(den, pf.field);
    if (!denf.is_polynomial())
        throw DomainError("--den must be a polynomial in x");
    LAnsatz an{lorder, denf.num(), numdeg, psi.size()};

    SolutionSpace space = solve_f_space(psi, deg, an);
    rep.dims["f_dim"] = space.eigen_dim();
    rep.dims["nullspace_dim"] = static_cast<std::int64_t>(space.basis.size());
    rep.bounds_used["l_order"] = an.max_order;
    rep.bounds_used["num_deg"] = an.num_deg;
    return compare_and_report(rep, space, compare, out, clock);
}

int run_ad_order(const std::string& input, int example, int max_m,
                 const Output& out) {
    Clock clock;
    Report rep;
    rep.command = "ad-order";
    ProblemFile pf = load_problem(input, example);
    auto l = pf.ops.find("L");
    if (l == pf.ops.end())
        throw UndefinedNameError("ad-order needs 'op L'");
    auto theta = pf.mats.find("Theta");
    if (theta == pf.mats.end())
        throw UndefinedNameError("ad-order needs 'mat Theta'");
    DiffOp t = DiffOp::order0(Side::left, theta->second);
    auto m = minimal_ad_order(l->second, t, max_m);
    if (m) {
        rep.status = "finite";
        rep.dims["minimal_m"] = *m;
    } else {
        rep.status = "absent";
        rep.dims["m_max"] = max_m;
    }
    rep.ms = clock.ms();
    out.emit(rep);
    return m ? 0 : 1;
}

int run_kdv(const std::string& poles, const std::string& modulus, bool check,
            bool tau_flag, int dim_n, int crosscheck_n, const Output& out) {
    Clock clock;
    Report rep;
    rep.command = "kdv";
    FieldPtr field;
    if (!modulus.empty()) field = parse_field_modulus(modulus);
    KdVConfig cfg;
    for (const auto& [p, nu] : parse_pole_spec(poles, field))
        cfg.poles.push_back({p, nu});
    cfg.validate();

    int code = 0;
    if (check) {
        auto rs = check_constraints(cfg);
        bool ok = true;
        for (const auto& r : rs) {
            if (r.residual.is_zero()) continue;
            ok = false;
            rep.residuals.emplace_back(
                "p=" + r.p.to_string() + ",j=" + std::to_string(r.j),
                r.residual.to_string());
        }
        rep.status = ok ? "in-family" : "not-in-family";
        code = ok ? 0 : 1;
    } else if (tau_flag) {
        BiPoly t = tau(cfg);
        RatFunc v = potential(cfg);
        const bool ok = verify_log_identity(cfg);
        rep.status = ok ? "verified" : "failed";
        rep.notes.push_back("tau = " + t.to_string());
        rep.notes.push_back("V = " + v.to_string());
        code = ok ? 0 : 1;
    } else if (dim_n >= 0) {
        rep.status = "ok";
        rep.dims["admissible_dim"] = admissible_dim(cfg, dim_n);
    } else if (crosscheck_n >= 0) {
        if (cfg.poles.size() != 1 || !cfg.poles[0].p.is_zero() ||
            cfg.poles[0].nu != 1)
            throw DomainError(
                "--crosscheck supports only the one-pole configuration 0:1");
        const bool ok = crosscheck_scalar(crosscheck_n);
        rep.status = ok ? "equal" : "mismatch";
        rep.dims["dim"] = admissible_dim(cfg, crosscheck_n);
        code = ok ? 0 : 1;
    } else {
        throw Error("kdv needs one of --check, --tau, --dim, --crosscheck");
    }
    rep.ms = clock.ms();
    out.emit(rep);
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact workbench for matrix bispectral problems"};
    app.require_subcommand(1);
    Output out;
    app.add_flag("--json", out.json, "emit one JSON report object");
    app.add_flag("--quiet", out.quiet, "suppress human-readable output");

    std::string input;
    int example = 0;

    auto add_problem_opts = [&](CLI::App* cmd) {
        cmd->add_option("--input", input, "problem file (.bsp)");
        cmd->add_option("--example", example, "bundled example number (1..3)")
            ->check(CLI::Range(1, 3));
    };

    auto* verify = app.add_subcommand("verify", "check the eigenvalue identities");
    add_problem_opts(verify);

    auto* st = app.add_subcommand("solve-theta",
                                  "solve for all (Theta, B) pairs under an ansatz");
    add_problem_opts(st);
    int deg = 0, border = 0, zlow = 0, zhigh = 0;
    std::string compare;
    bool escalate = false;
    st->add_option("--deg", deg, "max Theta degree")->required();
    st->add_option("--b-order", border, "max B order")->required();
    st->add_option("--z-low", zlow, "lowest z exponent in B coefficients")
        ->required();
    st->add_option("--z-high", zhigh, "highest z exponent (default 0)");
    st->add_option("--compare", compare, "compare against a family")
        ->check(CLI::IsMember({"C1", "C2"}));
    st->add_flag("--escalate", escalate, "double bounds until the space stabilizes");

    auto* sf = app.add_subcommand("solve-f",
                                  "solve for all (F, L) pairs under an ansatz");
    add_problem_opts(sf);
    int lorder = 0, numdeg = 0;
    std::string den, fcompare;
    sf->add_option("--deg", deg, "max F degree")->required();
    sf->add_option("--l-order", lorder, "max L order")->required();
    sf->add_option("--den", den, "fixed denominator polynomial in x")->required();
    sf->add_option("--num-deg", numdeg, "numerator degree bound")->required();
    sf->add_option("--compare", fcompare, "compare against a family")
        ->check(CLI::IsMember({"F3"}));

    auto* ad = app.add_subcommand("ad-order",
                                  "minimal m with (ad L)^{m+1}(Theta) = 0");
    add_problem_opts(ad);
    int max_m = 10;
    ad->add_option("--max-m", max_m, "search bound")->required();

    auto* kdv = app.add_subcommand("kdv", "rational KdV-family computations");
    std::string poles, modulus;
    bool kcheck = false, ktau = false;
    int kdim = -1, kcross = -1;
    kdv->add_option("--poles", poles, "pole spec p:nu,p:nu,...")->required();
    kdv->add_option("--modulus", modulus,
                    "extension modulus in 'a' (e.g. \"a^2 - a + 1\")");
    kdv->add_flag("--check", kcheck, "evaluate the family constraints");
    kdv->add_flag("--tau", ktau, "print tau and V, verify the log identity");
    kdv->add_option("--dim", kdim, "dimension of admissible polynomials, degree <= N");
    kdv->add_option("--crosscheck", kcross,
                    "compare solver and derivative characterization, degree <= N");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (verify->parsed()) return run_verify(input, example, out);
        if (st->parsed())
            return run_solve_theta(input, example, deg, border, zlow, zhigh,
                                   compare, escalate, out);
        if (sf->parsed())
            return run_solve_f(input, example, deg, lorder, den, numdeg,
                               fcompare, out);
        if (ad->parsed()) return run_ad_order(input, example, max_m, out);
        if (kdv->parsed())
            return run_kdv(poles, modulus, kcheck, ktau, kdim, kcross, out);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
