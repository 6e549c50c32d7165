#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "carlitz/errors.hpp"
#include "carlitz/expseries.hpp"
#include "carlitz/serialize.hpp"
#include "carlitz/suites.hpp"

using namespace carlitz;

namespace {

std::int64_t ipow(std::int64_t b, int e) {
    std::int64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

void add_common(CLI::App* cmd, RunConfig& cfg, std::string& modulus_csv) {
    cmd->add_option("--p", cfg.p, "field characteristic (prime)");
    cmd->add_option("--gamma", cfg.gamma, "extension degree, q = p^gamma");
    cmd->add_option("--modulus", modulus_csv,
                    "modulus coefficients mod p, low degree first, e.g. 1,1,1");
    cmd->add_option("--imax", cfg.imax, "depth of the bracket/factorial cache");
    cmd->add_option("--M", cfg.m, "coefficient truncation order");
    cmd->add_option("--prec", cfg.prec, "series working precision (powers of x)");
    cmd->add_option("--ram-cap", cfg.ram_cap, "ramification denominator cap (0 = q^2)");
    cmd->add_option("--seed", cfg.seed, "seed for randomized suites");
    cmd->add_option("--format", cfg.format, "output format: text | json");
    cmd->add_flag("--timings", cfg.timings, "include wall-clock times in reports");
}

RunConfig finalize(RunConfig cfg, const std::string& modulus_csv) {
    if (!modulus_csv.empty()) {
        std::vector<int> m;
        std::size_t pos = 0;
        std::string s = modulus_csv;
        if (!s.empty() && s.front() == '[') s = s.substr(1, s.size() - 2);
        while (pos <= s.size()) {
            std::size_t comma = s.find(',', pos);
            std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos
                                                                       : comma - pos);
            if (!tok.empty()) m.push_back(std::stoi(tok));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        cfg.modulus = m;
    }
    cfg.validate();
    return cfg;
}

LaurentSeries embed(const Fq& F, const RatFunc& r, std::int64_t prec) {
    return ls_from_ratfunc(F, r, prec);
}

int cmd_table(const RunConfig& cfg) {
    Fq F = cfg.make_field();
    CarlitzCache C(F, cfg.imax);
    auto en = default_enumeration(F);
    const std::int64_t q = F.q();
    std::int64_t jmax = std::min<std::int64_t>({q * q, 13, ipow(q, cfg.imax)});

    auto e_text = [&](int i) {
        auto coeffs = e_poly(C, i);
        PolyFq dense;
        dense.c.assign(std::size_t(ipow(q, i)) + 1, FqPoly());
        for (std::size_t j = 0; j < coeffs.size(); ++j)
            dense.c[std::size_t(ipow(q, int(j)))] = coeffs[j];
        return tpoly_text(F, dense);
    };

    if (cfg.format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (int i = 1; i <= cfg.imax; ++i)
            rows.push_back({{"kind", "bracket"}, {"i", i}, {"value", poly_text(F, C.bracket(i))}});
        for (int i = 0; i <= cfg.imax; ++i)
            rows.push_back({{"kind", "D"}, {"i", i}, {"value", poly_text(F, C.D(i))}});
        for (int i = 0; i <= cfg.imax; ++i)
            rows.push_back({{"kind", "L"}, {"i", i}, {"value", poly_text(F, C.L(i))}});
        for (int i = 0; i <= cfg.imax; ++i)
            rows.push_back({{"kind", "e"}, {"i", i}, {"value", e_text(i)}});
        for (int i = 0; i <= cfg.imax; ++i)
            rows.push_back({{"kind", "f"},
                            {"i", i},
                            {"num", e_text(i)},
                            {"den", poly_text(F, C.D(i))}});
        for (std::int64_t j = 0; j < jmax; ++j) {
            HPoly h = h_poly(C, std::uint64_t(j));
            rows.push_back({{"kind", "h"},
                            {"j", j},
                            {"num", tpoly_text(F, h.g)},
                            {"den", poly_text(F, h.gamma)}});
        }
        for (std::int64_t j = 0; j < jmax; ++j) {
            QPoly qp = q_poly(F, std::uint64_t(j), en);
            rows.push_back({{"kind", "Q"},
                            {"j", j},
                            {"num", tpoly_text(F, qp.p)},
                            {"den", poly_text(F, qp.p_at_m)}});
        }
        nlohmann::json doc{{"config", config_to_json(cfg)}, {"rows", rows}};
        std::cout << doc.dump(2) << "\n";
        return 0;
    }

    for (int i = 1; i <= cfg.imax; ++i)
        std::cout << "bracket[" << i << "] = " << poly_text(F, C.bracket(i)) << "\n";
    for (int i = 0; i <= cfg.imax; ++i)
        std::cout << "D[" << i << "] = " << poly_text(F, C.D(i)) << "\n";
    for (int i = 0; i <= cfg.imax; ++i)
        std::cout << "L[" << i << "] = " << poly_text(F, C.L(i)) << "\n";
    for (int i = 0; i <= cfg.imax; ++i)
        std::cout << "e[" << i << "] = " << e_text(i) << "\n";
    for (int i = 0; i <= cfg.imax; ++i)
        std::cout << "f[" << i << "] = (" << e_text(i) << ")/(" << poly_text(F, C.D(i)) << ")\n";
    for (std::int64_t j = 0; j < jmax; ++j) {
        HPoly h = h_poly(C, std::uint64_t(j));
        std::cout << "h[" << j << "] = (" << tpoly_text(F, h.g) << ")/("
                  << poly_text(F, h.gamma) << ")\n";
    }
    for (std::int64_t j = 0; j < jmax; ++j) {
        QPoly qp = q_poly(F, std::uint64_t(j), en);
        std::cout << "Q[" << j << "] = (" << tpoly_text(F, qp.p) << ")/("
                  << poly_text(F, qp.p_at_m) << ")\n";
    }
    return 0;
}

int cmd_verify(const RunConfig& cfg, const std::string& suite) {
    std::vector<std::string> to_run;
    if (suite == "all")
        to_run = suite_names();
    else
        to_run.push_back(suite);
    for (const auto& name : to_run)
        if (std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end())
            throw domain_error("unknown suite: " + name +
                               " (expected basis|orthonormal|prop2|exp|oscillator|coherent|all)");

    bool all_ok = true;
    nlohmann::json jreports = nlohmann::json::array();
    for (const auto& name : to_run) {
        SuiteReport r = run_suite(cfg, name);
        all_ok = all_ok && r.ok();
        if (cfg.format == "json")
            jreports.push_back(report_json(r, cfg.timings));
        else
            std::cout << report_text(r, cfg.timings);
        if (cfg.timings) std::fprintf(stderr, "suite %s: %.1f ms\n", name.c_str(), r.wall_ms);
    }
    if (cfg.format == "json") {
        nlohmann::json doc{{"config", config_to_json(cfg)}, {"ok", all_ok}, {"reports", jreports}};
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << (all_ok ? "all checks passed" : "FAILED") << "\n";
    }
    return all_ok ? 0 : 1;
}

int cmd_eval(const RunConfig& cfg, const std::string& basis, int index,
             const std::string& coeffs_arg, const std::string& t_arg) {
    Fq F = cfg.make_field();
    CarlitzCache C(F, cfg.imax);
    if (t_arg.empty()) throw domain_error("eval needs --t");
    Scalar t = sc_from_ratfunc(parse_ratfunc(F, t_arg));

    Scalar value = sc_zero();
    if (!coeffs_arg.empty()) {
        CarlitzCoeffs c;
        std::size_t pos = 0;
        while (pos <= coeffs_arg.size()) {
            std::size_t semi = coeffs_arg.find(';', pos);
            std::string tok = coeffs_arg.substr(
                pos, semi == std::string::npos ? std::string::npos : semi - pos);
            if (!tok.empty()) c.c.push_back(sc_from_ratfunc(parse_ratfunc(F, tok)));
            if (semi == std::string::npos) break;
            pos = semi + 1;
        }
        value = eval_coeffs(C, c, t);
    } else if (basis == "f") {
        value = eval_coeffs(C, CarlitzCoeffs::unit(std::size_t(index), std::size_t(index) + 1), t);
    } else if (basis == "e") {
        LinearPoly e;
        for (auto& p : e_poly(C, index)) e.u.push_back(sc_from_poly(p));
        value = eval_linear(F, e, t);
    } else if (basis == "h") {
        auto h = h_poly(C, std::uint64_t(index));
        RatFunc tv = parse_ratfunc(F, t_arg);
        if (!tv.is_polynomial()) throw domain_error("h evaluation needs a polynomial t");
        RatFunc num = rf_from_poly(tp_eval(F, h.g, tv.num));
        value = sc_from_ratfunc(rf_div(F, num, rf_from_poly(h.gamma)));
    } else if (basis == "Q") {
        auto qp = q_poly(F, std::uint64_t(index), default_enumeration(F));
        RatFunc tv = parse_ratfunc(F, t_arg);
        if (!tv.is_polynomial()) throw domain_error("Q evaluation needs a polynomial t");
        value = sc_from_ratfunc(rf_make(F, tp_eval(F, qp.p, tv.num), qp.p_at_m));
    } else {
        throw domain_error("eval needs --coeffs or --basis {e|f|h|Q} with --i");
    }

    if (cfg.format == "json") {
        nlohmann::json doc{{"value", scalar_json(F, value)}, {"exact", sc_is_exact(value)}};
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "value = " << scalar_text(F, value) << "\n";
        std::cout << "certified: " << (sc_is_exact(value) ? "exact" : "truncated") << "\n";
    }
    return 0;
}

int cmd_exp(const RunConfig& cfg, const std::string& z_arg, int n_explicit) {
    Fq F = cfg.make_field();
    CarlitzCache C(F, cfg.imax);
    RatFunc z = parse_ratfunc(F, z_arg);
    LaurentSeries value;
    if (n_explicit >= 0)
        value = carlitz_exp_partial(C, embed(F, z, cfg.prec), n_explicit);
    else
        value = carlitz_exp(C, embed(F, z, cfg.prec), cfg.prec);
    if (cfg.format == "json") {
        nlohmann::json doc{{"value", laurent_json(F, value)}, {"prec", value.prec}};
        if (n_explicit >= 0) doc["N"] = n_explicit;
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "value = " << laurent_text(F, value) << "\n";
        std::cout << "precision = " << value.prec << "\n";
    }
    return 0;
}

int cmd_rho(const RunConfig& cfg, const std::string& zeta_arg, int n_explicit) {
    Fq F = cfg.make_field();
    CarlitzCache C(F, cfg.imax);
    RatFunc zeta = parse_ratfunc(F, zeta_arg);
    LaurentSeries value;
    if (n_explicit >= 0)
        value = rho_partial(C, embed(F, zeta, cfg.prec), n_explicit);
    else
        value = rho(C, embed(F, zeta, cfg.prec), cfg.prec);
    if (cfg.format == "json") {
        nlohmann::json doc{{"value", laurent_json(F, value)}, {"prec", value.prec}};
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "value = " << laurent_text(F, value) << "\n";
        std::cout << "precision = " << value.prec << "\n";
    }
    return 0;
}

int cmd_wz(const RunConfig& cfg, const std::string& z_arg) {
    Fq F = cfg.make_field();
    CarlitzCache C(F, cfg.imax);
    RatFunc z = parse_ratfunc(F, z_arg);
    CarlitzCoeffs b = wz_coeffs(C, embed(F, z, cfg.prec), std::size_t(cfg.m), cfg.prec);
    if (cfg.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& c : b.c) arr.push_back(scalar_json(F, c));
        nlohmann::json doc{{"coeffs", arr}, {"prec", cfg.prec}};
        std::cout << doc.dump(2) << "\n";
    } else {
        for (std::size_t n = 0; n < b.c.size(); ++n)
            std::cout << "b[" << n << "] = " << scalar_text(F, b.c[n]) << "\n";
        std::cout << "precision = " << cfg.prec << "\n";
    }
    return 0;
}

int cmd_coherent(const RunConfig& cfg, const std::string& lambda_arg,
                 const std::string& c0_arg) {
    Fq F = cfg.make_field();
    const std::int64_t cap = cfg.effective_ram_cap(F.q());
    Scalar lambda = sc_from_ratfunc(parse_ratfunc(F, lambda_arg));
    Scalar c0 = sc_from_ratfunc(parse_ratfunc(F, c0_arg));
    CarlitzCoeffs u = coherent_state(F, lambda, c0, std::size_t(cfg.m));
    CarlitzCoeffs lowered = a_minus(F, u, cap);
    bool residual_zero = true;
    std::vector<Scalar> residuals;
    for (std::size_t n = 0; n + 1 < u.c.size(); ++n) {
        Scalar r = sc_sub(F, lowered.c[n], sc_mul(F, lambda, u.c[n]));
        residual_zero = residual_zero && sc_is_zero(r);
        residuals.push_back(std::move(r));
    }
    if (cfg.format == "json") {
        nlohmann::json arr = nlohmann::json::array(), res = nlohmann::json::array();
        for (const auto& c : u.c) arr.push_back(scalar_json(F, c));
        for (const auto& r : residuals) res.push_back(scalar_json(F, r));
        nlohmann::json doc{{"coeffs", arr}, {"residuals", res}, {"residual_zero", residual_zero}};
        std::cout << doc.dump(2) << "\n";
    } else {
        for (std::size_t n = 0; n < u.c.size(); ++n)
            std::cout << "c[" << n << "] = " << scalar_text(F, u.c[n]) << "\n";
        for (std::size_t n = 0; n < residuals.size(); ++n)
            std::cout << "residual[" << n << "] = " << scalar_text(F, residuals[n]) << "\n";
        std::cout << (residual_zero ? "eigenrelation holds" : "EIGENRELATION FAILED") << "\n";
    }
    return residual_zero ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Carlitz-basis ladder calculus over F_q((x))"};
    app.require_subcommand(1);

    RunConfig base;
    try {
        base = base_config_from_env();
    } catch (const domain_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }

    RunConfig cfg = base;
    std::string modulus_csv;
    std::string suite = "all", basis = "", coeffs, targ, zarg, zetaarg, lambdaarg, c0arg;
    int index = 0, n_explicit = -1;

    CLI::App* t = app.add_subcommand("table", "print brackets, factorials and basis polynomials");
    add_common(t, cfg, modulus_csv);

    CLI::App* v = app.add_subcommand("verify", "run identity-verification suites");
    add_common(v, cfg, modulus_csv);
    v->add_option("suite,--suite", suite, "basis|orthonormal|prop2|exp|oscillator|coherent|all");

    CLI::App* ev = app.add_subcommand("eval", "evaluate a basis function or coefficient list");
    add_common(ev, cfg, modulus_csv);
    ev->add_option("--basis", basis, "e|f|h|Q");
    ev->add_option("--i", index, "basis index");
    ev->add_option("--coeffs", coeffs, "semicolon-separated coefficient list");
    ev->add_option("--t", targ, "evaluation point (|t| <= 1)");

    CLI::App* ex = app.add_subcommand("exp", "Carlitz exponential");
    add_common(ex, cfg, modulus_csv);
    ex->add_option("--z", zarg, "argument")->required();
    ex->add_option("--N", n_explicit, "explicit truncation index (partial sum)");

    CLI::App* rh = app.add_subcommand("rho", "formal inverse of the exponential");
    add_common(rh, cfg, modulus_csv);
    rh->add_option("--zeta", zetaarg, "argument")->required();
    rh->add_option("--N", n_explicit, "explicit truncation index (partial sum)");

    CLI::App* wz = app.add_subcommand("wz", "basis coefficients of t -> exp(t z)");
    add_common(wz, cfg, modulus_csv);
    wz->add_option("--z", zarg, "argument")->required();

    CLI::App* co = app.add_subcommand("coherent", "lowering-operator eigenfunction");
    add_common(co, cfg, modulus_csv);
    co->add_option("--lambda", lambdaarg, "eigenvalue")->required();
    co->add_option("--c0", c0arg, "leading coefficient")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        RunConfig run = finalize(cfg, modulus_csv);
        if (t->parsed()) return cmd_table(run);
        if (v->parsed()) return cmd_verify(run, suite);
        if (ev->parsed()) return cmd_eval(run, basis, index, coeffs, targ);
        if (ex->parsed()) return cmd_exp(run, zarg, n_explicit);
        if (rh->parsed()) return cmd_rho(run, zetaarg, n_explicit);
        if (wz->parsed()) return cmd_wz(run, zarg);
        if (co->parsed()) return cmd_coherent(run, lambdaarg, c0arg);
    } catch (const precision_error& e) {
        std::fprintf(stderr, "precision exhausted: %s\n", e.what());
        return 3;
    } catch (const domain_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const internal_error& e) {
        std::fprintf(stderr, "internal consistency failure: %s\n", e.what());
        return 1;
    }
    return 2;
}
