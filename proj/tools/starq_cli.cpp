#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>

#include "starq/fedosov.hpp"
#include "starq/io.hpp"
#include "starq/normalizer.hpp"
#include "starq/printer.hpp"
#include "starq/random_gen.hpp"
#include "starq/scenarios.hpp"

namespace {

using namespace starq;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

struct CliConfig {
    unsigned order = 6;
    unsigned dim = 2;
    std::string connection_path;
    std::string ideal_path;
    uint64_t seed = kDefaultScenarioSeed;
    std::string format = "text";
};

std::string xmono_str(const XMonomial& xm) {
    std::string s;
    for (unsigned i = 0; i < xm.dim(); ++i) {
        if (xm.exps[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += "x" + std::to_string(i + 1);
        if (xm.exps[i] > 1) s += "^" + std::to_string(xm.exps[i]);
    }
    return s.empty() ? "1" : s;
}

std::string nf_str(const NormalForm& nf) {
    if (nf.is_zero()) return "0";
    std::string s;
    for (const auto& [xm, coeff] : nf.components()) {
        if (!s.empty()) s += " + ";
        s += "(" + print_canonical(coeff, ParamUse::Lambda) + ") ⋆ " + xmono_str(xm);
    }
    return s;
}

void emit_element(const CliConfig& cfg, const WeylElement& e, ParamUse spelling) {
    if (cfg.format == "json") {
        nlohmann::json doc;
        doc["schema_version"] = 1;
        doc["result"] = print_canonical(e, spelling);
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << print_canonical(e, spelling) << "\n";
    }
}

WeylElement parse_in_convention(const std::string& src, unsigned dim, ParamUse expected,
                                const char* which) {
    EvalResult r = parse_element(src, dim);
    if (r.param != ParamUse::None && r.param != expected)
        throw ParseError(SourcePos{}, std::string("expression uses the wrong parameter for the ") +
                                          which + " convention",
                         expected == ParamUse::Lambda ? "lambda" : "hbar");
    return r.element;
}

int run_selftest(const CliConfig& cfg) {
    RandomGen rng(cfg.seed);
    const unsigned n = 2;
    const Var all_vars[] = {Var{VarKind::X, 0}, Var{VarKind::X, 1}, Var{VarKind::P, 0},
                            Var{VarKind::P, 1}, Var{VarKind::Y, 0}, Var{VarKind::Y, 1},
                            Var{VarKind::Psi, 0}, Var{VarKind::Psi, 1}};
    const Var base_vars[] = {Var{VarKind::X, 0}, Var{VarKind::X, 1}, Var{VarKind::P, 0},
                             Var{VarKind::P, 1}};
    bool all_ok = true;
    auto report = [&](const std::string& what, bool ok) {
        std::cout << (ok ? "[pass] " : "[FAIL] ") << what << "\n";
        all_ok = all_ok && ok;
    };

    {
        bool ok = true;
        for (int t = 0; t < 25 && ok; ++t) {
            WeylElement a = rng.poly(n, all_vars, 3, 3, 0, 1, true);
            WeylElement b = rng.poly(n, all_vars, 3, 3, 0, 1, true);
            WeylElement c = rng.poly(n, all_vars, 3, 3, 0, 1, true);
            ok = superproduct(superproduct(a, b), c) == superproduct(a, superproduct(b, c));
        }
        report("superproduct associativity (25 random triples)", ok);
    }
    {
        bool ok = true;
        const StarConfig cfg_w = StarConfig::weyl();
        const StarConfig cfg_m = StarConfig::moyal();
        for (int t = 0; t < 15 && ok; ++t) {
            WeylElement a = rng.poly(n, all_vars, 3, 3, 0, 0, true);
            WeylElement b = rng.poly(n, all_vars, 3, 3, 0, 0, true);
            WeylElement c = rng.poly(n, all_vars, 3, 3, 0, 0, true);
            ok = star(cfg_w, star(cfg_w, a, b), c) == star(cfg_w, a, star(cfg_w, b, c));
            if (ok) {
                WeylElement f = rng.poly(n, base_vars, 3, 3);
                WeylElement g = rng.poly(n, base_vars, 3, 3);
                WeylElement h = rng.poly(n, base_vars, 3, 3);
                ok = star(cfg_m, star(cfg_m, f, g), h) == star(cfg_m, f, star(cfg_m, g, h));
            }
        }
        report("star associativity, both products (15 random triples)", ok);
    }
    {
        bool ok = true;
        for (int t = 0; t < 25 && ok; ++t) {
            WeylElement a = rng.poly(n, all_vars, 3, 4, 0, 1, true);
            ok = delta_op(delta_op(a)).is_zero() && delta_star_op(delta_star_op(a)).is_zero();
            if (ok) {
                WeylElement lhs = a;
                WeylElement rhs = delta_op(delta_inv(a)) + delta_inv(delta_op(a)) +
                                  restrict_00(a);
                ok = lhs == rhs;
            }
        }
        report("delta^2 = delta*^2 = 0 and the Hodge-type decomposition (25 random elements)", ok);
    }
    {
        bool ok = true;
        for (int t = 0; t < 200 && ok; ++t) {
            WeylElement e = rng.poly(n, base_vars, 4, 4, -2, 2, true);
            EvalResult round = parse_element(print_canonical(e, ParamUse::Lambda), n);
            ok = round.element == e;
        }
        report("parse/print round trip (200 random canonical forms)", ok);
    }
    return all_ok ? kExitOk : kExitVerificationFailure;
}

int run_gamma(const CliConfig& cfg) {
    ConnectionData conn = load_connection(cfg.connection_path);
    GammaSeries gamma = gamma_recursion(conn, cfg.order);
    emit_element(cfg, gamma.value, ParamUse::Hbar);

    // compare the low-degree parts against the displayed closed terms; for
    // general connections extra Gamma*R cross terms appear at y-degree 3
    const unsigned n = conn.dim();
    CurvatureTensor R = curvature(conn);
    WeylElement deg2 = WeylElement::zero(n, gamma.value.truncation_order());
    WeylElement deg3 = deg2;
    for (unsigned d = 0; d < n; ++d)
        for (unsigned a = 0; a < n; ++a)
            for (unsigned b = 0; b < n; ++b)
                for (unsigned c = 0; c < n; ++c) {
                    const WeylElement& e = R.entry(d, a, b, c);
                    if (e.is_zero()) continue;
                    uint32_t ord = gamma.value.truncation_order();
                    WeylElement ya = WeylElement::variable(n, Var{VarKind::Y, a}, ord);
                    WeylElement yb = WeylElement::variable(n, Var{VarKind::Y, b}, ord);
                    WeylElement psic = WeylElement::variable(n, Var{VarKind::Psi, c}, ord);
                    WeylElement pd = WeylElement::variable(n, Var{VarKind::P, d}, ord);
                    deg2 += (e.truncated(ord) * ya * yb * psic * pd)
                                .scaled(Gaussian(Rational(1, 3)));
                    for (unsigned l = 0; l < n; ++l) {
                        WeylElement de = partial(e, Var{VarKind::X, l});
                        if (de.is_zero()) continue;
                        WeylElement yl = WeylElement::variable(n, Var{VarKind::Y, l}, ord);
                        deg3 += (de.truncated(ord) * yl * ya * yb * psic * pd)
                                    .scaled(Gaussian(Rational(1, 12)));
                    }
                }
    bool match2 = gamma.value.y_degree_part(2) == deg2;
    bool match3 = gamma.value.y_degree_part(3) == deg3;
    if (!match2 || !match3)
        std::cout << "note: gamma deviates from the displayed closed terms at "
                  << (match2 ? "degree 3" : "degree 2")
                  << " (expected for connections with Gamma*R cross terms)\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact star products, the modified Fedosov construction, and quantum algebras of "
                 "singular spaces"};
    app.require_subcommand(1);
    app.fallthrough();

    CliConfig cfg;
    app.add_option("--dim", cfg.dim, "base dimension")->capture_default_str();
    app.add_option("--order", cfg.order, "truncation order")->capture_default_str();
    app.add_option("--seed", cfg.seed, "random seed")->capture_default_str();
    app.add_option("--format", cfg.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    // star
    auto* star_cmd = app.add_subcommand("star", "star-product of two expressions");
    bool use_weyl = false, use_moyal = false, sign_minus = false;
    bool conv_to_hbar = false, conv_to_lambda = false;
    std::string expr1, expr2;
    star_cmd->add_flag("--weyl", use_weyl, "fiberwise Weyl product (hbar convention)");
    star_cmd->add_flag("--moyal", use_moyal, "Moyal product on the base (lambda convention)");
    star_cmd->add_flag("--minus", sign_minus, "flip the deformation parameter sign");
    star_cmd->add_flag("--to-hbar", conv_to_hbar, "convert a lambda result via lambda = -(i/2) hbar");
    star_cmd->add_flag("--to-lambda", conv_to_lambda, "convert an hbar result via hbar = 2i lambda");
    star_cmd->add_option("expr1", expr1, "left factor")->required();
    star_cmd->add_option("expr2", expr2, "right factor")->required();

    // gamma
    auto* gamma_cmd = app.add_subcommand("gamma", "solve the gamma recursion for a connection");
    gamma_cmd->add_option("--connection", cfg.connection_path, "connection document")->required();

    // lift
    auto* lift_cmd = app.add_subcommand("lift", "flat section generated by a base expression");
    lift_cmd->add_option("--connection", cfg.connection_path, "connection document")->required();
    std::string lift_expr;
    lift_cmd->add_option("expr", lift_expr, "base expression a00")->required();

    // basestar
    auto* bstar_cmd = app.add_subcommand("basestar", "induced base star-product of two expressions");
    bstar_cmd->add_option("--connection", cfg.connection_path, "connection document")->required();
    std::string b1, b2;
    bstar_cmd->add_option("expr1", b1, "left factor")->required();
    bstar_cmd->add_option("expr2", b2, "right factor")->required();

    // normalizer
    auto* norm_cmd = app.add_subcommand("normalizer", "normalizer membership and residuals");
    norm_cmd->add_option("--ideal", cfg.ideal_path, "ideal document")->required();
    std::string norm_expr;
    norm_cmd->add_option("expr", norm_expr, "candidate element")->required();

    // solve
    auto* solve_cmd = app.add_subcommand("solve", "normalizer basis within an ansatz slice");
    solve_cmd->add_option("--ideal", cfg.ideal_path, "ideal document")->required();
    unsigned max_degree = 3, lambda_cap = 1;
    solve_cmd->add_option("--max-degree", max_degree, "total x,p degree cap")->capture_default_str();
    solve_cmd->add_option("--lambda-cap", lambda_cap, "lambda Laurent cap")->capture_default_str();

    // scenario
    auto* scen_cmd = app.add_subcommand("scenario", "run a worked singular-space scenario");
    std::string scen_name;
    scen_cmd->add_option("name", scen_name, "cross, double_line, double_point, fat_circle or all")
        ->required();

    // selftest
    app.add_subcommand("selftest", "run the invariant self-test suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (star_cmd->parsed()) {
            if (use_weyl && use_moyal) {
                std::cerr << "error: choose one of --weyl / --moyal\n";
                return kExitUsage;
            }
            StarConfig scfg = use_weyl ? StarConfig::weyl() : StarConfig::moyal();
            scfg.sign = sign_minus ? ParamSign::Minus : ParamSign::Plus;
            ParamUse spelling = use_weyl ? ParamUse::Hbar : ParamUse::Lambda;
            const char* which = use_weyl ? "Weyl" : "Moyal";
            WeylElement f = parse_in_convention(expr1, cfg.dim, spelling, which);
            WeylElement g = parse_in_convention(expr2, cfg.dim, spelling, which);
            WeylElement result = star(scfg, f, g);
            if (conv_to_hbar && !use_weyl) {
                result = lambda_to_hbar(result);
                spelling = ParamUse::Hbar;
            } else if (conv_to_lambda && use_weyl) {
                result = hbar_to_lambda(result);
                spelling = ParamUse::Lambda;
            }
            emit_element(cfg, result, spelling);
            return kExitOk;
        }
        if (gamma_cmd->parsed()) return run_gamma(cfg);
        if (lift_cmd->parsed()) {
            ConnectionData conn = load_connection(cfg.connection_path);
            WeylElement a00 = parse_in_convention(lift_expr, conn.dim(), ParamUse::Hbar, "Weyl");
            GammaSeries gamma = gamma_recursion(conn, cfg.order);
            FlatSection s = flat_lift(conn, gamma, a00, cfg.order);
            emit_element(cfg, s.value, ParamUse::Hbar);
            return kExitOk;
        }
        if (bstar_cmd->parsed()) {
            ConnectionData conn = load_connection(cfg.connection_path);
            WeylElement f = parse_in_convention(b1, conn.dim(), ParamUse::Hbar, "Weyl");
            WeylElement g = parse_in_convention(b2, conn.dim(), ParamUse::Hbar, "Weyl");
            GammaSeries gamma = gamma_recursion(conn, cfg.order);
            emit_element(cfg, base_star(conn, gamma, f, g, cfg.order), ParamUse::Hbar);
            return kExitOk;
        }
        if (norm_cmd->parsed()) {
            IdealSpec ideal = load_ideal(cfg.ideal_path);
            WeylElement g = parse_in_convention(norm_expr, ideal.dim, ParamUse::Lambda, "Moyal");
            std::vector<Residual> rs = normalizer_residual(ideal, g);
            bool member = true;
            for (const auto& r : rs) member = member && r.is_zero;
            if (cfg.format == "json") {
                nlohmann::json doc;
                doc["schema_version"] = 1;
                doc["verdict"] = member ? "IN-NORMALIZER" : "NOT-IN-NORMALIZER";
                doc["residuals"] = nlohmann::json::array();
                for (const auto& r : rs) doc["residuals"].push_back(nf_str(r.value));
                std::cout << doc.dump(2) << "\n";
            } else {
                std::cout << (member ? "IN-NORMALIZER" : "NOT-IN-NORMALIZER") << "\n";
                for (std::size_t i = 0; i < rs.size(); ++i)
                    std::cout << "residual[" << i << "] = " << nf_str(rs[i].value) << "\n";
            }
            return member ? kExitOk : kExitVerificationFailure;
        }
        if (solve_cmd->parsed()) {
            IdealSpec ideal = load_ideal(cfg.ideal_path);
            AnsatzSpace ansatz = AnsatzSpace::monomials(ideal.dim, max_degree, lambda_cap);
            std::vector<WeylElement> basis = normalizer_solve(ideal, ansatz);
            if (cfg.format == "json") {
                nlohmann::json doc;
                doc["schema_version"] = 1;
                doc["basis"] = nlohmann::json::array();
                for (const auto& e : basis) doc["basis"].push_back(print_canonical(e, ParamUse::Lambda));
                std::cout << doc.dump(2) << "\n";
            } else {
                std::cout << "normalizer basis (" << basis.size() << " elements)\n";
                for (const auto& e : basis) std::cout << "  " << print_canonical(e, ParamUse::Lambda) << "\n";
            }
            return kExitOk;
        }
        if (scen_cmd->parsed()) {
            std::vector<ScenarioReport> reports;
            if (scen_name == "all") {
                for (const auto& n : scenario_names()) reports.push_back(run_scenario(n, cfg.seed));
            } else {
                reports.push_back(run_scenario(scen_name, cfg.seed));
            }
            bool all_ok = true;
            for (const auto& rep : reports) {
                all_ok = all_ok && rep.passed();
                std::cout << (cfg.format == "json" ? report_to_json(rep) : report_to_text(rep));
                if (cfg.format == "json") std::cout << "\n";
            }
            return all_ok ? kExitOk : kExitVerificationFailure;
        }
        if (app.get_subcommand("selftest")->parsed()) return run_selftest(cfg);
    } catch (const starq::ParseError& e) {
        std::cerr << "parse error at " << e.pos.line << ":" << e.pos.col << ": " << e.what()
                  << " (expected " << e.expected << ")\n";
        return kExitUsage;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "document error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return kExitVerificationFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
