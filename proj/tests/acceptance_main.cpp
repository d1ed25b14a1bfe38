// Acceptance suite: runs every acceptance criterion with exact arithmetic
// and prints one pass/fail line per criterion. argv[1] names the CLI binary
// used for the exit-code checks of criterion 14.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "starq/fedosov.hpp"
#include "starq/io.hpp"
#include "starq/normalizer.hpp"
#include "starq/printer.hpp"
#include "starq/random_gen.hpp"
#include "starq/scenarios.hpp"

using namespace starq;

namespace {

std::string g_cli;
std::vector<std::string> g_notes;

constexpr Var kAllVars[] = {Var{VarKind::X, 0},   Var{VarKind::X, 1},  Var{VarKind::P, 0},
                            Var{VarKind::P, 1},   Var{VarKind::Y, 0},  Var{VarKind::Y, 1},
                            Var{VarKind::Psi, 0}, Var{VarKind::Psi, 1}};
constexpr Var kBaseVars[] = {Var{VarKind::X, 0}, Var{VarKind::X, 1}, Var{VarKind::P, 0},
                             Var{VarKind::P, 1}};
constexpr Var kXVars[] = {Var{VarKind::X, 0}, Var{VarKind::X, 1}};
constexpr Var kX1P1[] = {Var{VarKind::X, 0}, Var{VarKind::P, 0}};
constexpr Var kX2P2[] = {Var{VarKind::X, 1}, Var{VarKind::P, 1}};
constexpr Var kP1Only[] = {Var{VarKind::P, 0}};

WeylElement xv(unsigned i) { return WeylElement::variable(2, Var{VarKind::X, i}); }
WeylElement pv(unsigned i) { return WeylElement::variable(2, Var{VarKind::P, i}); }
WeylElement yv(unsigned i) { return WeylElement::variable(2, Var{VarKind::Y, i}); }
WeylElement psiv(unsigned i) { return WeylElement::variable(2, Var{VarKind::Psi, i}); }
WeylElement lam(int k) { return WeylElement::parameter(2, k); }

WeylElement mstar(const WeylElement& a, const WeylElement& b) {
    return star(StarConfig::moyal(), a, b);
}

WeylElement i_over_hbar(const WeylElement& e) {
    return e.times_parameter(-1).scaled(Gaussian::unit_i());
}

ConnectionData conn_a() {  // Gamma^2_{11} = x2^2
    ConnectionData c(2);
    c.set_christoffel(1, 0, 0, xv(1) * xv(1));
    return c;
}

ConnectionData conn_b() {  // Gamma^2_{11} = x1 x2
    ConnectionData c(2);
    c.set_christoffel(1, 0, 0, xv(0) * xv(1));
    return c;
}

ConnectionData conn_x2() {  // Gamma^1_{11} = x2
    ConnectionData c(2);
    c.set_christoffel(0, 0, 0, xv(1));
    return c;
}

/// coeff * Sum R^d_{abc} y^a y^b p_d da00/dp_c.
WeylElement curvature_lift_term(const ConnectionData& conn, const WeylElement& a00,
                                const Gaussian& coeff) {
    CurvatureTensor R = curvature(conn);
    WeylElement out = WeylElement::zero(2);
    for (unsigned d = 0; d < 2; ++d)
        for (unsigned a = 0; a < 2; ++a)
            for (unsigned b = 0; b < 2; ++b)
                for (unsigned c = 0; c < 2; ++c) {
                    const WeylElement& e = R.entry(d, a, b, c);
                    if (e.is_zero()) continue;
                    WeylElement da = partial(a00, Var{VarKind::P, c});
                    if (da.is_zero()) continue;
                    out += (e * yv(a) * yv(b) * pv(d) * da).scaled(coeff);
                }
    return out;
}

struct Outcome {
    bool passed;
    std::string detail;
};

Outcome criterion1() {
    auto start = std::chrono::steady_clock::now();
    RandomGen rng(101);
    const StarConfig w = StarConfig::weyl(), m = StarConfig::moyal();
    for (int t = 0; t < 200; ++t) {
        WeylElement a = rng.poly(2, kAllVars, 4, 3, 0, 1, true);
        WeylElement b = rng.poly(2, kAllVars, 4, 3, 0, 1, true);
        WeylElement c = rng.poly(2, kAllVars, 4, 3, 0, 1, true);
        if (!(star(w, star(w, a, b), c) == star(w, a, star(w, b, c))))
            return {false, "WeylFiberwise associativity mismatch at triple " + std::to_string(t)};
        WeylElement f = rng.poly(2, kBaseVars, 4, 3, -1, 1);
        WeylElement g = rng.poly(2, kBaseVars, 4, 3, -1, 1);
        WeylElement h = rng.poly(2, kBaseVars, 4, 3, -1, 1);
        if (!(star(m, star(m, f, g), h) == star(m, f, star(m, g, h))))
            return {false, "MoyalBase associativity mismatch at triple " + std::to_string(t)};
    }
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    if (elapsed >= 30000) return {false, "exceeded 30 s: " + std::to_string(elapsed) + " ms"};
    return {true, "200 triples, both products, " + std::to_string(elapsed) + " ms"};
}

Outcome criterion2() {
    RandomGen rng(102);
    const Var even_vars[] = {Var{VarKind::X, 0}, Var{VarKind::X, 1}, Var{VarKind::P, 0},
                             Var{VarKind::P, 1}, Var{VarKind::Y, 0}, Var{VarKind::Y, 1}};
    for (int t = 0; t < 200; ++t) {
        WeylElement f = rng.poly(2, kBaseVars, 4, 3, -1, 1);
        WeylElement g = rng.poly(2, kBaseVars, 4, 3, -1, 1);
        if (!opposite_check(StarConfig::moyal(), f, g))
            return {false, "Moyal opposite symmetry failed at pair " + std::to_string(t)};
        WeylElement fw = rng.poly(2, even_vars, 4, 3, 0, 1, true);
        WeylElement gw = rng.poly(2, even_vars, 4, 3, 0, 1, true);
        if (!opposite_check(StarConfig::weyl(), fw, gw))
            return {false, "Weyl opposite symmetry failed at pair " + std::to_string(t)};
    }
    return {true, "200 even pairs, exact"};
}

Outcome criterion3() {
    RandomGen rng(103);
    WeylElement generator = pv(0) * psiv(0) + pv(1) * psiv(1);
    for (int t = 0; t < 100; ++t) {
        WeylElement a = rng.poly(2, kAllVars, 4, 4, 0, 1, true);
        if (!delta_op(delta_op(a)).is_zero()) return {false, "delta^2 != 0"};
        if (!delta_star_op(delta_star_op(a)).is_zero()) return {false, "delta*^2 != 0"};
        WeylElement bracket_form =
            i_over_hbar(commutator(StarConfig::weyl(), generator, a)).scaled(Gaussian(-1));
        if (!(delta_op(a) == bracket_form)) return {false, "delta bracket identity failed"};
        WeylElement deco = delta_op(delta_inv(a)) + delta_inv(delta_op(a)) + restrict_00(a);
        if (!(deco == a)) return {false, "decomposition identity failed"};
    }
    return {true, "100 random elements per identity, exact"};
}

Outcome criterion4() {
    ConnectionData conn = conn_x2();
    WeylElement r_hat = curvature_section(conn);
    RandomGen rng(104);
    for (int t = 0; t < 50; ++t) {
        WeylElement a = rng.poly(2, kAllVars, 3, 3, 0, 1, true);
        WeylElement lhs = nabla(conn, nabla(conn, a));
        WeylElement rhs = i_over_hbar(commutator(StarConfig::weyl(), r_hat, a));
        if (!(lhs == rhs))
            return {false, "nabla^2 != (i/hbar)[R, .] at element " + std::to_string(t)};
    }
    return {true, "Gamma^1_11 = x2 connection, 50 random elements, exact"};
}

Outcome criterion5() {
    int which = 0;
    for (const ConnectionData& conn : {conn_a(), conn_b()}) {
        ++which;
        GammaSeries gamma = gamma_recursion(conn, 6);
        if (!flatness_residual(conn, gamma).is_zero())
            return {false, "flatness residual nonzero at order 6 (connection " +
                               std::to_string(which) + ")"};

        CurvatureTensor R = curvature(conn);
        uint32_t ord = gamma.value.truncation_order();
        WeylElement deg2 = WeylElement::zero(2, ord), deg3 = WeylElement::zero(2, ord);
        for (unsigned d = 0; d < 2; ++d)
            for (unsigned a = 0; a < 2; ++a)
                for (unsigned b = 0; b < 2; ++b)
                    for (unsigned c = 0; c < 2; ++c) {
                        const WeylElement& e = R.entry(d, a, b, c);
                        if (e.is_zero()) continue;
                        deg2 += (e * yv(a) * yv(b) * psiv(c) * pv(d))
                                    .scaled(Gaussian(Rational(1, 3)))
                                    .truncated(ord);
                        for (unsigned l = 0; l < 2; ++l) {
                            WeylElement de = partial(e, Var{VarKind::X, l});
                            if (de.is_zero()) continue;
                            deg3 += (de * yv(l) * yv(a) * yv(b) * psiv(c) * pv(d))
                                        .scaled(Gaussian(Rational(1, 12)))
                                        .truncated(ord);
                        }
                    }
        if (!(gamma.value.y_degree_part(2) == deg2))
            return {false, "degree-2 term differs from (1/3) R yy psi p"};
        if (!(gamma.value.y_degree_part(3) == deg3))
            return {false, "degree-3 term differs from (1/12) dR yyy psi p"};
        if (deg3.is_zero()) return {false, "degree-3 check was vacuous"};
    }
    return {true, "two connections, order 6: residual identically 0, displayed terms exact"};
}

Outcome criterion6() {
    bool residual_ok = true, literal_ok = true, doubled_ok = true;
    RandomGen rng(106);
    for (const ConnectionData& conn : {conn_a(), conn_b()}) {
        GammaSeries gamma = gamma_recursion(conn, 6);
        for (int t = 0; t < 5; ++t) {
            WeylElement a00 = rng.poly(2, kBaseVars, 3, 3);
            FlatSection s = flat_lift(conn, gamma, a00, 6);
            if (!d_residual(conn, gamma, s.value, 6).is_zero()) residual_ok = false;
            if (!(restrict_00(s.value) == a00.truncated(7))) residual_ok = false;
        }

        // curvature part of the y^2 block, isolated by replaying the
        // recursion with gamma suppressed
        GammaSeries no_gamma{WeylElement::zero(2, 7), 6};
        for (const WeylElement& a00 : {pv(1), pv(0) * pv(1), xv(0) * pv(1) * pv(1)}) {
            WeylElement with = flat_lift(conn, gamma, a00, 6).value.y_degree_part(2);
            WeylElement without = flat_lift(conn, no_gamma, a00, 6).value.y_degree_part(2);
            WeylElement correction = with - without;
            WeylElement displayed =
                curvature_lift_term(conn, a00, Gaussian(Rational(-1, 12))).truncated(7);
            WeylElement recursion_forced =
                curvature_lift_term(conn, a00, Gaussian(Rational(-1, 6))).truncated(7);
            if (displayed.is_zero()) continue;
            if (!(correction == displayed)) literal_ok = false;
            if (!(correction == recursion_forced)) doubled_ok = false;
        }
    }

    if (residual_ok && literal_ok) return {true, "D-residual 0 and displayed term exact"};
    std::string detail;
    if (residual_ok)
        detail += "D-residual identically 0 at order 6 [ok]; ";
    else
        detail += "D-residual nonzero [failed]; ";
    if (!literal_ok) {
        detail += "displayed -(1/12) R yy p da00/dp term [failed]";
        if (doubled_ok)
            detail +=
                "; the recursion-forced coefficient is -(1/6), exactly 2x the display [verified]";
    }
    g_notes.push_back(
        "criterion 6: the flat-section recursion with the symmetric fiberwise product forces the "
        "curvature correction -(1/6) R^d_abc y^a y^b p_d da00/dp_c at y-degree 2; the displayed "
        "-(1/12) coefficient is incompatible with a vanishing D-residual because the first-order "
        "super-bracket term doubles (both bidifferential directions contribute, exactly as in the "
        "bracket identity for delta). The literal displayed-term sub-check is therefore reported as a "
        "failure rather than weakened; the 2x relation to the display is verified exactly.");
    return {false, detail};
}

Outcome criterion7() {
    ConnectionData curved = conn_x2();
    GammaSeries gamma = gamma_recursion(curved, 6);
    RandomGen rng(107);
    for (int t = 0; t < 50; ++t) {
        WeylElement f = rng.poly(2, kXVars, 3, 3);
        WeylElement g = rng.poly(2, kXVars, 3, 3);
        if (!(base_star(curved, gamma, f, g, 6) == (f * g).truncated(6)))
            return {false, "curved base star differs from the pointwise product on x-only inputs"};
    }
    ConnectionData flat = ConnectionData::flat(2);
    GammaSeries flat_gamma = gamma_recursion(flat, 6);
    for (int t = 0; t < 50; ++t) {
        WeylElement f = rng.poly(2, kBaseVars, 3, 3);
        WeylElement g = rng.poly(2, kBaseVars, 3, 3);
        WeylElement lhs = base_star(flat, flat_gamma, f, g, 6);
        WeylElement rhs = lambda_to_hbar(mstar(f, g)).truncated(6);
        if (!(lhs == rhs)) return {false, "flat base star differs from Moyal under the bridge"};
    }
    return {true,
            "50 x-only pairs pointwise; 50 flat pairs equal Moyal under lambda = -(i/2) hbar"};
}

Outcome criterion8() {
    IdealSpec cross(2, {xv(0) * xv(1)});
    AnsatzSpace ansatz = AnsatzSpace::monomials(2, 3, 1);
    std::vector<WeylElement> sols = normalizer_solve(cross, ansatz);
    if (sols.empty()) return {false, "empty solution space"};

    // inclusion 1: every solution decomposes as constants + a*x1 + b*x2 + ideal
    for (const auto& e : sols) {
        NormalForm nf = to_normal_form(e);
        for (const auto& [xm, coeff] : nf.components()) {
            bool has_x1 = xm.exps[0] > 0, has_x2 = xm.exps[1] > 0;
            if (has_x1 && has_x2) continue;
            for (const auto& [k, c] : coeff.terms()) {
                if (!has_x1 && !has_x2 && k.degree.total_p() > 0)
                    return {false, "solution with a non-constant pure-p part"};
                if (has_x1 && k.degree.p_exp(1) > 0)
                    return {false, "solution x1-factor coefficient depends on p2"};
                if (has_x2 && k.degree.p_exp(0) > 0)
                    return {false, "solution x2-factor coefficient depends on p1"};
            }
        }
    }

    // inclusion 2: the family's slice elements all lie in the span
    std::vector<WeylElement> expected;
    for (int s = -1; s <= 1; ++s) expected.push_back(lam(s));
    auto push_family = [&](unsigned x_slot, unsigned p_slot, const WeylElement& right) {
        for (unsigned a = 0; a <= 2; ++a)
            for (unsigned b = 0; a + b <= 2; ++b)
                for (int s = -1; s <= 1; ++s) {
                    Multidegree md(2);
                    md.set_x_exp(x_slot, a);
                    md.set_p_exp(p_slot, b);
                    WeylElement prod = mstar(WeylElement::monomial(2, md, Gaussian(1), s), right);
                    bool inside = true;
                    for (const auto& [k, c] : prod.terms())
                        if (k.hbar_power > 1 || k.hbar_power < -1) inside = false;
                    if (inside) expected.push_back(prod);
                }
    };
    push_family(0, 0, xv(0));
    push_family(1, 1, xv(1));
    for (const auto& e : ideal_slice(cross, ansatz)) expected.push_back(e);
    std::vector<WeylElement> joint = sols;
    joint.insert(joint.end(), expected.begin(), expected.end());
    if (!same_span(joint, sols)) return {false, "family slice escapes the solution span"};

    // product law on 50 random instances
    RandomGen rng(108);
    for (int t = 0; t < 50; ++t) {
        WeylElement a = rng.poly(2, kX1P1, 2, 2), at = rng.poly(2, kX1P1, 2, 2);
        WeylElement b = rng.poly(2, kX2P2, 2, 2), bt = rng.poly(2, kX2P2, 2, 2);
        WeylElement h = mstar(a, xv(0)) + mstar(b, xv(1));
        WeylElement ht = mstar(at, xv(0)) + mstar(bt, xv(1));
        Residual lhs = quotient_multiply(cross, h, ht);
        WeylElement law = mstar(mstar(mstar(a, xv(0)), at), xv(0)) +
                          mstar(mstar(mstar(b, xv(1)), bt), xv(1));
        Residual rhs = reduce_mod_ideal(to_normal_form(law), cross);
        if (!(lhs.value == rhs.value))
            return {false, "product law mismatch at instance " + std::to_string(t)};
    }
    return {true, "span equality (both inclusions) and 50 product-law instances"};
}

Outcome criterion9() {
    IdealSpec dline(2, {xv(1) * xv(1)});
    RandomGen rng(109);
    for (int t = 0; t < 50; ++t) {
        auto fam = [&]() {
            WeylElement a = rng.poly(2, kX1P1, 2, 2), b = rng.poly(2, kX1P1, 2, 2);
            WeylElement c = rng.poly(2, kX1P1, 2, 2), d = rng.poly(2, kX1P1, 2, 2);
            WeylElement p2 = pv(1);
            WeylElement tail =
                c + d * p2 - b.times_parameter(-1).scaled(Gaussian(Rational(1, 2))) * p2 * p2;
            return a + b * p2 + mstar(tail, xv(1));
        };
        WeylElement h = fam(), ht = fam();
        if (!in_normalizer(dline, h))
            return {false, "family member rejected at " + std::to_string(t)};
        MatrixRep lhs = matrix_star(matrix_rep(h), matrix_rep(ht));
        Residual prod = quotient_multiply(dline, h, ht);
        MatrixRep rhs = matrix_rep(prod.value.reassemble());
        if (!(lhs == rhs)) return {false, "matrix homomorphism mismatch at " + std::to_string(t)};
    }
    return {true, "50 random (a,b,c,d) instances: membership and matrix homomorphism exact"};
}

Outcome criterion10() {
    IdealSpec ix1(2, {xv(0)});
    // scalar right-reduction closed form, exhaustive monomials through degree 5
    for (unsigned n = 0; n <= 5; ++n)
        for (unsigned a = 0; a <= 5; ++a)
            for (unsigned bdeg = 0; bdeg <= 5; ++bdeg) {
                Multidegree ma(2);
                ma.set_x_exp(0, n);
                ma.set_p_exp(0, a);
                WeylElement A = WeylElement::monomial(2, ma, Gaussian(1), 0);
                Multidegree mb(2);
                mb.set_p_exp(0, bdeg);
                WeylElement B = WeylElement::monomial(2, mb, Gaussian(1), 0);
                WeylElement closed = scalar_right_reduce(A, B, 0);
                Residual red = reduce_mod_ideal(to_normal_form(mstar(A, B)), ix1);
                if (!(closed == red.value.component(XMonomial(2))))
                    return {false, "right-reduction closed form mismatch at monomials"};
            }

    // final matrix multiplication law against the quotient pipeline
    RandomGen rng(110);
    auto reduce_entry = [&](const WeylElement& e) {
        return reduce_mod_ideal(to_normal_form(e), ix1).value.component(XMonomial(2));
    };
    for (int t = 0; t < 50; ++t) {
        WeylElement k1 = WeylElement::constant(2, rng.scalar());
        WeylElement k2 = WeylElement::constant(2, rng.scalar());
        WeylElement c1 = rng.poly(2, kP1Only, 3, 2), c2 = rng.poly(2, kP1Only, 3, 2);
        WeylElement d1 = rng.poly(2, kX1P1, 3, 3);
        WeylElement closed_ll = k2 * c1 + scalar_right_reduce(d1, c2, 0);
        WeylElement oracle_ll = reduce_entry(mstar(c1, k2) + mstar(d1, c2));
        if (!(closed_ll == oracle_ll))
            return {false, "matrix law mismatch at " + std::to_string(t)};
        if (!(k1 * k2 == reduce_entry(mstar(k1, k2)))) return {false, "scalar slot mismatch"};
    }
    return {true, "closed right-reduction exhaustive to degree 5; 50 matrix-law instances against the oracle"};
}

Outcome criterion11() {
    ScenarioReport rep = run_fat_circle();
    for (const auto& c : rep.checks)
        if (!c.passed) return {false, c.description + " [" + c.witness + "]"};
    return {true, "harmonics of degree <= 4 solvable, operator condition holds, strict containment"};
}

Outcome criterion12() {
    RandomGen rng(112);
    const Var p_vars[] = {Var{VarKind::P, 0}, Var{VarKind::P, 1}};
    auto factorial_q = [](unsigned k) {
        Rational r(1);
        for (unsigned i = 2; i <= k; ++i) r *= static_cast<long>(i);
        return r;
    };
    for (unsigned M = 0; M <= 4; ++M) {
        for (unsigned N = 0; N <= 4; ++N) {
            for (int rep = 0; rep < 3; ++rep) {
                WeylElement h = rng.poly(2, p_vars, 4, 3);
                Multidegree mono(2);
                mono.set_x_exp(0, M);
                mono.set_x_exp(1, N);
                WeylElement xmono = WeylElement::monomial(2, mono, Gaussian(1), 0);
                WeylElement rhs = mstar(h, xmono);
                for (unsigned n = 1; n <= M + N; ++n) {
                    for (unsigned k = 0; k <= std::min(N, n); ++k) {
                        if (M + k < n) continue;
                        unsigned x1e = M - n + k, x2e = N - k;
                        WeylElement dh = h;
                        for (unsigned t = 0; t < n - k; ++t) dh = partial(dh, Var{VarKind::P, 0});
                        for (unsigned t = 0; t < k; ++t) dh = partial(dh, Var{VarKind::P, 1});
                        if (dh.is_zero()) continue;
                        Rational coeff = factorial_q(M) * factorial_q(N) /
                                         (factorial_q(n - k) * factorial_q(k) * factorial_q(x1e) *
                                          factorial_q(x2e));
                        Gaussian weight(coeff);
                        if (n % 2 == 1) weight = -weight;  // (-lambda)^n
                        Multidegree mrest(2);
                        mrest.set_x_exp(0, x1e);
                        mrest.set_x_exp(1, x2e);
                        rhs -= (dh * WeylElement::monomial(2, mrest, Gaussian(1), 0))
                                   .scaled(weight)
                                   .times_parameter(static_cast<int>(n));
                    }
                }
                if (!(rhs == h * xmono))
                    return {false, "closed correction formula mismatch at M=" + std::to_string(M) +
                                       " N=" + std::to_string(N)};
            }
        }
    }
    return {true, "all M, N <= 4 with random h of degree <= 4, exact"};
}

Outcome criterion13() {
    IdealSpec plain(2, {xv(0) * xv(1)});
    IdealSpec redundant(2, {xv(0) * xv(1) + xv(0) * xv(0) * xv(1), xv(0) * xv(0) * xv(1)});
    AnsatzSpace ansatz = AnsatzSpace::monomials(2, 3, 1);
    std::vector<WeylElement> s1 = normalizer_solve(plain, ansatz);
    std::vector<WeylElement> s2 = normalizer_solve(redundant, ansatz);
    if (!same_span(s1, s2)) return {false, "solve spans differ between presentations"};
    return {true, "two generating sets of the cross ideal give identical solve spans"};
}

int run_cli(const std::string& args, std::string* output = nullptr) {
    std::filesystem::path out = std::filesystem::temp_directory_path() / "starq_accept_out.txt";
    std::string cmd = g_cli + " " + args + " > " + out.string() + " 2>&1";
    int rc = std::system(cmd.c_str());
    if (output) {
        std::ifstream in(out);
        std::ostringstream ss;
        ss << in.rdbuf();
        *output = ss.str();
    }
    return WEXITSTATUS(rc);
}

Outcome criterion14() {
    RandomGen rng(114);
    for (int t = 0; t < 500; ++t) {
        WeylElement e = rng.poly(2, kAllVars, 4, 4, -2, 2, true);
        if (!(parse_element(print_canonical(e, ParamUse::Lambda), 2).element == e))
            return {false, "round trip mismatch at case " + std::to_string(t)};
    }
    if (g_cli.empty()) return {false, "CLI binary path not provided (argv[1])"};

    std::filesystem::path ideal_path =
        std::filesystem::temp_directory_path() / "starq_accept_cross.json";
    {
        std::ofstream f(ideal_path);
        f << R"({"dim": 2, "generators": ["x1*x2"]})";
    }
    struct Case {
        std::string args;
        int expect;
    };
    const std::vector<Case> cases = {
        {"star --moyal \"x1\" \"p1\"", 0},
        {"scenario cross", 0},
        {"normalizer --ideal " + ideal_path.string() + " \"x1\"", 0},
        {"normalizer --ideal " + ideal_path.string() + " \"p1\"", 1},
        {"star --moyal \"psi1^2\" \"x1\"", 2},
        {"star --moyal \"x1 +\" \"p1\"", 2},
        {"star --moyal \"hbar\" \"x1\"", 2},
        {"normalizer --ideal /nonexistent.json \"x1\"", 2},
        {"bogus_subcommand", 2},
        {"scenario bogus", 2},
    };
    for (const auto& c : cases) {
        int rc = run_cli(c.args);
        if (rc != c.expect)
            return {false, "exit " + std::to_string(rc) + " != " + std::to_string(c.expect) +
                               " for: " + c.args};
    }
    std::string out;
    run_cli("star --moyal \"x1\" \"p1\"", &out);
    if (out.find("x1*p1 + lambda") == std::string::npos)
        return {false, "unexpected star output: " + out};
    return {true, "500 round trips exact; all documented CLI error paths exit correctly"};
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) g_cli = argv[1];

    struct Entry {
        int number;
        const char* title;
        std::function<Outcome()> fn;
    };
    const std::vector<Entry> entries = {
        {1, "star-product associativity, 200 random triples, both products", criterion1},
        {2, "opposite symmetry f*g = g*(-param)f on 200 random even pairs", criterion2},
        {3, "operator lemmas: delta^2, delta*^2, bracket identity, decomposition", criterion3},
        {4, "curvature bracket nabla^2 = (i/hbar)[R, .]", criterion4},
        {5, "gamma recursion: residual 0 at order 6 and displayed leading terms", criterion5},
        {6, "flat lift: D-residual 0 at order 6 and displayed curvature term", criterion6},
        {7, "base product: pointwise on x-only inputs; flat case equals Moyal", criterion7},
        {8, "cross: degree-3 normalizer span and product law", criterion8},
        {9, "double line: 4-parameter family and matrix homomorphism", criterion9},
        {10, "double point: closed right-reduction and matrix multiplication law", criterion10},
        {11, "fat circle: harmonic family, operator condition, nontriviality", criterion11},
        {12, "decomposition lemma closed correction formula", criterion12},
        {13, "generator independence of the normalizer solve", criterion13},
        {14, "parser round trips and CLI exit codes", criterion14},
    };

    int failed = 0;
    for (const auto& e : entries) {
        Outcome r{};
        try {
            r = e.fn();
        } catch (const std::exception& ex) {
            r = {false, std::string("exception: ") + ex.what()};
        }
        std::cout << (r.passed ? "PASS" : "FAIL") << " criterion " << e.number << ": " << e.title;
        if (!r.detail.empty()) std::cout << " -- " << r.detail;
        std::cout << "\n" << std::flush;
        if (!r.passed) ++failed;
    }
    for (const auto& n : g_notes) std::cout << "note: " << n << "\n";
    std::cout << (failed == 0 ? "acceptance: all criteria passed"
                              : "acceptance: " + std::to_string(failed) + " criterion(s) failed")
              << "\n";
    return failed == 0 ? 0 : 1;
}
