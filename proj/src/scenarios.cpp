#include "starq/scenarios.hpp"

#include <stdexcept>

#include "starq/printer.hpp"
#include "starq/random_gen.hpp"

namespace starq {

namespace {

constexpr unsigned kDim = 2;

WeylElement xvar(unsigned i) { return WeylElement::variable(kDim, Var{VarKind::X, i}); }
WeylElement pvar(unsigned i) { return WeylElement::variable(kDim, Var{VarKind::P, i}); }
WeylElement unit() { return WeylElement::constant(kDim, Gaussian(1)); }
WeylElement lam(int k) { return WeylElement::parameter(kDim, k); }

WeylElement mstar(const WeylElement& a, const WeylElement& b) {
    return star(StarConfig::moyal(), a, b);
}

std::string w(const WeylElement& e) { return print_canonical(e, ParamUse::Lambda); }

void add_check(ScenarioReport& rep, const std::string& desc, bool ok, const std::string& witness) {
    rep.checks.push_back(CheckResult{desc, ok, witness});
}

/// Splits a base element by its p2-exponent, stripping that factor.
std::map<unsigned, WeylElement> split_by_p2(const WeylElement& e) {
    std::map<unsigned, WeylElement> parts;
    for (const auto& [k, c] : e.terms()) {
        unsigned d = k.degree.p_exp(1);
        Multidegree md = k.degree;
        md.set_p_exp(1, 0);
        auto it = parts.find(d);
        if (it == parts.end()) it = parts.emplace(d, WeylElement::zero(e.dim())).first;
        it->second.add_term(md, c, k.hbar_power);
    }
    return parts;
}

WeylElement laplacian_p(const WeylElement& e) {
    WeylElement r = WeylElement::zero(e.dim());
    for (unsigned i = 0; i < e.dim(); ++i)
        r += partial(partial(e, Var{VarKind::P, i}), Var{VarKind::P, i});
    return r;
}

std::vector<WeylElement> lambda_constants(int cap) {
    std::vector<WeylElement> out;
    for (int s = -cap; s <= cap; ++s) out.push_back(lam(s));
    return out;
}

}  // namespace

MatrixRep matrix_star(const MatrixRep& a, const MatrixRep& b) {
    MatrixRep r{{WeylElement::zero(kDim), WeylElement::zero(kDim), WeylElement::zero(kDim),
                 WeylElement::zero(kDim)}};
    for (unsigned i = 0; i < 2; ++i)
        for (unsigned j = 0; j < 2; ++j) {
            WeylElement sum = WeylElement::zero(kDim);
            for (unsigned k = 0; k < 2; ++k) sum += mstar(a.at(i, k), b.at(k, j));
            r.at(i, j) = sum;
        }
    return r;
}

WeylElement DoubleLineElement::assemble() const {
    WeylElement p2 = pvar(1);
    WeylElement tail = c + d * p2 - b.times_parameter(-1).scaled(Gaussian(Rational(1, 2))) * p2 * p2;
    return a + b * p2 + mstar(tail, xvar(1));
}

DoubleLineElement double_line_components(const WeylElement& h) {
    IdealSpec ideal(kDim, {mstar(xvar(1), xvar(1))});
    Residual red = reduce_mod_ideal(to_normal_form(h), ideal);

    WeylElement a = WeylElement::zero(kDim), b = a, c = a, d = a;
    WeylElement qsum = a;
    for (const auto& [xm, coeff] : red.value.components()) {
        if (xm.exps[1] > 1) throw std::domain_error("double_line_components: x2 degree above 1");
        XMonomial x1part(kDim);
        x1part.exps[0] = xm.exps[0];
        WeylElement right = x1part.element();
        auto parts = split_by_p2(coeff);
        for (const auto& [deg, piece] : parts) {
            if (xm.exps[1] == 0) {
                if (deg == 0)
                    a += mstar(piece, right);
                else if (deg == 1)
                    b += mstar(piece, right);
                else
                    throw std::domain_error("double_line_components: h outside the family (p2 degree)");
            } else {
                if (deg == 0)
                    c += mstar(piece, right);
                else if (deg == 1)
                    d += mstar(piece, right);
                else if (deg == 2)
                    qsum += mstar(piece, right);
                else
                    throw std::domain_error("double_line_components: h outside the family (p2 degree)");
            }
        }
    }
    // the p2^2 block must be the forced -b/(2 lambda) coupling
    if (!(qsum.times_parameter(1).scaled(Gaussian(-2)) == b))
        throw std::domain_error("double_line_components: h outside the family (lambda coupling)");
    return DoubleLineElement{a, b, c, d};
}

MatrixRep matrix_rep(const WeylElement& h) {
    DoubleLineElement f = double_line_components(h);
    MatrixRep m{{f.a + f.d.times_parameter(1).scaled(Gaussian(2)), f.b,
                 f.c.times_parameter(1).scaled(Gaussian(2)), f.a}};
    return m;
}

ScenarioReport run_cross(uint64_t seed) {
    ScenarioReport rep;
    rep.name = "cross";
    rep.seed = seed;
    RandomGen rng(seed);

    IdealSpec ideal(kDim, {xvar(0) * xvar(1)});
    const Var a_vars[] = {Var{VarKind::X, 0}, Var{VarKind::P, 0}};
    const Var b_vars[] = {Var{VarKind::X, 1}, Var{VarKind::P, 1}};

    {
        bool ok = true;
        std::string witness;
        for (int t = 0; t < 10 && ok; ++t) {
            WeylElement a = rng.poly(kDim, a_vars, 3, 3, -1, 1);
            WeylElement b = rng.poly(kDim, b_vars, 3, 3, -1, 1);
            WeylElement h = mstar(a, xvar(0)) + mstar(b, xvar(1)) +
                            lam(static_cast<int>(rng.int_in(-1, 1))).scaled(rng.scalar());
            if (!in_normalizer(ideal, h)) {
                ok = false;
                witness = w(h);
            }
        }
        add_check(rep, "family h0(const) + a(x1,p1)*x1 + b(x2,p2)*x2 lies in the normalizer", ok,
                  witness);
    }

    {
        AnsatzSpace pure_p = AnsatzSpace::monomials_capped(kDim, 0, 4, 1);
        std::vector<WeylElement> sols = normalizer_solve(ideal, pure_p);
        bool ok = same_span(sols, lambda_constants(1));
        add_check(rep, "pure-p normalizer solutions in the polynomial ansatz are the constants", ok,
                  "solution count " + std::to_string(sols.size()));
    }

    {
        // h0 = p1 p2 is obstructed; record the recomputed free term against
        // the intermediate display quoted in the literature.
        WeylElement h0 = pvar(0) * pvar(1);
        std::vector<Residual> res = normalizer_residual(ideal, h0);
        bool nonzero = !res.front().is_zero;
        WeylElement free_term = res.front().value.component(XMonomial(kDim));
        bool free_matches = free_term == lam(2).scaled(Gaussian(4));
        add_check(rep, "mixed h0 = p1*p2 fails membership with a free-term obstruction",
                  nonzero && free_matches, w(free_term));
        rep.discrepancies.push_back(
            "free term of the reduced residual of [x1*x2, h0] is 4*lambda^2*d2h0/dp1dp2 (witness " +
            w(free_term) + " for h0 = p1*p2); the intermediate display quoted in the literature says "
            "2*lambda*d2h0/dp1dp2. Final solution family unaffected.");
    }

    {
        bool ok = true;
        std::string witness;
        for (int t = 0; t < 10 && ok; ++t) {
            WeylElement a = rng.poly(kDim, a_vars, 2, 2);
            WeylElement b = rng.poly(kDim, b_vars, 2, 2);
            WeylElement at = rng.poly(kDim, a_vars, 2, 2);
            WeylElement bt = rng.poly(kDim, b_vars, 2, 2);
            WeylElement h = mstar(a, xvar(0)) + mstar(b, xvar(1));
            WeylElement ht = mstar(at, xvar(0)) + mstar(bt, xvar(1));
            Residual lhs = quotient_multiply(ideal, h, ht);
            WeylElement law = mstar(mstar(mstar(a, xvar(0)), at), xvar(0)) +
                              mstar(mstar(mstar(b, xvar(1)), bt), xvar(1));
            Residual rhs = reduce_mod_ideal(to_normal_form(law), ideal);
            if (!(lhs.value == rhs.value)) {
                ok = false;
                witness = w(lhs.value.reassemble()) + " vs " + w(rhs.value.reassemble());
            }
        }
        add_check(rep, "product law h*h' = (a*x1*a', b*x2*b') matches the quotient pipeline", ok,
                  witness);
    }

    {
        WeylElement h = mstar(unit(), xvar(0));
        Residual prod = quotient_multiply(ideal, h, h);
        WeylElement expect = xvar(0) * xvar(0);
        bool ok = prod.value.reassemble() == expect;
        add_check(rep, "a = a' = 1 gives the class of x1*x1 = x1^2", ok, w(prod.value.reassemble()));
    }

    return rep;
}

ScenarioReport run_double_line(uint64_t seed) {
    ScenarioReport rep;
    rep.name = "double_line";
    rep.seed = seed;
    RandomGen rng(seed);

    IdealSpec ideal(kDim, {mstar(xvar(1), xvar(1))});
    const Var base_vars[] = {Var{VarKind::X, 0}, Var{VarKind::P, 0}};

    auto random_member = [&](unsigned deg, unsigned terms) {
        DoubleLineElement f{rng.poly(kDim, base_vars, deg, terms),
                            rng.poly(kDim, base_vars, deg, terms),
                            rng.poly(kDim, base_vars, deg, terms),
                            rng.poly(kDim, base_vars, deg, terms)};
        return f;
    };

    {
        bool ok = true;
        std::string witness;
        for (int t = 0; t < 50 && ok; ++t) {
            WeylElement h = random_member(2, 2).assemble();
            if (!in_normalizer(ideal, h)) {
                ok = false;
                witness = w(h);
            }
        }
        add_check(rep, "4-parameter family a + b*p2 + (c + d*p2 - b/(2 lambda)*p2^2)*x2 is in the normalizer",
                  ok, witness);
    }

    {
        bool ok = true;
        std::string witness;
        for (int t = 0; t < 50 && ok; ++t) {
            WeylElement h = random_member(2, 2).assemble();
            WeylElement ht = random_member(2, 2).assemble();
            try {
                MatrixRep lhs = matrix_star(matrix_rep(h), matrix_rep(ht));
                Residual prod = quotient_multiply(ideal, h, ht);
                MatrixRep rhs = matrix_rep(prod.value.reassemble());
                if (!(lhs == rhs)) {
                    ok = false;
                    witness = "entry mismatch: " + w(lhs.at(0, 0)) + " vs " + w(rhs.at(0, 0));
                }
            } catch (const std::domain_error& e) {
                ok = false;
                witness = e.what();
            }
        }
        add_check(rep, "phi(h * h') = phi(h) * phi(h') on 50 random instances", ok, witness);
    }

    {
        DoubleLineElement p2m{WeylElement::zero(kDim), unit(), WeylElement::zero(kDim),
                              WeylElement::zero(kDim)};
        MatrixRep m = matrix_rep(p2m.assemble());
        MatrixRep expect{{WeylElement::zero(kDim), unit(), WeylElement::zero(kDim),
                          WeylElement::zero(kDim)}};
        add_check(rep, "phi(p2) = ((0,1),(0,0))", m == expect, w(m.at(0, 1)));
    }

    {
        DoubleLineElement x2m{WeylElement::zero(kDim), WeylElement::zero(kDim), unit(),
                              WeylElement::zero(kDim)};
        MatrixRep m = matrix_rep(x2m.assemble());
        MatrixRep expect{{WeylElement::zero(kDim), WeylElement::zero(kDim),
                          lam(1).scaled(Gaussian(2)), WeylElement::zero(kDim)}};
        add_check(rep, "phi(x2) = ((0,0),(2 lambda,0))", m == expect, w(m.at(1, 0)));
    }

    {
        DoubleLineElement p2m{WeylElement::zero(kDim), unit(), WeylElement::zero(kDim),
                              WeylElement::zero(kDim)};
        DoubleLineElement x2m{WeylElement::zero(kDim), WeylElement::zero(kDim), unit(),
                              WeylElement::zero(kDim)};
        MatrixRep lhs = matrix_star(matrix_rep(p2m.assemble()), matrix_rep(x2m.assemble()));
        Residual prod = quotient_multiply(ideal, p2m.assemble(), x2m.assemble());
        MatrixRep rhs = matrix_rep(prod.value.reassemble());
        MatrixRep expect{{lam(1).scaled(Gaussian(2)), WeylElement::zero(kDim),
                          WeylElement::zero(kDim), WeylElement::zero(kDim)}};
        add_check(rep, "phi(p2) * phi(x2) = ((2 lambda,0),(0,0)) and agrees with the quotient oracle",
                  lhs == expect && rhs == expect, w(lhs.at(0, 0)));
    }

    return rep;
}

ScenarioReport run_double_point(uint64_t seed) {
    ScenarioReport rep;
    rep.name = "double_point";
    rep.seed = seed;
    RandomGen rng(seed);

    IdealSpec ix1(kDim, {xvar(0)});
    const Var base_vars[] = {Var{VarKind::X, 0}, Var{VarKind::P, 0}};
    const Var p1_only[] = {Var{VarKind::P, 0}};

    {
        // the upper-right slot admits no quotient: x1 * b = 0 must hold exactly
        AnsatzSpace ans = AnsatzSpace::monomials_capped(kDim, 4, 4, 1);
        std::vector<WeylElement> filtered;
        for (const auto& e : ans.basis) {
            bool active = true;
            for (const auto& [k, c] : e.terms())
                if (k.degree.x_exp(1) > 0 || k.degree.p_exp(1) > 0) active = false;
            if (active) filtered.push_back(e);
        }
        std::map<TermKey, std::size_t> row_of;
        std::vector<WeylElement> images;
        for (const auto& e : filtered) {
            images.push_back(mstar(xvar(0), e));
            for (const auto& [k, c] : images.back().terms()) row_of.emplace(k, 0);
        }
        std::size_t idx = 0;
        for (auto& [k, r] : row_of) r = idx++;
        Matrix m(row_of.size(), filtered.size());
        for (std::size_t j = 0; j < filtered.size(); ++j)
            for (const auto& [k, c] : images[j].terms()) m.at(row_of.at(k), j) = c;
        bool ok = null_space(m).empty();
        add_check(rep, "upper-right condition x1 * b = 0 forces b = 0 in the polynomial ansatz", ok,
                  "ansatz size " + std::to_string(filtered.size()));
    }

    {
        // scalar right-reduction on the diagonal: x1 * a0(p1) reduces to 2 lambda a0'
        bool ok = true;
        std::string witness;
        for (int t = 0; t < 20 && ok; ++t) {
            WeylElement a0 = rng.poly(kDim, p1_only, 4, 3);
            WeylElement closed = scalar_right_reduce(xvar(0), a0, 0);
            WeylElement expect = partial(a0, Var{VarKind::P, 0}).times_parameter(1).scaled(Gaussian(2));
            Residual red = reduce_mod_ideal(to_normal_form(mstar(xvar(0), a0)), ix1);
            WeylElement oracle = red.value.component(XMonomial(kDim));
            if (!(closed == expect && closed == oracle)) {
                ok = false;
                witness = w(closed) + " vs " + w(oracle);
            }
        }
        add_check(rep, "x1 * a0(p1) = 2 lambda a0' mod the ideal image, so the scalar slot is constant",
                  ok, witness);

        // and the solver only keeps constants for the scalar slot
        std::vector<WeylElement> p_basis;
        for (unsigned d = 0; d <= 5; ++d) {
            Multidegree md(kDim);
            md.set_p_exp(0, d);
            for (int s = -1; s <= 1; ++s)
                p_basis.push_back(WeylElement::monomial(kDim, md, Gaussian(1), s));
        }
        std::map<TermKey, std::size_t> row_of;
        std::vector<std::map<TermKey, Gaussian>> cols;
        for (const auto& e : p_basis) {
            Residual r = reduce_mod_ideal(to_normal_form(mstar(xvar(0), e)), ix1);
            std::map<TermKey, Gaussian> flat;
            for (const auto& [xm, coeff] : r.value.components())
                for (const auto& [k, c] : coeff.terms()) flat[k] = c;
            cols.push_back(std::move(flat));
            for (const auto& [k, c] : cols.back()) row_of.emplace(k, 0);
        }
        std::size_t idx = 0;
        for (auto& [k, r] : row_of) r = idx++;
        Matrix m(row_of.size(), p_basis.size());
        for (std::size_t j = 0; j < p_basis.size(); ++j)
            for (const auto& [k, c] : cols[j]) m.at(row_of.at(k), j) = c;
        std::vector<WeylElement> sols;
        for (const auto& v : null_space(m)) {
            WeylElement e = WeylElement::zero(kDim);
            for (std::size_t j = 0; j < p_basis.size(); ++j)
                if (!v[j].is_zero()) e += p_basis[j].scaled(v[j]);
            sols.push_back(e);
        }
        add_check(rep, "scalar-slot solutions are exactly the constants", same_span(sols, lambda_constants(1)),
                  "solution count " + std::to_string(sols.size()));
    }

    {
        // multiplication law against the entry-wise star + reduce oracle
        auto reduce_entry = [&](const WeylElement& e) {
            return reduce_mod_ideal(to_normal_form(e), ix1).value.component(XMonomial(kDim));
        };
        bool ok = true;
        std::string witness;
        for (int t = 0; t < 50 && ok; ++t) {
            WeylElement k1 = WeylElement::constant(kDim, rng.scalar());
            WeylElement k2 = WeylElement::constant(kDim, rng.scalar());
            WeylElement c1 = rng.poly(kDim, p1_only, 3, 2);
            WeylElement c2 = rng.poly(kDim, p1_only, 3, 2);
            WeylElement d1 = rng.poly(kDim, base_vars, 3, 3);
            WeylElement d2 = rng.poly(kDim, base_vars, 3, 3);

            WeylElement closed_ll = k2 * c1 + scalar_right_reduce(d1, c2, 0);
            WeylElement closed_lr = mstar(d1, d2);
            WeylElement closed_ul = k1 * k2;

            WeylElement oracle_ul = reduce_entry(mstar(k1, k2));
            WeylElement oracle_ll = reduce_entry(mstar(c1, k2) + mstar(d1, c2));
            WeylElement oracle_ur = mstar(k1, WeylElement::zero(kDim));
            WeylElement oracle_lr = mstar(c1, WeylElement::zero(kDim)) + mstar(d1, d2);

            if (!(closed_ul == oracle_ul && closed_ll == oracle_ll && oracle_ur.is_zero() &&
                  closed_lr == oracle_lr)) {
                ok = false;
                witness = w(closed_ll) + " vs " + w(oracle_ll);
            }
        }
        add_check(rep, "matrix law (k k', 0; k' c + sum (2 lambda)^n d_n c'^(n), d * d') matches the oracle",
                  ok, witness);
    }

    {
        WeylElement four_lam_p1 = scalar_right_reduce(xvar(0), pvar(0) * pvar(0), 0);
        bool ok = four_lam_p1 == pvar(0).times_parameter(1).scaled(Gaussian(4));
        add_check(rep, "d = x1, c' = p1^2 contributes 4 lambda p1 (right-reduction n = 1 term)", ok,
                  w(four_lam_p1));

        WeylElement p1sq = scalar_right_reduce(pvar(0), pvar(0), 0);
        bool ok2 = p1sq == pvar(0) * pvar(0);
        add_check(rep, "d = p1, c' = p1 contributes p1^2 (right-reduction n = 0 term)", ok2, w(p1sq));
    }

    {
        // identity-like element (k = 1, c = 0, d = 1): both products with a
        // random (k', c', d') reproduce that element under the closed law
        RandomGen unit_rng(seed + 1);
        WeylElement kt = WeylElement::constant(kDim, unit_rng.scalar());
        WeylElement ct = unit_rng.poly(kDim, p1_only, 3, 2);
        WeylElement dt = unit_rng.poly(kDim, base_vars, 3, 3);
        WeylElement one = unit();
        bool left = (one * kt == kt) && (scalar_right_reduce(one, ct, 0) == ct) &&
                    (mstar(one, dt) == dt);
        bool right = (kt * one == kt) && (one * ct == ct) && (mstar(dt, one) == dt);
        add_check(rep, "identity-like (k=1, c=0, d=1) multiplies as the unit", left && right, "");
    }

    return rep;
}

ScenarioReport run_fat_circle(uint64_t seed) {
    ScenarioReport rep;
    rep.name = "fat_circle";
    rep.seed = seed;

    WeylElement gen = xvar(0) * xvar(0) + xvar(1) * xvar(1);
    IdealSpec ideal(kDim, {gen});

    // harmonic polynomials in (p1, p2) up to degree 4: Re/Im of (p1 + i p2)^k
    std::vector<WeylElement> harmonics;
    {
        WeylElement p1 = pvar(0), p2 = pvar(1);
        WeylElement p1sq = p1 * p1, p2sq = p2 * p2;
        harmonics.push_back(unit());
        harmonics.push_back(p1);
        harmonics.push_back(p2);
        harmonics.push_back(p1sq - p2sq);
        harmonics.push_back(p1 * p2);
        harmonics.push_back(p1sq * p1 - (p1 * p2sq).scaled(Gaussian(3)));
        harmonics.push_back((p1sq * p2).scaled(Gaussian(3)) - p2sq * p2);
        harmonics.push_back(p1sq * p1sq - (p1sq * p2sq).scaled(Gaussian(6)) + p2sq * p2sq);
        harmonics.push_back(p1sq * p1 * p2 - p1 * p2sq * p2);
    }

    // h0 ansatz: x2-free monomials x1^{0,1} p1^a p2^b, a + b <= 4,
    // lambda^{-1..2}
    std::vector<WeylElement> h0_basis;
    for (unsigned x1e = 0; x1e <= 1; ++x1e)
        for (unsigned ap = 0; ap <= 4; ++ap)
            for (unsigned bp = 0; ap + bp <= 4; ++bp) {
                Multidegree md(kDim);
                md.set_x_exp(0, x1e);
                md.set_p_exp(0, ap);
                md.set_p_exp(1, bp);
                for (int s = -1; s <= 2; ++s)
                    h0_basis.push_back(WeylElement::monomial(kDim, md, Gaussian(1), s));
            }
    AnsatzSpace h0_ansatz{6, 2, h0_basis};

    {
        bool ok = true;
        std::string witness;
        std::vector<WeylElement> solved;
        for (const auto& h1 : harmonics) {
            WeylElement pinned = mstar(h1, xvar(1));
            auto h = normalizer_complete(ideal, h0_ansatz, pinned);
            if (!h || !in_normalizer(ideal, *h)) {
                ok = false;
                witness = "no compatible h0 for h1 = " + w(h1);
                break;
            }
            solved.push_back(*h);
        }
        add_check(rep,
                  "every harmonic polynomial h1 of degree <= 4 (polynomial reading of 'spherical "
                  "harmonics') extends to a normalizer member h0 + h1*x2",
                  ok, witness);

        // operator x1^2 (Delta h1) - lambda^2 d^2/dp2^2 (Delta h1) on the
        // solved family's h1 components
        bool op_ok = ok;
        for (const auto& h1 : harmonics) {
            WeylElement dh = laplacian_p(h1);
            WeylElement op = xvar(0) * xvar(0) * dh -
                             partial(partial(dh, Var{VarKind::P, 1}), Var{VarKind::P, 1})
                                 .times_parameter(2);
            if (!op.is_zero()) op_ok = false;
        }
        add_check(rep, "x1^2 (Delta h1) - lambda^2 d2/dp2^2 (Delta h1) = 0 for the solved h1 family",
                  op_ok, "");

        WeylElement bad = pvar(0) * pvar(0);
        WeylElement dh = laplacian_p(bad);
        WeylElement op = xvar(0) * xvar(0) * dh -
                         partial(partial(dh, Var{VarKind::P, 1}), Var{VarKind::P, 1})
                             .times_parameter(2);
        bool bad_ok = op == (xvar(0) * xvar(0)).scaled(Gaussian(2));
        add_check(rep, "non-harmonic h1 = p1^2 violates the condition: residual operator is 2 x1^2",
                  bad_ok, w(op));
    }

    {
        AnsatzSpace general = AnsatzSpace::monomials(kDim, 3, 1);
        std::vector<WeylElement> sols = normalizer_solve(ideal, general);
        std::vector<WeylElement> slice = ideal_slice(ideal, general);
        std::vector<WeylElement> joint = sols;
        joint.insert(joint.end(), slice.begin(), slice.end());
        bool contains = same_span(joint, sols);
        bool strict = !same_span(sols, slice);
        add_check(rep, "solution space strictly contains the ideal slice (nontrivial quantum algebra)",
                  contains && strict,
                  "solutions " + std::to_string(sols.size()) + ", slice " +
                      std::to_string(slice.size()));
    }

    return rep;
}

ScenarioReport run_scenario(const std::string& name, uint64_t seed) {
    if (name == "cross") return run_cross(seed);
    if (name == "double_line") return run_double_line(seed);
    if (name == "double_point") return run_double_point(seed);
    if (name == "fat_circle") return run_fat_circle(seed);
    throw std::invalid_argument("unknown scenario '" + name + "'");
}

std::vector<std::string> scenario_names() {
    return {"cross", "double_line", "double_point", "fat_circle"};
}

}  // namespace starq
