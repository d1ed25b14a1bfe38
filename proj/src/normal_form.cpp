#include "starq/normal_form.hpp"

#include <functional>
#include <stdexcept>

#include "starq/linear.hpp"

namespace starq {

unsigned XMonomial::degree() const {
    unsigned d = 0;
    for (auto e : exps) d += e;
    return d;
}

bool XMonomial::divides(const XMonomial& o) const {
    for (std::size_t i = 0; i < exps.size(); ++i)
        if (exps[i] > o.exps[i]) return false;
    return true;
}

XMonomial XMonomial::operator+(const XMonomial& o) const {
    XMonomial r(dim());
    for (std::size_t i = 0; i < exps.size(); ++i)
        r.exps[i] = static_cast<uint16_t>(exps[i] + o.exps[i]);
    return r;
}

XMonomial XMonomial::operator-(const XMonomial& o) const {
    XMonomial r(dim());
    for (std::size_t i = 0; i < exps.size(); ++i)
        r.exps[i] = static_cast<uint16_t>(exps[i] - o.exps[i]);
    return r;
}

XMonomial XMonomial::of(const Multidegree& md) {
    XMonomial r(md.dim());
    for (unsigned i = 0; i < md.dim(); ++i) r.exps[i] = static_cast<uint16_t>(md.x_exp(i));
    return r;
}

WeylElement XMonomial::element(uint32_t order) const {
    Multidegree md(dim());
    for (unsigned i = 0; i < dim(); ++i) md.set_x_exp(i, exps[i]);
    return WeylElement::monomial(dim(), md, Gaussian(1), 0, order);
}

IdealSpec::IdealSpec(unsigned d, std::vector<WeylElement> gens)
    : dim(d), generators(std::move(gens)) {
    for (const auto& g : generators) {
        if (g.dim() != dim) throw std::invalid_argument("IdealSpec: generator dimension mismatch");
        if (g.is_zero()) throw std::invalid_argument("IdealSpec: zero generator");
        if (g.depends_on(VarKind::P)) throw std::invalid_argument("IdealSpec: generator with p-dependence");
        if (g.depends_on(VarKind::Y) || g.depends_on(VarKind::Psi))
            throw std::invalid_argument("IdealSpec: generator with fiber variables");
        for (const auto& [k, c] : g.terms())
            if (k.hbar_power != 0)
                throw std::invalid_argument("IdealSpec: generator with parameter powers");
    }
}

void NormalForm::add_component(const XMonomial& xm, const WeylElement& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = components_.try_emplace(xm, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) components_.erase(it);
    }
}

WeylElement NormalForm::component(const XMonomial& xm) const {
    auto it = components_.find(xm);
    return it == components_.end() ? WeylElement::zero(dim_) : it->second;
}

WeylElement NormalForm::reassemble() const {
    WeylElement r = WeylElement::zero(dim_);
    const StarConfig cfg = StarConfig::moyal();
    for (const auto& [xm, coeff] : components_) r += star(cfg, coeff, xm.element());
    return r;
}

NormalForm to_normal_form(const WeylElement& f) {
    if (!f.is_base())
        throw std::invalid_argument("to_normal_form: element has y or psi variables");
    const unsigned n = f.dim();
    const StarConfig cfg = StarConfig::moyal();
    NormalForm nf(n);
    WeylElement work = f.truncated(WeylElement::kUnboundedOrder);
    while (!work.is_zero()) {
        // peel the graded-lex greatest right factor
        XMonomial top(n);
        bool first = true;
        for (const auto& [k, c] : work.terms()) {
            XMonomial xm = XMonomial::of(k.degree);
            if (first || top < xm) {
                top = xm;
                first = false;
            }
        }
        WeylElement coeff(n);
        for (const auto& [k, c] : work.terms()) {
            if (!(XMonomial::of(k.degree) == top)) continue;
            Multidegree md = k.degree;
            for (unsigned i = 0; i < n; ++i) md.set_x_exp(i, 0);
            coeff.add_term(md, c, k.hbar_power);
        }
        nf.add_component(top, coeff);
        work -= star(cfg, coeff, top.element());
    }
    return nf;
}

namespace {

struct GeneratorInfo {
    const WeylElement* poly;
    XMonomial lead;
    Gaussian lead_coeff;
    unsigned degree;
};

std::vector<GeneratorInfo> generator_leads(const IdealSpec& ideal) {
    std::vector<GeneratorInfo> infos;
    for (const auto& g : ideal.generators) {
        GeneratorInfo info{&g, XMonomial(ideal.dim), Gaussian(), 0};
        bool first = true;
        for (const auto& [k, c] : g.terms()) {
            XMonomial xm = XMonomial::of(k.degree);
            if (first || info.lead < xm) {
                info.lead = xm;
                info.lead_coeff = c;
                first = false;
            }
        }
        info.degree = info.lead.degree();
        infos.push_back(std::move(info));
    }
    return infos;
}

/// Reduce the division remainder against the linear span of x^nu * g_i up to
/// the degree cap; canonical under the fixed graded-lex column order.
NormalForm absorb_ideal_slice(const NormalForm& remainder, const IdealSpec& ideal,
                              unsigned max_gen_degree) {
    unsigned cap = 0;
    for (const auto& [xm, coeff] : remainder.components()) cap = std::max(cap, xm.degree());
    cap += max_gen_degree;

    // column indexing over x-monomials of degree <= cap
    std::map<XMonomial, std::size_t> col_of;
    {
        std::vector<uint16_t> v(ideal.dim, 0);
        std::function<void(unsigned, unsigned)> gen = [&](unsigned slot, unsigned used) {
            if (slot == ideal.dim) {
                XMonomial xm(ideal.dim);
                xm.exps = v;
                col_of.emplace(xm, 0);
                return;
            }
            for (unsigned e = 0; e + used <= cap; ++e) {
                v[slot] = static_cast<uint16_t>(e);
                gen(slot + 1, used + e);
            }
            v[slot] = 0;
        };
        gen(0, 0);
        std::size_t idx = 0;
        for (auto& [xm, c] : col_of) c = idx++;
    }

    std::vector<std::vector<Gaussian>> span_rows;
    for (const auto& g : ideal.generators) {
        unsigned gdeg = 0;
        for (const auto& [k, c] : g.terms()) gdeg = std::max(gdeg, XMonomial::of(k.degree).degree());
        for (const auto& [xm, col] : col_of) {
            if (xm.degree() + gdeg > cap) continue;
            std::vector<Gaussian> row(col_of.size());
            for (const auto& [k, c] : g.terms()) {
                XMonomial m = XMonomial::of(k.degree) + xm;
                row[col_of.at(m)] += c;
            }
            span_rows.push_back(std::move(row));
        }
    }
    Matrix span(span_rows.size(), col_of.size());
    for (std::size_t r = 0; r < span_rows.size(); ++r)
        for (std::size_t c = 0; c < col_of.size(); ++c) span.at(r, c) = span_rows[r][c];
    std::vector<std::size_t> pivots = rref(span);

    // fibers: one x-vector per (p-monomial, parameter power) of the coefficients
    std::map<TermKey, std::vector<Gaussian>> fibers;
    for (const auto& [xm, coeff] : remainder.components()) {
        std::size_t col = col_of.at(xm);
        for (const auto& [k, c] : coeff.terms()) {
            auto [it, inserted] = fibers.try_emplace(k, std::vector<Gaussian>());
            if (inserted) it->second.assign(col_of.size(), Gaussian());
            it->second[col] += c;
        }
    }

    for (auto& [key, vec] : fibers) {
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            const Gaussian& lead = vec[pivots[i]];
            if (lead.is_zero()) continue;
            Gaussian factor = lead;
            for (std::size_t c = 0; c < vec.size(); ++c) vec[c] -= factor * span.at(i, c);
        }
    }

    NormalForm out(remainder.dim());
    std::vector<XMonomial> mono_of(col_of.size(), XMonomial(ideal.dim));
    for (const auto& [xm, col] : col_of) mono_of[col] = xm;
    for (const auto& [key, vec] : fibers) {
        for (std::size_t c = 0; c < vec.size(); ++c) {
            if (vec[c].is_zero()) continue;
            WeylElement coeff(remainder.dim());
            coeff.add_term(key.degree, vec[c], key.hbar_power);
            out.add_component(mono_of[c], coeff);
        }
    }
    return out;
}

}  // namespace

Residual reduce_mod_ideal(const NormalForm& nf_in, const IdealSpec& ideal) {
    if (nf_in.dim() != ideal.dim)
        throw std::invalid_argument("reduce_mod_ideal: dimension mismatch");

    // re-normalize if any coefficient still carries x
    const NormalForm* nf = &nf_in;
    NormalForm renorm(nf_in.dim());
    for (const auto& [xm, coeff] : nf_in.components()) {
        if (coeff.depends_on(VarKind::X)) {
            renorm = to_normal_form(nf_in.reassemble());
            nf = &renorm;
            break;
        }
    }

    std::vector<GeneratorInfo> gens = generator_leads(ideal);
    unsigned max_gen_degree = 0;
    for (const auto& g : gens) max_gen_degree = std::max(max_gen_degree, g.degree);

    std::map<XMonomial, WeylElement> work(nf->components().begin(), nf->components().end());
    NormalForm remainder(ideal.dim);

    auto accumulate = [&](const XMonomial& xm, const WeylElement& delta) {
        if (delta.is_zero()) return;
        auto [it, inserted] = work.try_emplace(xm, delta);
        if (!inserted) {
            it->second += delta;
            if (it->second.is_zero()) work.erase(it);
        }
    };

    while (!work.empty()) {
        auto top_it = std::prev(work.end());
        XMonomial mu = top_it->first;
        WeylElement g = top_it->second;

        const GeneratorInfo* hit = nullptr;
        for (const auto& info : gens) {
            if (info.lead.divides(mu)) {
                hit = &info;
                break;
            }
        }
        if (!hit) {
            remainder.add_component(mu, g);
            work.erase(top_it);
            continue;
        }
        XMonomial nu = mu - hit->lead;
        WeylElement factor = g.scaled(Gaussian(1) / hit->lead_coeff);
        for (const auto& [k, c] : hit->poly->terms()) {
            XMonomial m = XMonomial::of(k.degree) + nu;
            accumulate(m, factor.scaled(-c));
        }
        // the mu slot cancels exactly; anything left there is a bug
    }

    if (!remainder.is_zero())
        remainder = absorb_ideal_slice(remainder, ideal, max_gen_degree);

    return Residual{remainder, remainder.is_zero()};
}

WeylElement scalar_right_reduce(const WeylElement& A, const WeylElement& B, unsigned axis) {
    if (B.depends_on(VarKind::X)) throw std::invalid_argument("scalar_right_reduce: B depends on x");
    if (!B.is_base() || !A.is_base())
        throw std::invalid_argument("scalar_right_reduce: base elements expected");
    NormalForm nf = to_normal_form(A);
    unsigned max_n = 0;
    for (const auto& [xm, coeff] : nf.components()) {
        for (unsigned i = 0; i < xm.dim(); ++i)
            if (i != axis && xm.exps[i] != 0)
                throw std::invalid_argument("scalar_right_reduce: one base dimension active");
        max_n = std::max(max_n, static_cast<unsigned>(xm.exps[axis]));
    }
    WeylElement result = WeylElement::zero(A.dim());
    WeylElement deriv = B;
    for (unsigned n = 0; n <= max_n; ++n) {
        XMonomial xm(A.dim());
        xm.exps[axis] = static_cast<uint16_t>(n);
        WeylElement an = nf.component(xm);
        if (!an.is_zero()) {
            Gaussian two_pow(Rational(1));
            for (unsigned k = 0; k < n; ++k) two_pow *= Gaussian(2);
            result += (an * deriv).scaled(two_pow).times_parameter(static_cast<int>(n));
        }
        deriv = partial(deriv, Var{VarKind::P, axis});
    }
    return result;
}

}  // namespace starq
