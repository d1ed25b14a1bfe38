#include "starq/normalizer.hpp"

#include <functional>
#include <map>
#include <stdexcept>

namespace starq {

namespace {

void enumerate_monomials(unsigned dim, unsigned x_cap, unsigned p_cap, unsigned total_cap,
                         unsigned lambda_cap, std::vector<WeylElement>& out) {
    std::vector<uint16_t> xv(dim, 0), pv(dim, 0);
    std::function<void(unsigned, unsigned)> gen_p = [&](unsigned slot, unsigned used) {
        if (slot == dim) {
            unsigned xd = 0, pd = 0;
            for (auto e : xv) xd += e;
            for (auto e : pv) pd += e;
            if (xd + pd > total_cap) return;
            Multidegree md(dim);
            for (unsigned i = 0; i < dim; ++i) {
                md.set_x_exp(i, xv[i]);
                md.set_p_exp(i, pv[i]);
            }
            for (int s = -static_cast<int>(lambda_cap); s <= static_cast<int>(lambda_cap); ++s)
                out.push_back(WeylElement::monomial(dim, md, Gaussian(1), s));
            return;
        }
        for (unsigned e = 0; e + used <= p_cap; ++e) {
            pv[slot] = static_cast<uint16_t>(e);
            gen_p(slot + 1, used + e);
        }
        pv[slot] = 0;
    };
    std::function<void(unsigned, unsigned)> gen_x = [&](unsigned slot, unsigned used) {
        if (slot == dim) {
            gen_p(0, 0);
            return;
        }
        for (unsigned e = 0; e + used <= x_cap; ++e) {
            xv[slot] = static_cast<uint16_t>(e);
            gen_x(slot + 1, used + e);
        }
        xv[slot] = 0;
    };
    gen_x(0, 0);
}

}  // namespace

AnsatzSpace AnsatzSpace::monomials(unsigned dim, unsigned max_degree, unsigned lambda_degree_cap) {
    AnsatzSpace a{max_degree, lambda_degree_cap, {}};
    enumerate_monomials(dim, max_degree, max_degree, max_degree, lambda_degree_cap, a.basis);
    return a;
}

AnsatzSpace AnsatzSpace::monomials_capped(unsigned dim, unsigned x_cap, unsigned p_cap,
                                          unsigned lambda_degree_cap) {
    AnsatzSpace a{x_cap + p_cap, lambda_degree_cap, {}};
    enumerate_monomials(dim, x_cap, p_cap, x_cap + p_cap, lambda_degree_cap, a.basis);
    return a;
}

std::vector<Residual> normalizer_residual(const IdealSpec& ideal, const WeylElement& g) {
    if (!g.is_base()) throw std::invalid_argument("normalizer_residual: element has fiber variables");
    const StarConfig cfg = StarConfig::moyal();
    std::vector<Residual> out;
    for (const auto& phi : ideal.generators)
        out.push_back(reduce_mod_ideal(to_normal_form(star(cfg, phi, g)), ideal));
    return out;
}

bool in_normalizer(const IdealSpec& ideal, const WeylElement& g) {
    for (const auto& r : normalizer_residual(ideal, g))
        if (!r.is_zero) return false;
    return true;
}

namespace {

/// Row key of the flattened residual system: generator block, right-factor
/// monomial, coefficient term.
struct FlatKey {
    std::size_t block;
    XMonomial xm;
    TermKey term;

    auto operator<=>(const FlatKey&) const = default;
    bool operator==(const FlatKey&) const = default;
};

std::map<FlatKey, Gaussian> flatten(const std::vector<Residual>& residuals) {
    std::map<FlatKey, Gaussian> out;
    for (std::size_t i = 0; i < residuals.size(); ++i)
        for (const auto& [xm, coeff] : residuals[i].value.components())
            for (const auto& [k, c] : coeff.terms()) out[FlatKey{i, xm, k}] = c;
    return out;
}

}  // namespace

std::vector<WeylElement> normalizer_solve(const IdealSpec& ideal, const AnsatzSpace& ansatz) {
    const std::size_t cols = ansatz.basis.size();
    std::vector<std::map<FlatKey, Gaussian>> columns;
    columns.reserve(cols);
    std::map<FlatKey, std::size_t> row_of;
    for (const auto& e : ansatz.basis) {
        columns.push_back(flatten(normalizer_residual(ideal, e)));
        for (const auto& [k, c] : columns.back()) row_of.emplace(k, 0);
    }
    std::size_t idx = 0;
    for (auto& [k, r] : row_of) r = idx++;

    Matrix m(row_of.size(), cols);
    for (std::size_t j = 0; j < cols; ++j)
        for (const auto& [k, c] : columns[j]) m.at(row_of.at(k), j) = c;

    std::vector<WeylElement> out;
    for (const auto& v : null_space(m)) {
        WeylElement e = WeylElement::zero(ideal.dim);
        for (std::size_t j = 0; j < cols; ++j)
            if (!v[j].is_zero()) e += ansatz.basis[j].scaled(v[j]);
        out.push_back(std::move(e));
    }
    return out;
}

std::optional<WeylElement> normalizer_complete(const IdealSpec& ideal, const AnsatzSpace& ansatz,
                                               const WeylElement& pinned) {
    const std::size_t cols = ansatz.basis.size();
    std::vector<std::map<FlatKey, Gaussian>> columns;
    columns.reserve(cols);
    std::map<FlatKey, std::size_t> row_of;
    std::map<FlatKey, Gaussian> rhs = flatten(normalizer_residual(ideal, pinned));
    for (const auto& [k, c] : rhs) row_of.emplace(k, 0);
    for (const auto& e : ansatz.basis) {
        columns.push_back(flatten(normalizer_residual(ideal, e)));
        for (const auto& [k, c] : columns.back()) row_of.emplace(k, 0);
    }
    std::size_t idx = 0;
    for (auto& [k, r] : row_of) r = idx++;

    Matrix m(row_of.size(), cols);
    for (std::size_t j = 0; j < cols; ++j)
        for (const auto& [k, c] : columns[j]) m.at(row_of.at(k), j) = c;
    std::vector<Gaussian> b(row_of.size());
    for (const auto& [k, c] : rhs) b[row_of.at(k)] = -c;

    auto sol = solve_linear(m, b);
    if (!sol) return std::nullopt;
    WeylElement e = pinned;
    for (std::size_t j = 0; j < cols; ++j)
        if (!(*sol)[j].is_zero()) e += ansatz.basis[j].scaled((*sol)[j]);
    return e;
}

Residual quotient_multiply(const IdealSpec& ideal, const WeylElement& g, const WeylElement& h) {
    if (!in_normalizer(ideal, g) || !in_normalizer(ideal, h))
        throw std::domain_error("quotient_multiply: operand fails the normalizer check");
    const StarConfig cfg = StarConfig::moyal();
    return reduce_mod_ideal(to_normal_form(star(cfg, g, h)), ideal);
}

Matrix element_span(const std::vector<WeylElement>& elems) {
    std::map<TermKey, std::size_t> col_of;
    for (const auto& e : elems)
        for (const auto& [k, c] : e.terms()) col_of.emplace(k, 0);
    std::size_t idx = 0;
    for (auto& [k, c] : col_of) c = idx++;

    Matrix m(elems.size(), col_of.size());
    for (std::size_t r = 0; r < elems.size(); ++r)
        for (const auto& [k, c] : elems[r].terms()) m.at(r, col_of.at(k)) = c;
    return row_space_canonical(m);
}

bool same_span(const std::vector<WeylElement>& a, const std::vector<WeylElement>& b) {
    if (a.empty() && b.empty()) return true;
    unsigned dim = a.empty() ? b.front().dim() : a.front().dim();
    // joint column indexing so the two canonical forms are comparable
    std::map<TermKey, std::size_t> col_of;
    for (const auto& e : a)
        for (const auto& [k, c] : e.terms()) col_of.emplace(k, 0);
    for (const auto& e : b)
        for (const auto& [k, c] : e.terms()) col_of.emplace(k, 0);
    std::size_t idx = 0;
    for (auto& [k, c] : col_of) c = idx++;
    (void)dim;

    auto build = [&](const std::vector<WeylElement>& es) {
        Matrix m(es.size(), col_of.size());
        for (std::size_t r = 0; r < es.size(); ++r)
            for (const auto& [k, c] : es[r].terms()) m.at(r, col_of.at(k)) = c;
        return row_space_canonical(m);
    };
    return build(a) == build(b);
}

std::vector<WeylElement> ideal_slice(const IdealSpec& ideal, const AnsatzSpace& ansatz) {
    const StarConfig cfg = StarConfig::moyal();
    const int cap = static_cast<int>(ansatz.lambda_degree_cap);
    std::vector<WeylElement> out;
    for (const auto& g : ideal.generators) {
        unsigned gdeg = 0;
        for (const auto& [k, c] : g.terms())
            gdeg = std::max(gdeg, k.degree.total_x());
        for (const auto& e : ansatz.basis) {
            unsigned edeg = 0;
            for (const auto& [k, c] : e.terms())
                edeg = std::max(edeg, k.degree.total_x() + k.degree.total_p());
            if (edeg + gdeg > ansatz.max_degree) continue;
            WeylElement prod = star(cfg, e, g);
            if (prod.is_zero()) continue;
            // keep only products that fall inside the ansatz window
            bool inside = true;
            for (const auto& [k, c] : prod.terms())
                if (k.hbar_power > cap || k.hbar_power < -cap) inside = false;
            if (inside) out.push_back(std::move(prod));
        }
    }
    return out;
}

}  // namespace starq
