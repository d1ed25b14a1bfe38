#include "starq/fedosov.hpp"

#include <stdexcept>

namespace starq {

namespace {

WeylElement psi_times(unsigned slot, const WeylElement& a) {
    return superproduct(WeylElement::variable(a.dim(), Var{VarKind::Psi, slot},
                                              a.truncation_order()),
                        a);
}

uint32_t with_headroom(uint32_t order) {
    return order == WeylElement::kUnboundedOrder ? order : order + 2;
}

/// (i/hbar) (a star b), kept exact at truncation: the product is expanded
/// with two extra Fedosov degrees of headroom so terms that the division by
/// hbar pulls back under the cutoff are not lost.
WeylElement i_over_hbar_star(const WeylElement& a, const WeylElement& b, uint32_t order) {
    WeylElement prod = star(StarConfig::weyl(), a.truncated(with_headroom(order)),
                            b.truncated(with_headroom(order)));
    return prod.times_parameter(-1).scaled(Gaussian::unit_i()).truncated(order);
}

/// (i/hbar) [a, b]_star with the same headroom treatment.
WeylElement i_over_hbar_bracket(const WeylElement& a, const WeylElement& b, uint32_t order) {
    WeylElement br = commutator(StarConfig::weyl(), a.truncated(with_headroom(order)),
                                b.truncated(with_headroom(order)));
    return br.times_parameter(-1).scaled(Gaussian::unit_i()).truncated(order);
}

}  // namespace

WeylElement delta_op(const WeylElement& a) {
    WeylElement r(a.dim(), a.truncation_order());
    for (unsigned s = 0; s < a.dim(); ++s) r += psi_times(s, partial(a, Var{VarKind::Y, s}));
    return r;
}

WeylElement delta_star_op(const WeylElement& a) {
    WeylElement r(a.dim(), a.truncation_order());
    for (unsigned s = 0; s < a.dim(); ++s) {
        WeylElement d = partial(a, Var{VarKind::Psi, s});
        r += superproduct(WeylElement::variable(a.dim(), Var{VarKind::Y, s}, a.truncation_order()), d);
    }
    return r;
}

WeylElement delta_inv(const WeylElement& a) {
    WeylElement r(a.dim(), a.truncation_order());
    for (const auto& [g, part] : grade_split(a)) {
        unsigned pq = g.y_degree + g.psi_degree;
        if (pq == 0) continue;
        r += delta_star_op(part).scaled(Gaussian(Rational(1, static_cast<long>(pq))));
    }
    return r;
}

WeylElement d_op(const WeylElement& a) {
    WeylElement r(a.dim(), a.truncation_order());
    for (unsigned s = 0; s < a.dim(); ++s) r += psi_times(s, partial(a, Var{VarKind::X, s}));
    return r;
}

WeylElement nabla(const ConnectionData& conn, const WeylElement& a) {
    const unsigned n = a.dim();
    if (conn.dim() != n) throw std::invalid_argument("nabla: dimension mismatch");
    WeylElement r = d_op(a);
    for (unsigned s = 0; s < n; ++s) {
        for (unsigned b = 0; b < n; ++b) {
            for (unsigned c = 0; c < n; ++c) {
                const WeylElement& gamma_cab = conn.christoffel(c, s, b);
                if (gamma_cab.is_zero()) continue;
                WeylElement p_term =
                    gamma_cab * WeylElement::variable(n, Var{VarKind::P, c}, a.truncation_order()) *
                    partial(a, Var{VarKind::P, b});
                WeylElement y_term =
                    gamma_cab * WeylElement::variable(n, Var{VarKind::Y, b}, a.truncation_order()) *
                    partial(a, Var{VarKind::Y, c});
                r += psi_times(s, p_term - y_term);
            }
        }
    }
    return r;
}

WeylElement curvature_section(const ConnectionData& conn, uint32_t order) {
    const unsigned n = conn.dim();
    CurvatureTensor R = curvature(conn);
    WeylElement r(n, order);
    for (unsigned d = 0; d < n; ++d)
        for (unsigned a = 0; a < n; ++a)
            for (unsigned b = 0; b < n; ++b)
                for (unsigned c = 0; c < n; ++c) {
                    const WeylElement& entry = R.entry(d, a, b, c);
                    if (entry.is_zero()) continue;
                    WeylElement term =
                        WeylElement::variable(n, Var{VarKind::Psi, b}, order) *
                        WeylElement::variable(n, Var{VarKind::Psi, c}, order) *
                        entry.truncated(order) *
                        WeylElement::variable(n, Var{VarKind::P, d}, order) *
                        WeylElement::variable(n, Var{VarKind::Y, a}, order);
                    r += term.scaled(Gaussian(Rational(1, 2)));
                }
    return r;
}

WeylElement connection_form(const ConnectionData& conn, uint32_t order) {
    const unsigned n = conn.dim();
    WeylElement r(n, order);
    for (unsigned a = 0; a < n; ++a)
        for (unsigned b = 0; b < n; ++b)
            for (unsigned c = 0; c < n; ++c) {
                const WeylElement& entry = conn.christoffel(c, a, b);
                if (entry.is_zero()) continue;
                r += entry.truncated(order) *
                     WeylElement::variable(n, Var{VarKind::Y, b}, order) *
                     WeylElement::variable(n, Var{VarKind::P, c}, order) *
                     WeylElement::variable(n, Var{VarKind::Psi, a}, order);
            }
    return r;
}

GammaSeries gamma_recursion(const ConnectionData& conn, uint32_t order) {
    if (order < 2) throw std::invalid_argument("gamma_recursion: order must be >= 2");
    const uint32_t work_order = order + 1;
    WeylElement r_hat = curvature_section(conn, work_order);
    WeylElement gamma = WeylElement::zero(conn.dim(), work_order);
    // Each pass settles one more Fedosov degree, starting from delta^{-1} R
    // at degree 2; `order` passes reach degree order + 1.
    for (uint32_t pass = 0; pass < order; ++pass) {
        WeylElement rhs = r_hat + nabla(conn, gamma) + i_over_hbar_star(gamma, gamma, work_order);
        gamma = delta_inv(rhs);
    }
    return GammaSeries{gamma, order};
}

WeylElement flatness_residual(const ConnectionData& conn, const GammaSeries& gamma) {
    const WeylElement& g = gamma.value;
    WeylElement r = delta_op(g) - curvature_section(conn, g.truncation_order()) -
                    nabla(conn, g) - i_over_hbar_star(g, g, g.truncation_order());
    return r.truncated(gamma.order);
}

FlatSection flat_lift(const ConnectionData& conn, const GammaSeries& gamma,
                      const WeylElement& a00, uint32_t order) {
    if (!a00.is_base())
        throw std::invalid_argument("flat_lift: generator must not contain y or psi variables");
    if (gamma.order < order) throw std::invalid_argument("flat_lift: gamma order too small");
    const uint32_t work_order = order + 1;
    WeylElement base = a00.truncated(work_order);
    WeylElement a = base;
    for (uint32_t pass = 0; pass < work_order; ++pass)
        a = base + delta_inv(nabla(conn, a) + i_over_hbar_bracket(gamma.value, a, work_order));
    return FlatSection{a, base, order};
}

WeylElement d_residual(const ConnectionData& conn, const GammaSeries& gamma,
                       const WeylElement& a, uint32_t order) {
    WeylElement r = delta_op(a) - nabla(conn, a) -
                    i_over_hbar_bracket(gamma.value, a, a.truncation_order());
    return r.truncated(order);
}

WeylElement base_star(const ConnectionData& conn, const GammaSeries& gamma,
                      const WeylElement& f00, const WeylElement& g00, uint32_t order) {
    FlatSection f = flat_lift(conn, gamma, f00, order);
    FlatSection g = flat_lift(conn, gamma, g00, order);
    WeylElement prod = star(StarConfig::weyl(), f.value, g.value);
    return restrict_00(prod).truncated(order);
}

}  // namespace starq
