#pragma once

#include "starq/connection.hpp"
#include "starq/star_product.hpp"
#include "starq/weyl_element.hpp"

namespace starq {

/// delta = psi^a d/dy^a.
WeylElement delta_op(const WeylElement& a);
/// delta* = y^a d/dpsi^a.
WeylElement delta_star_op(const WeylElement& a);
/// delta^{-1} = delta*/(p+q) on each (y,psi)-homogeneous piece; kills the
/// (0,0) component.
WeylElement delta_inv(const WeylElement& a);
/// d = psi^a d/dx^a.
WeylElement d_op(const WeylElement& a);
/// Covariant derivative psi^a (d/dx^a + Gamma^c_{ab} p_c d/dp_b
///                                    - Gamma^c_{ab} y^b d/dy^c).
WeylElement nabla(const ConnectionData& conn, const WeylElement& a);

/// R-hat = (1/2) psi^b psi^c R^d_{abc} p_d y^a, the curvature section whose
/// bracket reproduces nabla^2.
WeylElement curvature_section(const ConnectionData& conn,
                              uint32_t order = WeylElement::kUnboundedOrder);

/// Gamma = Gamma^c_{ab} y^b p_c psi^a, the odd element with
/// nabla a = d a + (i/hbar)[Gamma, a].
WeylElement connection_form(const ConnectionData& conn,
                            uint32_t order = WeylElement::kUnboundedOrder);

/// Solution of gamma = delta^{-1}(R + nabla gamma + (i/hbar) gamma^2) with
/// delta^{-1} gamma = 0. The stored value is degree-complete through
/// order + 1 so that the flatness residual vanishes identically at `order`.
struct GammaSeries {
    WeylElement value;
    uint32_t order;
};

GammaSeries gamma_recursion(const ConnectionData& conn, uint32_t order);

/// delta gamma - R - nabla gamma - (i/hbar) gamma*gamma, truncated at
/// gamma.order; identically zero iff gamma is integrable to that order.
WeylElement flatness_residual(const ConnectionData& conn, const GammaSeries& gamma);

/// Flat section of the generalized connection, generated by its base part.
struct FlatSection {
    WeylElement value;
    WeylElement base;
    uint32_t order;
};

/// Iterates a = a00 + delta^{-1}(nabla a + (i/hbar)[gamma, a]); the value is
/// degree-complete through order + 1. Requires gamma.order >= order and a00
/// free of fiber variables.
FlatSection flat_lift(const ConnectionData& conn, const GammaSeries& gamma,
                      const WeylElement& a00, uint32_t order);

/// delta a - nabla a - (i/hbar)[gamma, a], truncated at `order`; zero iff a
/// is a flat section to that order.
WeylElement d_residual(const ConnectionData& conn, const GammaSeries& gamma,
                       const WeylElement& a, uint32_t order);

/// Induced base product: lift both arguments, multiply with the fiberwise
/// star, restrict at y = psi = 0. Exact pointwise product on x-only inputs.
WeylElement base_star(const ConnectionData& conn, const GammaSeries& gamma,
                      const WeylElement& f00, const WeylElement& g00, uint32_t order);

}  // namespace starq
