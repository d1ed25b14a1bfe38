#pragma once

#include <optional>
#include <vector>

#include "starq/linear.hpp"
#include "starq/normal_form.hpp"

namespace starq {

/// Finite slice of base elements used for the linear normalizer solves:
/// monomials x^alpha p^beta lambda^s with |alpha| + |beta| <= max_degree and
/// |s| <= lambda_degree_cap.
struct AnsatzSpace {
    unsigned max_degree;
    unsigned lambda_degree_cap;
    std::vector<WeylElement> basis;

    static AnsatzSpace monomials(unsigned dim, unsigned max_degree, unsigned lambda_degree_cap);
    /// Same slice restricted by per-kind degree caps (x_cap on total x-degree,
    /// p_cap on total p-degree).
    static AnsatzSpace monomials_capped(unsigned dim, unsigned x_cap, unsigned p_cap,
                                        unsigned lambda_degree_cap);
};

/// One residual per generator of [phi_i star g] reduced mod the left ideal;
/// g lies in the normalizer iff all are zero.
std::vector<Residual> normalizer_residual(const IdealSpec& ideal, const WeylElement& g);

bool in_normalizer(const IdealSpec& ideal, const WeylElement& g);

/// Exact null-space basis of the linear map (ansatz coefficients) ->
/// (residual coefficients mod the bounded ideal slice). The span always
/// contains the ideal's own ansatz slice.
std::vector<WeylElement> normalizer_solve(const IdealSpec& ideal, const AnsatzSpace& ansatz);

/// Solves residual(pinned + Sum c_j e_j) = 0 for the ansatz coefficients;
/// nullopt when no completion of the pinned element lies in the normalizer.
std::optional<WeylElement> normalizer_complete(const IdealSpec& ideal, const AnsatzSpace& ansatz,
                                               const WeylElement& pinned);

/// Class of g star h in Q_X = N_l / J_l; both operands must pass the
/// normalizer check.
Residual quotient_multiply(const IdealSpec& ideal, const WeylElement& g, const WeylElement& h);

/// Canonical row space of the elements' coefficient vectors over the union
/// of their term keys; equal matrices <=> equal spans.
Matrix element_span(const std::vector<WeylElement>& elems);

bool same_span(const std::vector<WeylElement>& a, const std::vector<WeylElement>& b);

/// Ideal slice within the ansatz: {e star g_i} for ansatz elements e,
/// restricted to the ansatz degree caps.
std::vector<WeylElement> ideal_slice(const IdealSpec& ideal, const AnsatzSpace& ansatz);

}  // namespace starq
