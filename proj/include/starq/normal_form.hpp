#pragma once

#include <map>
#include <vector>

#include "starq/star_product.hpp"
#include "starq/weyl_element.hpp"

namespace starq {

/// Exponent vector of a pure x-monomial (right factor).
struct XMonomial {
    std::vector<uint16_t> exps;

    explicit XMonomial(unsigned dim) : exps(dim, 0) {}

    unsigned dim() const { return static_cast<unsigned>(exps.size()); }
    unsigned degree() const;
    bool is_one() const { return degree() == 0; }
    bool divides(const XMonomial& o) const;
    XMonomial operator+(const XMonomial& o) const;
    /// Componentwise difference; caller guarantees divisibility.
    XMonomial operator-(const XMonomial& o) const;

    bool operator==(const XMonomial& o) const { return exps == o.exps; }
    /// Graded-lex.
    std::strong_ordering operator<=>(const XMonomial& o) const {
        if (auto c = degree() <=> o.degree(); c != 0) return c;
        return exps <=> o.exps;
    }

    static XMonomial of(const Multidegree& md);
    WeylElement element(uint32_t order = WeylElement::kUnboundedOrder) const;
};

/// Generators of the lifted vanishing ideal: nonzero x-only polynomials.
struct IdealSpec {
    unsigned dim;
    std::vector<WeylElement> generators;

    IdealSpec(unsigned dim, std::vector<WeylElement> gens);
};

/// Right-factored form Sum_idx f_idx * x^idx (star on the right); the unique
/// decomposition of the lemma when coefficients are p-only, which is what
/// to_normal_form produces.
class NormalForm {
public:
    explicit NormalForm(unsigned dim) : dim_(dim) {}

    unsigned dim() const { return dim_; }
    const std::map<XMonomial, WeylElement>& components() const { return components_; }
    bool is_zero() const { return components_.empty(); }

    void add_component(const XMonomial& xm, const WeylElement& coeff);
    WeylElement component(const XMonomial& xm) const;

    /// Sum_idx f_idx star x^idx under the Moyal product; exact round trip.
    WeylElement reassemble() const;

    bool operator==(const NormalForm& o) const {
        return dim_ == o.dim_ && components_ == o.components_;
    }

private:
    unsigned dim_;
    std::map<XMonomial, WeylElement> components_;
};

/// Unique right-factored decomposition of a base element (no y, psi);
/// coefficients are p/lambda-polynomials.
NormalForm to_normal_form(const WeylElement& f);

/// Reduction result modulo the left ideal's right-factor image.
struct Residual {
    NormalForm value;
    bool is_zero;
};

/// Graded-lex multivariate division of the right-factor x-polynomials by the
/// generators, followed by an exact linear quotient against the bounded
/// ideal slice (a no-op for monomial/binomial generator sets, makes the
/// verdict generator-presentation independent otherwise).
Residual reduce_mod_ideal(const NormalForm& nf, const IdealSpec& ideal);

/// Closed reduction A(x,p) star B(p) = Sum_n (2 lambda)^n A_n B^(n) modulo
/// right star-multiples of x_axis; single active base dimension.
WeylElement scalar_right_reduce(const WeylElement& A, const WeylElement& B, unsigned axis = 0);

}  // namespace starq
