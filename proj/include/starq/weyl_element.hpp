#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "starq/gaussian.hpp"
#include "starq/multidegree.hpp"

namespace starq {

/// One scalar term coefficient: (re + im*i) * hbar^hbar_power. The same slot
/// carries the Laurent exponent of lambda when an element lives in the Moyal
/// convention; the interpretation is fixed by the surrounding star config.
struct Coefficient {
    Rational re;
    Rational im;
    int hbar_power = 0;

    Gaussian scalar() const { return Gaussian(re, im); }
};

/// Key of the sparse term map: monomial shape plus the deformation-parameter
/// Laurent exponent.
struct TermKey {
    Multidegree degree;
    int hbar_power = 0;

    bool operator==(const TermKey& o) const {
        return hbar_power == o.hbar_power && degree == o.degree;
    }
    std::strong_ordering operator<=>(const TermKey& o) const {
        if (auto c = degree <=> o.degree; c != 0) return c;
        return hbar_power <=> o.hbar_power;
    }
};

/// Homogeneity bidegree (order in y, order in psi).
struct Grading {
    unsigned y_degree = 0;
    unsigned psi_degree = 0;
    bool operator==(const Grading&) const = default;
    auto operator<=>(const Grading&) const = default;
};

inline unsigned fedosov_degree(const TermKey& k) {
    return k.degree.total_y() + 2u * static_cast<unsigned>(std::max(0, k.hbar_power));
}

/// Sparse graded super-polynomial in x, p, y (commuting) and psi
/// (anticommuting) with Q(i) Laurent coefficients in the deformation
/// parameter. Values are immutable once built up; every operation returns a
/// fresh element. Terms whose Fedosov degree (deg y + 2*max(0, hbar power))
/// exceeds the truncation order are dropped on insertion; a term below the
/// Laurent floor throws.
class WeylElement {
public:
    static constexpr uint32_t kUnboundedOrder = UINT32_MAX;
    /// Floor applied to untruncated elements; generous guard against runaway
    /// 1/hbar recursions.
    static constexpr int kUnboundedFloor = -(1 << 20);

    explicit WeylElement(unsigned dim, uint32_t truncation_order = kUnboundedOrder);

    static WeylElement zero(unsigned dim, uint32_t order = kUnboundedOrder);
    static WeylElement constant(unsigned dim, Gaussian c, uint32_t order = kUnboundedOrder);
    static WeylElement variable(unsigned dim, Var v, uint32_t order = kUnboundedOrder);
    /// hbar^k (or lambda^k in the Moyal convention), k may be negative.
    static WeylElement parameter(unsigned dim, int k, uint32_t order = kUnboundedOrder);
    static WeylElement monomial(unsigned dim, const Multidegree& md, Gaussian c,
                                int hbar_power = 0, uint32_t order = kUnboundedOrder);

    unsigned dim() const { return dim_; }
    uint32_t truncation_order() const { return truncation_order_; }
    int laurent_floor() const;

    const std::map<TermKey, Gaussian>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    /// Coefficient of an exact term key (zero when absent).
    Gaussian coeff(const TermKey& k) const;
    Coefficient coefficient(const TermKey& k) const;

    /// Accumulates c * md * hbar^hpow, canonicalizing (drop above truncation,
    /// erase exact zeros, reject Laurent-floor breaches).
    void add_term(const Multidegree& md, const Gaussian& c, int hpow = 0);

    bool operator==(const WeylElement& o) const {
        return dim_ == o.dim_ && terms_ == o.terms_;
    }

    WeylElement operator-() const;
    WeylElement operator+(const WeylElement& o) const;
    WeylElement operator-(const WeylElement& o) const;
    /// Supercommutative product (psi factors anticommute, Koszul sign).
    WeylElement operator*(const WeylElement& o) const;

    WeylElement& operator+=(const WeylElement& o) { return *this = *this + o; }
    WeylElement& operator-=(const WeylElement& o) { return *this = *this - o; }

    WeylElement scaled(const Gaussian& c) const;
    /// Multiply by hbar^k (k may be negative).
    WeylElement times_parameter(int k) const;

    /// Copy re-canonicalized under the given truncation order.
    WeylElement truncated(uint32_t order) const;

    /// Maximum Fedosov degree over stored terms (0 for the zero element).
    unsigned max_fedosov_degree() const;

    /// Sub-sum of terms with the given Fedosov degree.
    WeylElement fedosov_part(unsigned degree) const;
    /// Sub-sum of terms with the given y-degree.
    WeylElement y_degree_part(unsigned degree) const;

    bool depends_on(VarKind kind) const;
    /// True when no term carries y or psi factors.
    bool is_base() const;
    /// True when every term has even (resp. odd) psi degree.
    bool is_even() const;
    bool is_odd() const;
    /// (even part, odd part) by psi parity.
    std::pair<WeylElement, WeylElement> parity_split() const;

private:
    unsigned dim_;
    uint32_t truncation_order_;
    std::map<TermKey, Gaussian> terms_;
};

/// Supercommutative product with an explicit name, per the operation list.
WeylElement superproduct(const WeylElement& a, const WeylElement& b);

/// Linear (super-)derivation with respect to one slot. For psi slots this is
/// the left derivative: the sign counts psi factors passed over.
WeylElement partial(const WeylElement& a, Var v);

/// a(x, p, 0, 0): terms free of y and psi.
WeylElement restrict_00(const WeylElement& a);

/// Partition by (y-degree, psi-degree); parts sum back to a exactly.
std::vector<std::pair<Grading, WeylElement>> grade_split(const WeylElement& a);

}  // namespace starq
