#include "starq/weyl_element.hpp"

#include <bit>
#include <stdexcept>

namespace starq {

namespace {

/// Sign of sorting the concatenation psi_a . psi_b into ascending order:
/// (-1)^{inversions between the two blocks}. Zero overlap is the caller's
/// concern.
int merge_sign(uint32_t a, uint32_t b) {
    int inversions = 0;
    uint32_t rest = b;
    while (rest) {
        unsigned j = static_cast<unsigned>(std::countr_zero(rest));
        rest &= rest - 1;
        inversions += static_cast<int>(std::popcount(a >> (j + 1)));
    }
    return (inversions & 1) ? -1 : 1;
}

}  // namespace

WeylElement::WeylElement(unsigned dim, uint32_t truncation_order)
    : dim_(dim), truncation_order_(truncation_order) {
    if (dim == 0 || dim > Multidegree::kMaxDim)
        throw std::invalid_argument("WeylElement: dim out of range");
}

WeylElement WeylElement::zero(unsigned dim, uint32_t order) { return WeylElement(dim, order); }

WeylElement WeylElement::constant(unsigned dim, Gaussian c, uint32_t order) {
    WeylElement e(dim, order);
    e.add_term(Multidegree(dim), c, 0);
    return e;
}

WeylElement WeylElement::variable(unsigned dim, Var v, uint32_t order) {
    if (v.index >= dim) throw std::invalid_argument("WeylElement: variable index out of range");
    Multidegree md(dim);
    md.bump(v, 1);
    return monomial(dim, md, Gaussian(1), 0, order);
}

WeylElement WeylElement::parameter(unsigned dim, int k, uint32_t order) {
    WeylElement e(dim, order);
    e.add_term(Multidegree(dim), Gaussian(1), k);
    return e;
}

WeylElement WeylElement::monomial(unsigned dim, const Multidegree& md, Gaussian c, int hbar_power,
                                  uint32_t order) {
    WeylElement e(dim, order);
    e.add_term(md, c, hbar_power);
    return e;
}

int WeylElement::laurent_floor() const {
    if (truncation_order_ == kUnboundedOrder) return kUnboundedFloor;
    return -2 * static_cast<int>(truncation_order_);
}

Gaussian WeylElement::coeff(const TermKey& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Gaussian() : it->second;
}

Coefficient WeylElement::coefficient(const TermKey& k) const {
    Gaussian g = coeff(k);
    return Coefficient{g.re, g.im, k.hbar_power};
}

void WeylElement::add_term(const Multidegree& md, const Gaussian& c, int hpow) {
    if (c.is_zero()) return;
    if (md.dim() != dim_) throw std::invalid_argument("WeylElement: term dimension mismatch");
    TermKey key{md, hpow};
    if (fedosov_degree(key) > truncation_order_) return;
    if (hpow < laurent_floor())
        throw std::domain_error("WeylElement: Laurent floor breached by hbar^" +
                                std::to_string(hpow));
    auto [it, inserted] = terms_.try_emplace(std::move(key), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

WeylElement WeylElement::operator-() const {
    WeylElement r(dim_, truncation_order_);
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

WeylElement WeylElement::operator+(const WeylElement& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("WeylElement: dimension mismatch");
    WeylElement r(dim_, std::min(truncation_order_, o.truncation_order_));
    for (const auto& [k, c] : terms_) r.add_term(k.degree, c, k.hbar_power);
    for (const auto& [k, c] : o.terms_) r.add_term(k.degree, c, k.hbar_power);
    return r;
}

WeylElement WeylElement::operator-(const WeylElement& o) const { return *this + (-o); }

WeylElement WeylElement::operator*(const WeylElement& o) const { return superproduct(*this, o); }

WeylElement WeylElement::scaled(const Gaussian& c) const {
    WeylElement r(dim_, truncation_order_);
    if (c.is_zero()) return r;
    for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
    return r;
}

WeylElement WeylElement::times_parameter(int k) const {
    WeylElement r(dim_, truncation_order_);
    for (const auto& [key, v] : terms_) r.add_term(key.degree, v, key.hbar_power + k);
    return r;
}

WeylElement WeylElement::truncated(uint32_t order) const {
    WeylElement r(dim_, order);
    for (const auto& [k, c] : terms_) r.add_term(k.degree, c, k.hbar_power);
    return r;
}

unsigned WeylElement::max_fedosov_degree() const {
    unsigned m = 0;
    for (const auto& [k, c] : terms_) m = std::max(m, fedosov_degree(k));
    return m;
}

WeylElement WeylElement::fedosov_part(unsigned degree) const {
    WeylElement r(dim_, truncation_order_);
    for (const auto& [k, c] : terms_)
        if (fedosov_degree(k) == degree) r.terms_.emplace(k, c);
    return r;
}

WeylElement WeylElement::y_degree_part(unsigned degree) const {
    WeylElement r(dim_, truncation_order_);
    for (const auto& [k, c] : terms_)
        if (k.degree.total_y() == degree) r.terms_.emplace(k, c);
    return r;
}

bool WeylElement::depends_on(VarKind kind) const {
    for (const auto& [k, c] : terms_) {
        switch (kind) {
            case VarKind::X:
                if (k.degree.total_x() > 0) return true;
                break;
            case VarKind::P:
                if (k.degree.total_p() > 0) return true;
                break;
            case VarKind::Y:
                if (k.degree.total_y() > 0) return true;
                break;
            case VarKind::Psi:
                if (k.degree.psi_mask() != 0) return true;
                break;
        }
    }
    return false;
}

bool WeylElement::is_base() const { return !depends_on(VarKind::Y) && !depends_on(VarKind::Psi); }

bool WeylElement::is_even() const {
    for (const auto& [k, c] : terms_)
        if (k.degree.psi_degree() % 2 != 0) return false;
    return true;
}

bool WeylElement::is_odd() const {
    for (const auto& [k, c] : terms_)
        if (k.degree.psi_degree() % 2 != 1) return false;
    return true;
}

std::pair<WeylElement, WeylElement> WeylElement::parity_split() const {
    WeylElement even(dim_, truncation_order_);
    WeylElement odd(dim_, truncation_order_);
    for (const auto& [k, c] : terms_) {
        if (k.degree.psi_degree() % 2 == 0)
            even.terms_.emplace(k, c);
        else
            odd.terms_.emplace(k, c);
    }
    return {even, odd};
}

WeylElement superproduct(const WeylElement& a, const WeylElement& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("superproduct: dimension mismatch");
    WeylElement r(a.dim(), std::min(a.truncation_order(), b.truncation_order()));
    for (const auto& [ka, ca] : a.terms()) {
        for (const auto& [kb, cb] : b.terms()) {
            uint32_t overlap = ka.degree.psi_mask() & kb.degree.psi_mask();
            if (overlap != 0) continue;  // psi^2 = 0
            Multidegree md = ka.degree.plus_commuting(kb.degree);
            int sign = merge_sign(ka.degree.psi_mask(), kb.degree.psi_mask());
            for (unsigned i = 0; i < a.dim(); ++i)
                md.set_psi(i, ka.degree.psi(i) || kb.degree.psi(i));
            Gaussian c = ca * cb;
            if (sign < 0) c = -c;
            r.add_term(md, c, ka.hbar_power + kb.hbar_power);
        }
    }
    return r;
}

WeylElement partial(const WeylElement& a, Var v) {
    if (v.index >= a.dim()) throw std::invalid_argument("partial: unknown variable slot");
    WeylElement r(a.dim(), a.truncation_order());
    for (const auto& [k, c] : a.terms()) {
        if (v.kind == VarKind::Psi) {
            if (!k.degree.psi(v.index)) continue;
            Multidegree md = k.degree;
            md.set_psi(v.index, false);
            // left derivative: pass over the psi factors below this slot
            bool neg = popcount_below(k.degree.psi_mask(), v.index) % 2 == 1;
            r.add_term(md, neg ? -c : c, k.hbar_power);
        } else {
            unsigned e = k.degree.exp(v);
            if (e == 0) continue;
            Multidegree md = k.degree;
            md.bump(v, -1);
            r.add_term(md, c * Gaussian(static_cast<long>(e)), k.hbar_power);
        }
    }
    return r;
}

WeylElement restrict_00(const WeylElement& a) {
    WeylElement r(a.dim(), a.truncation_order());
    for (const auto& [k, c] : a.terms())
        if (!k.degree.has_fiber_vars()) r.add_term(k.degree, c, k.hbar_power);
    return r;
}

std::vector<std::pair<Grading, WeylElement>> grade_split(const WeylElement& a) {
    std::map<Grading, WeylElement> parts;
    for (const auto& [k, c] : a.terms()) {
        Grading g{k.degree.total_y(), k.degree.psi_degree()};
        auto it = parts.find(g);
        if (it == parts.end())
            it = parts.emplace(g, WeylElement(a.dim(), a.truncation_order())).first;
        it->second.add_term(k.degree, c, k.hbar_power);
    }
    return {parts.begin(), parts.end()};
}

}  // namespace starq
