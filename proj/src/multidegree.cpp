#include "starq/multidegree.hpp"

#include <bit>
#include <stdexcept>

namespace starq {

Multidegree::Multidegree(unsigned dim) : dim_(dim), exps_(3 * dim, 0) {
    if (dim == 0 || dim > kMaxDim) throw std::invalid_argument("Multidegree: dim out of range");
}

void Multidegree::set_psi(unsigned i, bool on) {
    if (on)
        psi_mask_ |= (1u << i);
    else
        psi_mask_ &= ~(1u << i);
}

unsigned Multidegree::exp(Var v) const {
    switch (v.kind) {
        case VarKind::X: return x_exp(v.index);
        case VarKind::P: return p_exp(v.index);
        case VarKind::Y: return y_exp(v.index);
        case VarKind::Psi: return psi(v.index) ? 1 : 0;
    }
    return 0;
}

void Multidegree::bump(Var v, int delta) {
    unsigned cur = exp(v);
    unsigned next = static_cast<unsigned>(static_cast<int>(cur) + delta);
    switch (v.kind) {
        case VarKind::X: set_x_exp(v.index, next); break;
        case VarKind::P: set_p_exp(v.index, next); break;
        case VarKind::Y: set_y_exp(v.index, next); break;
        case VarKind::Psi: set_psi(v.index, next != 0); break;
    }
}

unsigned Multidegree::total_x() const {
    unsigned t = 0;
    for (unsigned i = 0; i < dim_; ++i) t += exps_[i];
    return t;
}

unsigned Multidegree::total_p() const {
    unsigned t = 0;
    for (unsigned i = 0; i < dim_; ++i) t += exps_[dim_ + i];
    return t;
}

unsigned Multidegree::total_y() const {
    unsigned t = 0;
    for (unsigned i = 0; i < dim_; ++i) t += exps_[2 * dim_ + i];
    return t;
}

unsigned Multidegree::psi_degree() const { return static_cast<unsigned>(std::popcount(psi_mask_)); }

Multidegree Multidegree::plus_commuting(const Multidegree& o) const {
    Multidegree r(dim_);
    for (unsigned i = 0; i < 3 * dim_; ++i)
        r.exps_[i] = static_cast<uint16_t>(exps_[i] + o.exps_[i]);
    return r;
}

std::strong_ordering Multidegree::operator<=>(const Multidegree& o) const {
    if (auto c = total_degree() <=> o.total_degree(); c != 0) return c;
    if (auto c = exps_ <=> o.exps_; c != 0) return c;
    return psi_mask_ <=> o.psi_mask_;
}

unsigned popcount_below(uint32_t mask, unsigned i) {
    uint32_t below = (i == 0) ? 0u : (mask & ((1u << i) - 1u));
    return static_cast<unsigned>(std::popcount(below));
}

}  // namespace starq
