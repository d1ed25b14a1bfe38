#include "starq/connection.hpp"

#include <stdexcept>

namespace starq {

ConnectionData::ConnectionData(unsigned dim)
    : dim_(dim),
      entries_(static_cast<std::size_t>(dim) * dim * dim, WeylElement::zero(dim)),
      assigned_(entries_.size(), false) {
    if (dim == 0 || dim > Multidegree::kMaxDim)
        throw std::invalid_argument("ConnectionData: dim out of range");
}

std::size_t ConnectionData::slot(unsigned c, unsigned a, unsigned b) const {
    return (static_cast<std::size_t>(c) * dim_ + a) * dim_ + b;
}

const WeylElement& ConnectionData::christoffel(unsigned c, unsigned a, unsigned b) const {
    if (c >= dim_ || a >= dim_ || b >= dim_)
        throw std::invalid_argument("ConnectionData: index out of range");
    return entries_[slot(c, a, b)];
}

void ConnectionData::set_christoffel(unsigned c, unsigned a, unsigned b, const WeylElement& poly) {
    if (c >= dim_ || a >= dim_ || b >= dim_)
        throw std::invalid_argument("ConnectionData: index out of range");
    if (poly.dim() != dim_) throw std::invalid_argument("ConnectionData: entry dimension mismatch");
    if (poly.depends_on(VarKind::P) || poly.depends_on(VarKind::Y) || poly.depends_on(VarKind::Psi))
        throw std::invalid_argument("ConnectionData: christoffel entries must be x-polynomials");
    std::size_t s1 = slot(c, a, b), s2 = slot(c, b, a);
    if ((assigned_[s1] && !(entries_[s1] == poly)) || (assigned_[s2] && !(entries_[s2] == poly)))
        throw std::invalid_argument("ConnectionData: conflicting symmetric entries");
    entries_[s1] = poly;
    entries_[s2] = poly;
    assigned_[s1] = assigned_[s2] = true;
}

bool ConnectionData::is_flat() const {
    return curvature(*this).is_zero();
}

CurvatureTensor::CurvatureTensor(unsigned dim)
    : dim_(dim),
      entries_(static_cast<std::size_t>(dim) * dim * dim * dim, WeylElement::zero(dim)) {}

const WeylElement& CurvatureTensor::entry(unsigned d, unsigned a, unsigned b, unsigned c) const {
    return entries_[((static_cast<std::size_t>(d) * dim_ + a) * dim_ + b) * dim_ + c];
}

void CurvatureTensor::set_entry(unsigned d, unsigned a, unsigned b, unsigned c,
                                const WeylElement& poly) {
    entries_[((static_cast<std::size_t>(d) * dim_ + a) * dim_ + b) * dim_ + c] = poly;
}

bool CurvatureTensor::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

CurvatureTensor curvature(const ConnectionData& conn) {
    const unsigned n = conn.dim();
    CurvatureTensor R(n);
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = 0; j < n; ++j) {
            for (unsigned k = 0; k < n; ++k) {
                for (unsigned l = 0; l < n; ++l) {
                    WeylElement e = partial(conn.christoffel(i, j, l), Var{VarKind::X, k}) -
                                    partial(conn.christoffel(i, j, k), Var{VarKind::X, l});
                    for (unsigned m = 0; m < n; ++m) {
                        e += conn.christoffel(i, m, k) * conn.christoffel(m, j, l);
                        e -= conn.christoffel(i, m, l) * conn.christoffel(m, j, k);
                    }
                    R.set_entry(i, j, k, l, e);
                }
            }
        }
    }
    return R;
}

}  // namespace starq
