#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace starq {

enum class VarKind : uint8_t { X, P, Y, Psi };

/// Identifies one coordinate slot: kind and 0-based index below the dimension.
struct Var {
    VarKind kind;
    unsigned index;
};

/// Exponent vector of one monomial in x, p, y (commuting) and psi
/// (anticommuting, held as an occupancy bitset so a repeated psi slot is
/// unrepresentable). All exponent vectors have length dim.
class Multidegree {
public:
    static constexpr unsigned kMaxDim = 32;

    explicit Multidegree(unsigned dim);

    unsigned dim() const { return dim_; }

    unsigned x_exp(unsigned i) const { return exps_[i]; }
    unsigned p_exp(unsigned i) const { return exps_[dim_ + i]; }
    unsigned y_exp(unsigned i) const { return exps_[2 * dim_ + i]; }
    bool psi(unsigned i) const { return (psi_mask_ >> i) & 1u; }
    uint32_t psi_mask() const { return psi_mask_; }

    void set_x_exp(unsigned i, unsigned e) { exps_[i] = static_cast<uint16_t>(e); }
    void set_p_exp(unsigned i, unsigned e) { exps_[dim_ + i] = static_cast<uint16_t>(e); }
    void set_y_exp(unsigned i, unsigned e) { exps_[2 * dim_ + i] = static_cast<uint16_t>(e); }
    void set_psi(unsigned i, bool on);

    unsigned exp(Var v) const;
    void bump(Var v, int delta);

    unsigned total_x() const;
    unsigned total_p() const;
    unsigned total_y() const;
    unsigned psi_degree() const;
    unsigned total_degree() const { return total_x() + total_p() + total_y() + psi_degree(); }

    bool is_constant() const { return total_degree() == 0; }
    bool has_fiber_vars() const { return total_y() > 0 || psi_mask_ != 0; }

    /// Commuting parts added, psi merged by the caller (sign handling lives
    /// with the element arithmetic).
    Multidegree plus_commuting(const Multidegree& o) const;

    bool operator==(const Multidegree& o) const {
        return dim_ == o.dim_ && exps_ == o.exps_ && psi_mask_ == o.psi_mask_;
    }

    /// Graded-lex: total degree first, then x, p, y exponent blocks
    /// lexicographically, then the psi mask.
    std::strong_ordering operator<=>(const Multidegree& o) const;

private:
    unsigned dim_;
    std::vector<uint16_t> exps_;  // x | p | y blocks, each of length dim_
    uint32_t psi_mask_ = 0;
};

/// Number of set bits in mask strictly below slot i.
unsigned popcount_below(uint32_t mask, unsigned i);

}  // namespace starq
