#pragma once

#include <vector>

#include "starq/weyl_element.hpp"

namespace starq {

/// Torsion-free affine connection: Christoffel symbols Gamma^c_{ab} with
/// x-polynomial entries, symmetric in the lower pair. Entries default to
/// zero; setting (a, b) also sets (b, a), and conflicting assignments throw.
class ConnectionData {
public:
    explicit ConnectionData(unsigned dim);

    static ConnectionData flat(unsigned dim) { return ConnectionData(dim); }

    unsigned dim() const { return dim_; }

    const WeylElement& christoffel(unsigned c, unsigned a, unsigned b) const;
    void set_christoffel(unsigned c, unsigned a, unsigned b, const WeylElement& poly);

    bool is_flat() const;

private:
    std::size_t slot(unsigned c, unsigned a, unsigned b) const;

    unsigned dim_;
    std::vector<WeylElement> entries_;
    std::vector<bool> assigned_;
};

/// Curvature R^d_{abc}, antisymmetric in the last two lower indices.
class CurvatureTensor {
public:
    explicit CurvatureTensor(unsigned dim);

    unsigned dim() const { return dim_; }
    const WeylElement& entry(unsigned d, unsigned a, unsigned b, unsigned c) const;
    void set_entry(unsigned d, unsigned a, unsigned b, unsigned c, const WeylElement& poly);
    bool is_zero() const;

private:
    unsigned dim_;
    std::vector<WeylElement> entries_;
};

/// R^i_{jkl} = d Gamma^i_{jl}/dx^k - d Gamma^i_{jk}/dx^l
///           + Gamma^i_{mk} Gamma^m_{jl} - Gamma^i_{ml} Gamma^m_{jk}.
CurvatureTensor curvature(const ConnectionData& conn);

}  // namespace starq
