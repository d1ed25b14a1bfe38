#pragma once

#include "starq/weyl_element.hpp"

namespace starq {

enum class StarKind : uint8_t { WeylFiberwise, MoyalBase };
enum class ParamSign : uint8_t { Plus, Minus };

/// Selects one of the two concrete star products. `order` caps the
/// bidifferential expansion; polynomial inputs terminate on their own, so it
/// acts as a safety bound only. `sign` flips the deformation parameter
/// (star_{-hbar} / star_{-lambda}).
struct StarConfig {
    StarKind kind = StarKind::MoyalBase;
    uint32_t order = 64;
    ParamSign sign = ParamSign::Plus;

    static StarConfig moyal(ParamSign s = ParamSign::Plus) {
        return StarConfig{StarKind::MoyalBase, 64, s};
    }
    static StarConfig weyl(ParamSign s = ParamSign::Plus) {
        return StarConfig{StarKind::WeylFiberwise, 64, s};
    }
};

/// f star g. WeylFiberwise couples left-factor y with right-factor p (and
/// left p with right y, negatively), weighted (-i hbar/2)^k; MoyalBase
/// couples x with p across factors, weighted lambda^k. Psi factors are inert
/// under the bidifferential operator and multiply supercommutatively.
WeylElement star(const StarConfig& cfg, const WeylElement& f, const WeylElement& g);

/// Super-bracket: star(f,g) - (-1)^{|f||g|} star(g,f) on homogeneous
/// parities, extended bilinearly (anticommutator when both sides are odd).
WeylElement commutator(const StarConfig& cfg, const WeylElement& f, const WeylElement& g);

/// Whether f star_{+} g equals g star_{-} f; holds for even elements.
bool opposite_check(const StarConfig& cfg, const WeylElement& f, const WeylElement& g);

/// Substitute lambda -> -(i/2) hbar: reinterprets a MoyalBase-convention
/// element in the WeylFiberwise convention (exponents kept, scalars scaled).
WeylElement lambda_to_hbar(const WeylElement& e);
/// Substitute hbar -> 2i lambda, the inverse conversion.
WeylElement hbar_to_lambda(const WeylElement& e);

}  // namespace starq
