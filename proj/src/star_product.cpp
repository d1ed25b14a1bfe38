#include "starq/star_product.hpp"

#include <bit>
#include <stdexcept>

namespace starq {

namespace {

Rational ratio(long num, long den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Sign of sorting psi block a ahead of psi block b: (-1)^inversions.
int psi_merge_sign(uint32_t a, uint32_t b) {
    int inversions = 0;
    uint32_t rest = b;
    while (rest) {
        unsigned bit = static_cast<unsigned>(std::countr_zero(rest));
        rest &= rest - 1;
        inversions += static_cast<int>(std::popcount(a >> (bit + 1)));
    }
    return (inversions & 1) ? -1 : 1;
}

}  // namespace

WeylElement star(const StarConfig& cfg, const WeylElement& f, const WeylElement& g) {
    if (f.dim() != g.dim()) throw std::invalid_argument("star: dimension mismatch");
    const unsigned n = f.dim();
    const bool moyal = cfg.kind == StarKind::MoyalBase;
    if (moyal && (!f.is_base() || !g.is_base()))
        throw std::invalid_argument("star: Moyal product applied to an element with fiber variables");
    // Per expansion order m the scalar weight is param^m / (multiplicities),
    // where param = -i hbar/2 for the fiberwise product and lambda for Moyal.
    const Gaussian unit_step = moyal ? Gaussian(1) : Gaussian(Rational(0), Rational(-1, 2));
    const bool flip = cfg.sign == ParamSign::Minus;

    WeylElement result(n, std::min(f.truncation_order(), g.truncation_order()));

    auto upper_exp = [&](const Multidegree& md, unsigned i) {
        return moyal ? md.x_exp(i) : md.y_exp(i);
    };

    // Per pair of terms the produced monomial depends only on the number of
    // contractions t_i per dimension, not on how they split between the two
    // bidifferential directions; the split sum collapses into one weight
    // W_i(t) = sum_{j+k=t} falling(uf,j) falling(pg,j)/j! *
    //          (-1)^k falling(pf,k) falling(ug,k)/k!.
    std::vector<std::vector<Rational>> weights(n);
    std::vector<Gaussian> step_pow{Gaussian(1)};

    const uint32_t out_order = result.truncation_order();

    for (const auto& [ka, ca] : f.terms()) {
        for (const auto& [kb, cb] : g.terms()) {
            if ((ka.degree.psi_mask() & kb.degree.psi_mask()) != 0) continue;

            // cheap lower bound on the Fedosov degree any contraction of
            // this pair can reach; skips the bulk of a truncated product
            if (out_order != WeylElement::kUnboundedOrder) {
                const unsigned y0 = ka.degree.total_y() + kb.degree.total_y();
                const int base = ka.hbar_power + kb.hbar_power;
                unsigned min_deg;
                if (base >= 0) {
                    min_deg = y0 + 2u * static_cast<unsigned>(base);
                } else {
                    unsigned cap = 0;
                    for (unsigned i = 0; i < n; ++i)
                        cap += std::min(upper_exp(ka.degree, i), kb.degree.p_exp(i)) +
                               std::min(ka.degree.p_exp(i), upper_exp(kb.degree, i));
                    unsigned drop = std::min(static_cast<unsigned>(-base), cap);
                    min_deg = y0 >= drop ? y0 - drop : 0;
                }
                if (min_deg > out_order) continue;
            }

            unsigned total_max = 0;
            for (unsigned i = 0; i < n; ++i) {
                const unsigned uf = upper_exp(ka.degree, i), pg = kb.degree.p_exp(i);
                const unsigned pf = ka.degree.p_exp(i), ug = upper_exp(kb.degree, i);
                const unsigned jmax = std::min(uf, pg), kmax = std::min(pf, ug);
                auto& w = weights[i];
                w.assign(jmax + kmax + 1, Rational(0));
                Rational jterm(1);
                for (unsigned j = 0; j <= jmax; ++j) {
                    if (j > 0)
                        jterm *= ratio(static_cast<long>(uf - j + 1) *
                                           static_cast<long>(pg - j + 1),
                                       static_cast<long>(j));
                    Rational kterm(1);
                    for (unsigned k = 0; k <= kmax; ++k) {
                        if (k > 0)
                            kterm *= ratio(-static_cast<long>(pf - k + 1) *
                                               static_cast<long>(ug - k + 1),
                                           static_cast<long>(k));
                        w[j + k] += jterm * kterm;
                    }
                }
                total_max += jmax + kmax;
            }
            while (step_pow.size() <= total_max)
                step_pow.push_back(step_pow.back() * unit_step);

            Gaussian pair_coeff = ca * cb;
            if (psi_merge_sign(ka.degree.psi_mask(), kb.degree.psi_mask()) < 0)
                pair_coeff = -pair_coeff;

            Multidegree md0 = ka.degree.plus_commuting(kb.degree);
            for (unsigned i = 0; i < n; ++i)
                md0.set_psi(i, ka.degree.psi(i) || kb.degree.psi(i));
            const int base_hpow = ka.hbar_power + kb.hbar_power;

            // depth-first walk over the per-dimension contraction counts
            std::vector<unsigned> tv(n, 0);
            auto walk = [&](auto&& self, unsigned slot, unsigned m, const Rational& acc) -> void {
                if (slot == n) {
                    if (m > cfg.order) return;
                    Gaussian c = pair_coeff * Gaussian(acc) * step_pow[m];
                    if (flip && (m % 2 == 1)) c = -c;
                    if (c.is_zero()) return;
                    Multidegree md = md0;
                    for (unsigned i = 0; i < n; ++i) {
                        if (tv[i] == 0) continue;
                        unsigned u0 = moyal ? md0.x_exp(i) : md0.y_exp(i);
                        if (moyal)
                            md.set_x_exp(i, u0 - tv[i]);
                        else
                            md.set_y_exp(i, u0 - tv[i]);
                        md.set_p_exp(i, md0.p_exp(i) - tv[i]);
                    }
                    result.add_term(md, c, base_hpow + static_cast<int>(m));
                    return;
                }
                const auto& w = weights[slot];
                for (unsigned t = 0; t < w.size(); ++t) {
                    if (w[t] == 0) continue;
                    tv[slot] = t;
                    self(self, slot + 1, m + t, acc * w[t]);
                }
                tv[slot] = 0;
            };
            walk(walk, 0, 0, Rational(1));
        }
    }
    return result;
}

WeylElement commutator(const StarConfig& cfg, const WeylElement& f, const WeylElement& g) {
    auto [ge, go] = g.parity_split();
    auto [fe, fo] = f.parity_split();
    WeylElement r = star(cfg, f, g);
    r -= star(cfg, ge, f);
    r -= star(cfg, go, fe);
    r += star(cfg, go, fo);
    return r;
}

bool opposite_check(const StarConfig& cfg, const WeylElement& f, const WeylElement& g) {
    StarConfig plus = cfg;
    plus.sign = ParamSign::Plus;
    StarConfig minus = cfg;
    minus.sign = ParamSign::Minus;
    return star(plus, f, g) == star(minus, g, f);
}

namespace {

WeylElement substitute_parameter(const WeylElement& e, const Gaussian& factor) {
    WeylElement r(e.dim(), e.truncation_order());
    Gaussian inv = Gaussian(1) / factor;
    for (const auto& [k, c] : e.terms()) {
        Gaussian scale = k.hbar_power >= 0 ? factor.pow(static_cast<unsigned>(k.hbar_power))
                                           : inv.pow(static_cast<unsigned>(-k.hbar_power));
        r.add_term(k.degree, c * scale, k.hbar_power);
    }
    return r;
}

}  // namespace

WeylElement lambda_to_hbar(const WeylElement& e) {
    return substitute_parameter(e, Gaussian(Rational(0), Rational(-1, 2)));
}

WeylElement hbar_to_lambda(const WeylElement& e) {
    return substitute_parameter(e, Gaussian(Rational(0), Rational(2)));
}

}  // namespace starq
