#pragma once

#include <random>
#include <span>

#include "starq/weyl_element.hpp"

namespace starq {

/// Deterministic generator for random polynomial elements; everything a
/// scenario or test randomizes flows through one seeded engine.
class RandomGen {
public:
    explicit RandomGen(uint64_t seed) : rng_(seed) {}

    long int_in(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(rng_);
    }

    Rational rational() {
        long num = int_in(-4, 4);
        if (num == 0) num = 1;
        long den = int_in(1, 3);
        Rational q(num, den);
        q.canonicalize();
        return q;
    }

    Gaussian scalar(bool complex_ok = false) {
        if (complex_ok && int_in(0, 2) == 0) return Gaussian(rational(), rational());
        return Gaussian(rational());
    }

    /// Sparse polynomial in the listed variable slots: `terms` draws of a
    /// monomial with total degree <= max_degree plus a small coefficient.
    /// Psi slots contribute occupancy 0/1. Parameter powers drawn uniformly
    /// in [lambda_min, lambda_max].
    WeylElement poly(unsigned dim, std::span<const Var> vars, unsigned max_degree, unsigned terms,
                     int lambda_min = 0, int lambda_max = 0, bool complex_ok = false) {
        WeylElement e(dim);
        for (unsigned t = 0; t < terms; ++t) {
            Multidegree md(dim);
            unsigned budget = max_degree;
            for (const Var& v : vars) {
                unsigned cap = (v.kind == VarKind::Psi) ? 1u : budget;
                unsigned exp = static_cast<unsigned>(int_in(0, static_cast<long>(std::min(cap, budget))));
                if (exp == 0) continue;
                md.bump(v, static_cast<int>(exp));
                budget -= exp;
            }
            int lp = static_cast<int>(int_in(lambda_min, lambda_max));
            e.add_term(md, scalar(complex_ok), lp);
        }
        return e;
    }

private:
    std::mt19937_64 rng_;
};

}  // namespace starq
