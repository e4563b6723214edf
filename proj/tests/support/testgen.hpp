#pragma once

// Deterministic random instance generators shared by the unit and acceptance
// suites. Everything is seeded; no test depends on wall-clock entropy.

#include "drheights/gf.hpp"
#include "drheights/ore.hpp"
#include "drheights/poly.hpp"
#include "drheights/ratfunc.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace drhtest {

using namespace drh;

struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}
    std::int64_t range(std::int64_t lo, std::int64_t hi) {  // inclusive
        return lo + std::int64_t(eng() % std::uint64_t(hi - lo + 1));
    }
    bool chance(double p) {
        return double(eng() % 1000000) < p * 1000000.0;
    }
};

inline FqElem rand_elem(const Fq& f, Rng& rng) {
    return f.from_index(rng.range(0, f.q() - 1));
}

inline FqElem rand_nonzero_elem(const Fq& f, Rng& rng) {
    return f.from_index(rng.range(1, f.q() - 1));
}

/// Dense-ish polynomial of degree <= max_deg (possibly zero).
inline FqPoly rand_poly(const Fq& f, Rng& rng, int max_deg) {
    std::vector<FqElem> c;
    int d = int(rng.range(0, max_deg));
    for (int i = 0; i <= d; ++i) c.push_back(rand_elem(f, rng));
    return FqPoly::from_coeffs(f, c);
}

inline FqPoly rand_nonzero_poly(const Fq& f, Rng& rng, int max_deg) {
    for (;;) {
        FqPoly p = rand_poly(f, rng, max_deg);
        if (!p.is_zero()) return p;
    }
}

inline FqPoly rand_monic_poly(const Fq& f, Rng& rng, int deg) {
    std::vector<FqElem> c;
    for (int i = 0; i < deg; ++i) c.push_back(rand_elem(f, rng));
    c.push_back(f.one());
    return FqPoly::from_coeffs(f, c);
}

/// Sparse rational function: one- or two-term numerator and denominator of
/// small T-degree. This is the coefficient shape the twisted-polynomial
/// suites run on (products twist exponents up, so inputs stay lean).
inline RatFunc rand_sparse_ratfunc(const Fq& f, Rng& rng, int max_deg = 2,
                                   bool allow_zero = true) {
    auto sparse_poly = [&](bool nonzero) {
        for (;;) {
            FqPoly p = FqPoly::zero(f);
            int terms = int(rng.range(1, 2));
            for (int t = 0; t < terms; ++t)
                p = p + FqPoly::monomial(f, rng.range(0, max_deg),
                                         rand_elem(f, rng));
            if (!nonzero || !p.is_zero()) return p;
        }
    };
    if (allow_zero && rng.chance(0.1)) return RatFunc::zero(f);
    FqPoly num = sparse_poly(true);
    FqPoly den = rng.chance(0.4) ? sparse_poly(true) : FqPoly::one(f);
    return RatFunc(num, den);
}

inline RatFunc rand_nonzero_sparse_ratfunc(const Fq& f, Rng& rng,
                                           int max_deg = 2) {
    for (;;) {
        RatFunc x = rand_sparse_ratfunc(f, rng, max_deg);
        if (!x.is_zero()) return x;
    }
}

/// Twisted polynomial with sparse K0 coefficients.
inline TwistedPoly rand_twisted(const Fq& f, Rng& rng, int max_deg_tau,
                                bool separable = false, int coeff_deg = 2) {
    int d = int(rng.range(0, max_deg_tau));
    std::vector<RatFunc> c(std::size_t(d) + 1, RatFunc::zero(f));
    for (int i = 0; i <= d; ++i) c[std::size_t(i)] = rand_sparse_ratfunc(f, rng, coeff_deg);
    if (c.back().is_zero()) c.back() = rand_nonzero_sparse_ratfunc(f, rng, coeff_deg);
    if (separable && c[0].is_zero())
        c[0] = rand_nonzero_sparse_ratfunc(f, rng, coeff_deg);
    return TwistedPoly(f, c);
}

inline TwistedPoly rand_nonzero_twisted(const Fq& f, Rng& rng, int max_deg_tau,
                                        bool separable = false,
                                        int coeff_deg = 2) {
    for (;;) {
        TwistedPoly t = rand_twisted(f, rng, max_deg_tau, separable, coeff_deg);
        if (!t.is_zero()) return t;
    }
}

/// The small fields the randomized suites draw from.
inline std::vector<Fq> small_fields() {
    return {Fq(2, 1), Fq(3, 1), Fq(2, 2), Fq(5, 1)};
}

}  // namespace drhtest
