#pragma once

#include "drheights/errors.hpp"
#include "drheights/poly.hpp"
#include "drheights/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace drh {

/// Default PRNG seed for the equal-degree splitting step. Factorization is a
/// deterministic function of (input, seed).
inline constexpr std::uint64_t kDefaultFactorSeed = 0x5D1F00D5EEDULL;

namespace detail {

// Factorization works on a dense coefficient vector; inputs are expected to
// have modest essential degree once trailing powers of T are stripped.
inline constexpr std::int64_t kMaxFactorDegree = 1 << 20;

struct Dense {
    Fq field;
    std::vector<FqElem> c;  // c[i] = coefficient of T^i; trimmed

    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
    std::int64_t deg() const { return std::int64_t(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    bool is_one() const { return c.size() == 1 && c[0].is_one(); }
    static Dense one(const Fq& f) { return {f, {f.one()}}; }
    static Dense x(const Fq& f) { return {f, {f.zero(), f.one()}}; }

    Dense monic() const {
        Dense r = *this;
        if (r.is_zero() || r.c.back().is_one()) return r;
        FqElem inv = r.c.back().inv();
        for (auto& a : r.c) a = a * inv;
        return r;
    }
};

inline Dense dense_mul(const Dense& a, const Dense& b) {
    if (a.is_zero() || b.is_zero()) return {a.field, {}};
    Dense r{a.field, std::vector<FqElem>(a.c.size() + b.c.size() - 1,
                                         a.field.zero())};
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
    }
    r.trim();
    return r;
}

inline Dense dense_rem(Dense a, const Dense& b) {
    const FqElem lc_inv = b.c.back().inv();
    while (std::int64_t(a.c.size()) >= std::int64_t(b.c.size())) {
        FqElem f = a.c.back() * lc_inv;
        std::size_t shift = a.c.size() - b.c.size();
        for (std::size_t i = 0; i < b.c.size(); ++i)
            a.c[shift + i] = a.c[shift + i] - f * b.c[i];
        a.trim();
        if (a.is_zero()) break;
    }
    return a;
}

inline Dense dense_div(Dense a, const Dense& b) {
    const FqElem lc_inv = b.c.back().inv();
    if (a.c.size() < b.c.size()) return {a.field, {}};
    Dense q{a.field,
            std::vector<FqElem>(a.c.size() - b.c.size() + 1, a.field.zero())};
    while (std::int64_t(a.c.size()) >= std::int64_t(b.c.size())) {
        FqElem f = a.c.back() * lc_inv;
        std::size_t shift = a.c.size() - b.c.size();
        q.c[shift] = f;
        for (std::size_t i = 0; i < b.c.size(); ++i)
            a.c[shift + i] = a.c[shift + i] - f * b.c[i];
        a.trim();
        if (a.is_zero()) break;
    }
    q.trim();
    return q;
}

inline Dense dense_gcd(Dense a, Dense b) {
    while (!b.is_zero()) {
        Dense r = dense_rem(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

inline Dense dense_mulmod(const Dense& a, const Dense& b, const Dense& mod) {
    return dense_rem(dense_mul(a, b), mod);
}

inline Dense dense_powmod(Dense base, BigInt e, const Dense& mod) {
    Dense r = Dense::one(base.field);
    base = dense_rem(std::move(base), mod);
    while (e > 0) {
        if ((e & 1) != 0) r = dense_mulmod(r, base, mod);
        base = dense_mulmod(base, base, mod);
        e >>= 1;
    }
    return r;
}

inline Dense dense_derivative(const Dense& a) {
    Dense r{a.field, {}};
    if (a.c.size() <= 1) return r;
    r.c.resize(a.c.size() - 1, a.field.zero());
    for (std::size_t i = 1; i < a.c.size(); ++i)
        r.c[i - 1] = a.c[i] * a.field.from_int(std::int64_t(i));
    r.trim();
    return r;
}

/// p-th root of a polynomial of the form g(T^p); coefficientwise roots are
/// c^(p^(m-1)) since c^q = c on F_q.
inline Dense dense_pth_root(const Dense& a) {
    const std::int64_t p = a.field.p();
    const int m = a.field.m();
    Dense r{a.field, {}};
    r.c.resize(a.c.size() / std::size_t(p) + 1, a.field.zero());
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i].is_zero()) continue;
        FqElem root = a.c[i];
        for (int k = 0; k < m - 1; ++k) root = root.pow(p);
        r.c[i / std::size_t(p)] = root;
    }
    r.trim();
    return r;
}

inline void squarefree_decompose(const Dense& f,
                                 std::vector<std::pair<Dense, int>>& out,
                                 int mult) {
    if (f.deg() <= 0) return;
    // Yun's algorithm adapted to characteristic p
    Dense d = dense_derivative(f);
    if (d.is_zero()) {
        squarefree_decompose(dense_pth_root(f), out, mult * int(f.field.p()));
        return;
    }
    Dense c = dense_gcd(f, d);
    Dense w = dense_div(f, c);
    int i = 1;
    while (!w.is_one()) {
        Dense y = dense_gcd(w, c);
        Dense part = dense_div(w, y);
        if (!part.is_one()) out.push_back({part.monic(), mult * i});
        w = std::move(y);
        c = dense_div(c, w);
        ++i;
    }
    if (!c.is_one())
        squarefree_decompose(dense_pth_root(c), out, mult * int(f.field.p()));
}

/// Equal-degree splitting of a squarefree product of degree-d irreducibles.
inline void equal_degree_split(const Dense& f, std::int64_t d,
                               std::mt19937_64& rng,
                               std::vector<Dense>& out) {
    if (f.deg() == d) {
        out.push_back(f);
        return;
    }
    const Fq& field = f.field;
    const std::int64_t q = field.q();
    while (true) {
        // random polynomial of degree < deg f
        Dense r{field, {}};
        r.c.resize(std::size_t(f.deg()), field.zero());
        for (auto& a : r.c)
            a = field.from_index(std::int64_t(rng() % std::uint64_t(q)));
        r.trim();
        if (r.is_zero() || r.deg() == 0) continue;
        Dense g = dense_gcd(r, f);
        if (g.deg() > 0 && g.deg() < f.deg()) {
            equal_degree_split(g, d, rng, out);
            equal_degree_split(dense_div(f, g), d, rng, out);
            return;
        }
        Dense t{field, {}};
        if (field.p() == 2) {
            // trace map sum_{i<d*log2(q)} r^(2^i)
            int s = 0;
            for (std::int64_t v = q; v > 1; v >>= 1) ++s;
            Dense acc = dense_rem(r, f);
            Dense cur = acc;
            for (std::int64_t i = 1; i < d * s; ++i) {
                cur = dense_mulmod(cur, cur, f);
                for (std::size_t k = 0; k < cur.c.size(); ++k) {
                    if (k < acc.c.size())
                        acc.c[k] = acc.c[k] + cur.c[k];
                    else
                        acc.c.push_back(cur.c[k]);
                }
                acc.trim();
            }
            t = acc;
        } else {
            BigInt e = (pow_bigint(BigInt(q), d) - 1) / 2;
            t = dense_powmod(r, e, f);
            if (t.c.empty())
                t.c.push_back(-field.one());
            else
                t.c[0] = t.c[0] - field.one();
            t.trim();
        }
        g = dense_gcd(t, f);
        if (g.deg() > 0 && g.deg() < f.deg()) {
            equal_degree_split(g, d, rng, out);
            equal_degree_split(dense_div(f, g), d, rng, out);
            return;
        }
    }
}

inline Dense to_dense(const FqPoly& f) {
    if (f.degree() > kMaxFactorDegree)
        throw UnsupportedSizeError(
            "polynomial degree too large for factorization");
    Dense d{f.field(), {}};
    d.c.resize(std::size_t(f.degree() + 1), f.field().zero());
    for (auto& [e, c] : f.terms()) d.c[std::size_t(e)] = c;
    return d;
}

inline FqPoly from_dense(const Dense& d) {
    return FqPoly::from_coeffs(d.field, d.c);
}

/// Order for the canonical factor list: degree first, then coefficients
/// compared from the leading end down.
inline bool poly_less(const FqPoly& a, const FqPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (std::int64_t e = a.degree(); e >= 0; --e) {
        auto ca = a.coeff(e).value(), cb = b.coeff(e).value();
        if (ca != cb) return ca < cb;
    }
    return false;
}

}  // namespace detail

struct FactorList {
    FqElem unit;
    // monic irreducible factors with multiplicities
    std::vector<std::pair<FqPoly, std::int64_t>> factors;
};

/// Complete factorization over F_q: squarefree decomposition, distinct-degree
/// splitting, then randomized equal-degree splitting driven by a seeded PRNG.
/// The factor list is sorted by (degree, lexicographic coefficient order), so
/// the result is a deterministic function of (f, seed).
inline FactorList factorize(const FqPoly& f,
                            std::uint64_t seed = kDefaultFactorSeed) {
    if (f.is_zero()) throw ZeroPolynomialError("factorize(0)");
    const Fq& field = f.field();
    FactorList out{f.leading_coeff(), {}};
    // trailing T^k splits off without densifying anything
    const std::int64_t tk = f.trailing_exponent();
    FqPoly core = f.shifted(-tk).make_monic();
    if (tk > 0) out.factors.push_back({FqPoly::variable(field), tk});
    if (!core.is_constant()) {
        std::mt19937_64 rng(seed);
        std::vector<std::pair<detail::Dense, int>> squarefree;
        detail::squarefree_decompose(detail::to_dense(core), squarefree, 1);
        for (auto& [part, mult] : squarefree) {
            // distinct-degree: peel factors of increasing degree
            detail::Dense rest = part;
            detail::Dense h = detail::Dense::x(field);
            std::int64_t d = 0;
            std::vector<std::pair<detail::Dense, std::int64_t>> stages;
            while (rest.deg() > 0) {
                ++d;
                if (2 * d > rest.deg()) {
                    stages.push_back({rest, rest.deg()});
                    break;
                }
                h = detail::dense_powmod(h, BigInt(field.q()), rest);
                detail::Dense hx = h;
                if (hx.c.size() < 2) hx.c.resize(2, field.zero());
                hx.c[1] = hx.c[1] - field.one();
                hx.trim();
                detail::Dense g = detail::dense_gcd(hx, rest);
                if (g.deg() > 0) {
                    stages.push_back({g, d});
                    rest = detail::dense_div(rest, g);
                    h = detail::dense_rem(std::move(h), rest);
                }
            }
            for (auto& [product, deg] : stages) {
                std::vector<detail::Dense> irred;
                detail::equal_degree_split(product, deg, rng, irred);
                for (auto& g : irred)
                    out.factors.push_back({detail::from_dense(g), mult});
            }
        }
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) {
                  return detail::poly_less(a.first, b.first);
              });
    return out;
}

/// Deterministic irreducibility test (Rabin): T^(q^n) = T mod f and, for each
/// prime divisor l of n, gcd(T^(q^(n/l)) - T, f) = 1.
inline bool is_irreducible(const FqPoly& f) {
    if (f.is_zero() || f.is_constant()) return false;
    if (f.degree() == 1) return true;
    if (f.trailing_exponent() > 0) return false;  // divisible by T
    const Fq& field = f.field();
    detail::Dense df = detail::to_dense(f).monic();
    const std::int64_t n = df.deg();
    std::vector<std::int64_t> prime_divs;
    std::int64_t nn = n;
    for (std::int64_t d = 2; d * d <= nn; ++d)
        if (nn % d == 0) {
            prime_divs.push_back(d);
            while (nn % d == 0) nn /= d;
        }
    if (nn > 1) prime_divs.push_back(nn);

    // iterated Frobenius powers of T modulo f
    std::vector<detail::Dense> frob(std::size_t(n) + 1, detail::Dense::x(field));
    for (std::int64_t k = 1; k <= n; ++k)
        frob[std::size_t(k)] =
            detail::dense_powmod(frob[std::size_t(k - 1)], BigInt(field.q()), df);
    auto minus_x = [&](detail::Dense h) {
        if (h.c.size() < 2) h.c.resize(2, field.zero());
        h.c[1] = h.c[1] - field.one();
        h.trim();
        return h;
    };
    if (!minus_x(frob[std::size_t(n)]).is_zero()) return false;
    for (std::int64_t l : prime_divs) {
        detail::Dense g = detail::dense_gcd(minus_x(frob[std::size_t(n / l)]), df);
        if (g.deg() != 0) return false;
    }
    return true;
}

}  // namespace drh
