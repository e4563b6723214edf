#pragma once

#include "drheights/errors.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace drh {

namespace detail {

// Largest supported field cardinality. T-degree exponents produced by the
// q-power twist are kept in 64-bit integers with checked multiplication, so
// q itself must stay small; polygon slopes q^i are unbounded big integers.
inline constexpr std::int64_t kMaxCardinality = std::int64_t(1) << 20;

inline bool is_prime_int(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Dense polynomials over Z/p, used only for modulus validation.
using PPoly = std::vector<std::int64_t>;

inline void ppoly_trim(PPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline PPoly ppoly_rem(PPoly f, const PPoly& g, std::int64_t p) {
    // g monic is not assumed; leading coefficient inverted via Fermat.
    auto inv_mod = [p](std::int64_t a) {
        std::int64_t r = 1, b = a % p, e = p - 2;
        while (e > 0) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    };
    const std::int64_t lc_inv = inv_mod(g.back());
    while (f.size() >= g.size()) {
        std::int64_t c = f.back() * lc_inv % p;
        const std::size_t shift = f.size() - g.size();
        for (std::size_t i = 0; i < g.size(); ++i) {
            f[shift + i] = ((f[shift + i] - c * g[i]) % p + p) % p;
        }
        ppoly_trim(f);
        if (f.empty()) break;
    }
    return f;
}

/// Irreducibility over Z/p by trial division against every monic polynomial
/// of degree at most deg(f)/2. Adequate because q = p^m is capped.
inline bool ppoly_irreducible(const PPoly& f, std::int64_t p) {
    const std::size_t n = f.size() - 1;
    if (n == 0) return false;
    if (n == 1) return true;
    for (std::size_t d = 1; 2 * d <= n; ++d) {
        // enumerate monic divisors of degree d by counting in base p
        std::vector<std::int64_t> digits(d, 0);
        while (true) {
            PPoly g(digits.begin(), digits.end());
            g.push_back(1);
            if (ppoly_rem(f, g, p).empty()) return false;
            std::size_t i = 0;
            while (i < d && ++digits[i] == p) digits[i++] = 0;
            if (i == d) break;
        }
    }
    return true;
}

/// Immutable description of F_q, q = p^m, shared by all values built on it.
struct FqCore {
    std::int64_t p = 0;
    int m = 1;
    std::int64_t q = 0;
    // modulus digits c_0..c_m (monic irreducible over Z/p); empty when m == 1
    std::vector<std::int64_t> modulus;

    void unpack(std::uint64_t v, std::int64_t* digits) const {
        for (int i = 0; i < m; ++i) {
            digits[i] = std::int64_t(v % std::uint64_t(p));
            v /= std::uint64_t(p);
        }
    }
    std::uint64_t pack(const std::int64_t* digits) const {
        std::uint64_t v = 0;
        for (int i = m - 1; i >= 0; --i)
            v = v * std::uint64_t(p) + std::uint64_t(digits[i]);
        return v;
    }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::int64_t da[64], db[64];
        unpack(a, da);
        unpack(b, db);
        for (int i = 0; i < m; ++i) da[i] = (da[i] + db[i]) % p;
        return pack(da);
    }
    std::uint64_t neg(std::uint64_t a) const {
        std::int64_t da[64];
        unpack(a, da);
        for (int i = 0; i < m; ++i) da[i] = (p - da[i]) % p;
        return pack(da);
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
        return add(a, neg(b));
    }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        if (m == 1) return a * b % std::uint64_t(p);
        std::int64_t da[64], db[64], prod[128] = {0};
        unpack(a, da);
        unpack(b, db);
        for (int i = 0; i < m; ++i) {
            if (da[i] == 0) continue;
            for (int j = 0; j < m; ++j)
                prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
        }
        // reduce modulo the (monic) defining polynomial
        for (int k = 2 * m - 2; k >= m; --k) {
            const std::int64_t c = prod[k];
            if (c == 0) continue;
            prod[k] = 0;
            for (int j = 0; j < m; ++j)
                prod[k - m + j] = ((prod[k - m + j] - c * modulus[j]) % p + p) % p;
        }
        return pack(prod);
    }
    std::uint64_t pow(std::uint64_t a, std::int64_t e) const {
        std::uint64_t r = 1 % std::uint64_t(q);
        r = 1;  // q >= 2
        std::uint64_t b = a;
        while (e > 0) {
            if (e & 1) r = mul(r, b);
            b = mul(b, b);
            e >>= 1;
        }
        return r;
    }
    std::uint64_t inv(std::uint64_t a) const {
        if (a == 0) throw DivisionByZeroError("inverse of zero field element");
        return pow(a, q - 2);
    }

    bool same_field(const FqCore& o) const {
        return p == o.p && m == o.m && modulus == o.modulus;
    }
};

}  // namespace detail

class Fq;

/// Element of F_q. Holds a pointer to its field; the Fq context must outlive
/// every element created from it.
class FqElem {
public:
    FqElem() : core_(nullptr), v_(0) {}
    FqElem(const detail::FqCore* core, std::uint64_t v) : core_(core), v_(v) {}

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    std::uint64_t value() const { return v_; }
    const detail::FqCore* core() const { return core_; }

    FqElem operator-() const { return {core_, core_->neg(v_)}; }
    FqElem inv() const { return {core_, core_->inv(v_)}; }
    FqElem pow(std::int64_t e) const {
        if (e < 0) return inv().pow(-e);
        return {core_, core_->pow(v_, e)};
    }

    /// a^(q^k): the k-fold q-power Frobenius.
    FqElem frobenius(int k) const {
        FqElem r = *this;
        for (int i = 0; i < k; ++i) r = r.pow(core_->q);
        return r;
    }

    friend FqElem operator+(const FqElem& a, const FqElem& b) {
        check(a, b);
        return {a.core_, a.core_->add(a.v_, b.v_)};
    }
    friend FqElem operator-(const FqElem& a, const FqElem& b) {
        check(a, b);
        return {a.core_, a.core_->sub(a.v_, b.v_)};
    }
    friend FqElem operator*(const FqElem& a, const FqElem& b) {
        check(a, b);
        return {a.core_, a.core_->mul(a.v_, b.v_)};
    }
    friend FqElem operator/(const FqElem& a, const FqElem& b) {
        check(a, b);
        return {a.core_, a.core_->mul(a.v_, b.core_->inv(b.v_))};
    }
    friend bool operator==(const FqElem& a, const FqElem& b) {
        check(a, b);
        return a.v_ == b.v_;
    }
    friend bool operator!=(const FqElem& a, const FqElem& b) { return !(a == b); }

    /// Coefficients in the polynomial basis, constant digit first.
    std::vector<std::int64_t> digits() const {
        std::int64_t d[64];
        core_->unpack(v_, d);
        return {d, d + core_->m};
    }

    std::string to_string() const;

private:
    static void check(const FqElem& a, const FqElem& b) {
        if (a.core_ == nullptr || b.core_ == nullptr ||
            !a.core_->same_field(*b.core_))
            throw MismatchedContextError("field elements from different contexts");
    }
    const detail::FqCore* core_;
    std::uint64_t v_;
};

/// The finite field F_q, q = p^m. Extension fields (m > 1) use an explicit
/// monic irreducible modulus, supplied by the caller or looked up in a small
/// built-in table (p <= 7, m <= 3); the modulus is re-verified irreducible by
/// trial factorization either way.
class Fq {
public:
    Fq(std::int64_t p, int m) : Fq(p, m, builtin_modulus(p, m)) {}

    Fq(std::int64_t p, int m, std::vector<std::int64_t> modulus) {
        if (!detail::is_prime_int(p))
            throw NonPrimeError("p = " + std::to_string(p) + " is not prime");
        if (m < 1) throw UnsupportedSizeError("m must be positive");
        std::int64_t q = 1;
        for (int i = 0; i < m; ++i) {
            q *= p;
            if (q > detail::kMaxCardinality)
                throw UnsupportedSizeError(
                    "q = p^m exceeds the supported cardinality cap 2^20");
        }
        auto core = std::make_shared<detail::FqCore>();
        core->p = p;
        core->m = m;
        core->q = q;
        if (m > 1) {
            for (auto& c : modulus) c = ((c % p) + p) % p;
            if (static_cast<int>(modulus.size()) != m + 1 || modulus[m] != 1)
                throw ReducibleModulusError(
                    "modulus must be monic of degree m over F_p");
            if (!detail::ppoly_irreducible(modulus, p))
                throw ReducibleModulusError("modulus is reducible over F_p");
            core->modulus = std::move(modulus);
        }
        core_ = std::move(core);
    }

    std::int64_t p() const { return core_->p; }
    int m() const { return core_->m; }
    std::int64_t q() const { return core_->q; }
    const detail::FqCore* core() const { return core_.get(); }

    FqElem zero() const { return {core_.get(), 0}; }
    FqElem one() const { return {core_.get(), 1}; }
    /// The image of an integer under Z -> F_p c F_q.
    FqElem from_int(std::int64_t n) const {
        std::int64_t r = ((n % core_->p) + core_->p) % core_->p;
        return {core_.get(), std::uint64_t(r)};
    }
    /// The class of the basis generator u (requires m > 1).
    FqElem gen() const {
        if (core_->m == 1)
            throw UnsupportedSizeError("prime field has no extension generator");
        return {core_.get(), std::uint64_t(core_->p)};
    }
    /// Element with the given polynomial-basis digits (constant first).
    FqElem make(const std::vector<std::int64_t>& digits) const {
        if (static_cast<int>(digits.size()) > core_->m)
            throw UnsupportedSizeError("too many digits for this field");
        std::int64_t d[64] = {0};
        for (std::size_t i = 0; i < digits.size(); ++i)
            d[i] = ((digits[i] % core_->p) + core_->p) % core_->p;
        return {core_.get(), core_->pack(d)};
    }
    /// Element with packed index in [0, q).
    FqElem from_index(std::int64_t idx) const {
        return {core_.get(), std::uint64_t(idx % core_->q)};
    }

    friend bool operator==(const Fq& a, const Fq& b) {
        return a.core_->same_field(*b.core_);
    }
    friend bool operator!=(const Fq& a, const Fq& b) { return !(a == b); }

private:
    static std::vector<std::int64_t> builtin_modulus(std::int64_t p, int m) {
        if (m == 1) return {};
        // one irreducible per (p, m), p <= 7, m <= 3
        if (p == 2 && m == 2) return {1, 1, 1};        // x^2+x+1
        if (p == 2 && m == 3) return {1, 1, 0, 1};     // x^3+x+1
        if (p == 3 && m == 2) return {1, 0, 1};        // x^2+1
        if (p == 3 && m == 3) return {1, 2, 0, 1};     // x^3+2x+1
        if (p == 5 && m == 2) return {2, 0, 1};        // x^2+2
        if (p == 5 && m == 3) return {1, 1, 0, 1};     // x^3+x+1
        if (p == 7 && m == 2) return {1, 0, 1};        // x^2+1
        if (p == 7 && m == 3) return {2, 0, 0, 1};     // x^3+2
        throw UnsupportedSizeError(
            "no built-in modulus for p=" + std::to_string(p) + ", m=" +
            std::to_string(m) + "; supply one explicitly");
    }

    std::shared_ptr<const detail::FqCore> core_;
};

inline std::string FqElem::to_string() const {
    if (core_->m == 1) return std::to_string(std::int64_t(v_));
    auto d = digits();
    std::string out;
    for (int i = core_->m - 1; i >= 0; --i) {
        if (d[i] == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += std::to_string(d[i]);
        } else {
            if (d[i] != 1) out += std::to_string(d[i]) + "*";
            out += "u";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace drh
