#pragma once

#include "drheights/errors.hpp"
#include "drheights/factor.hpp"
#include "drheights/poly.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace drh {

/// Element of K0 = F_q(T) in canonical form: den monic, gcd(num, den) = 1,
/// zero represented as 0/1. Canonicalization happens on every construction.
class RatFunc {
public:
    explicit RatFunc(const Fq& field)
        : num_(FqPoly::zero(field)), den_(FqPoly::one(field)) {}
    explicit RatFunc(FqPoly num)
        : num_(std::move(num)), den_(FqPoly::one(num_.field())) {}
    RatFunc(FqPoly num, FqPoly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw DivisionByZeroError("zero denominator");
        reduce();
    }

    static RatFunc zero(const Fq& f) { return RatFunc(f); }
    static RatFunc one(const Fq& f) { return RatFunc(FqPoly::one(f)); }
    static RatFunc variable(const Fq& f) { return RatFunc(FqPoly::variable(f)); }
    static RatFunc constant(const Fq& f, const FqElem& c) {
        return RatFunc(FqPoly::constant(f, c));
    }

    const FqPoly& num() const { return num_; }
    const FqPoly& den() const { return den_; }
    const Fq& field() const { return num_.field(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const {
        return den_.is_constant() && num_ == FqPoly::one(field());
    }
    bool is_polynomial() const { return den_.is_constant(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        FqPoly g = gcd(a.den_, b.den_);
        FqPoly ad = exact_div(a.den_, g);
        FqPoly bd = exact_div(b.den_, g);
        return RatFunc(a.num_ * bd + b.num_ * ad, a.den_ * bd);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return a + (-b);
    }
    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        // cross-reduce first: keeps the gcd calls on small pieces
        FqPoly g1 = gcd(a.num_, b.den_);
        FqPoly g2 = gcd(b.num_, a.den_);
        return RatFunc(exact_div(a.num_, g1) * exact_div(b.num_, g2),
                       exact_div(a.den_, g2) * exact_div(b.den_, g1),
                       already_reduced{});
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw DivisionByZeroError("rational division by zero");
        FqPoly g1 = gcd(a.num_, b.num_);
        FqPoly g2 = gcd(b.den_, a.den_);
        RatFunc r(exact_div(a.num_, g1) * exact_div(b.den_, g2),
                  exact_div(a.den_, g2) * exact_div(b.num_, g1),
                  already_reduced{});
        r.make_den_monic();
        return r;
    }
    RatFunc inv() const {
        if (is_zero()) throw DivisionByZeroError("inverse of zero");
        RatFunc r(den_, num_, already_reduced{});
        r.make_den_monic();
        return r;
    }
    RatFunc pow(std::int64_t e) const {
        if (e < 0) return inv().pow(-e);
        RatFunc r = one(field());
        RatFunc b = *this;
        while (e > 0) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }
    /// x^(q^k), computed by stretching the exponents of num and den. The
    /// stretch preserves canonical form (coprimality and monicity carry over).
    RatFunc frobenius_power(int k) const {
        RatFunc r = *this;
        r.num_ = r.num_.frobenius_power(k);
        r.den_ = r.den_.frobenius_power(k);
        return r;
    }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) {
        return !(a == b);
    }

    std::string to_string() const {
        if (is_polynomial()) return num_.to_string();
        std::string n = num_.to_string();
        std::string d = den_.to_string();
        if (num_.term_count() > 1) n = "(" + n + ")";
        if (den_.term_count() > 1) d = "(" + d + ")";
        return n + "/" + d;
    }

private:
    struct already_reduced {};
    RatFunc(FqPoly num, FqPoly den, already_reduced)
        : num_(std::move(num)), den_(std::move(den)) {}

    void reduce() {
        if (num_.is_zero()) {
            den_ = FqPoly::one(field());
            return;
        }
        FqPoly g = gcd(num_, den_);
        if (!g.is_constant() || !g.leading_coeff().is_one()) {
            num_ = exact_div(num_, g);
            den_ = exact_div(den_, g);
        }
        make_den_monic();
    }
    void make_den_monic() {
        if (num_.is_zero()) {
            den_ = FqPoly::one(field());
            return;
        }
        FqElem lc = den_.leading_coeff();
        if (!lc.is_one()) {
            FqElem inv = lc.inv();
            num_ = num_.scaled(inv);
            den_ = den_.scaled(inv);
        }
    }

    FqPoly num_, den_;
};

/// Place of K0: a monic irreducible polynomial P (finite) or the degree
/// valuation at infinity. The residual degree f_v is deg P, resp. 1.
class Place {
public:
    static Place infinity(const Fq& field) { return Place(field); }
    static Place finite(FqPoly prime) {
        if (prime.is_zero() || prime.is_constant())
            throw NonIrreduciblePlaceError("finite place needs positive degree");
        if (!prime.is_monic())
            throw NonIrreduciblePlaceError("finite place must be monic");
        if (!is_irreducible(prime))
            throw NonIrreduciblePlaceError("finite place must be irreducible: " +
                                           prime.to_string());
        return Place(std::move(prime));
    }

    bool is_infinite() const { return !prime_.has_value(); }
    const FqPoly& prime() const {
        if (is_infinite()) throw InfinitePlaceError("infinite place has no prime");
        return *prime_;
    }
    const Fq& field() const { return field_; }
    std::int64_t fv() const { return is_infinite() ? 1 : prime_->degree(); }

    std::string to_string() const {
        return is_infinite() ? "inf" : prime_->to_string();
    }

    friend bool operator==(const Place& a, const Place& b) {
        if (a.is_infinite() != b.is_infinite()) return false;
        return a.is_infinite() || *a.prime_ == *b.prime_;
    }
    friend bool operator!=(const Place& a, const Place& b) { return !(a == b); }
    /// Finite places ordered by (degree, lexicographic coefficients); the
    /// infinite place sorts last.
    friend bool operator<(const Place& a, const Place& b) {
        if (a.is_infinite()) return false;
        if (b.is_infinite()) return true;
        return detail::poly_less(*a.prime_, *b.prime_);
    }

private:
    explicit Place(const Fq& field) : field_(field) {}
    explicit Place(FqPoly prime) : field_(prime.field()), prime_(std::move(prime)) {}
    Fq field_;
    std::optional<FqPoly> prime_;
};

namespace detail {

/// f mod P without long division: each term c*T^e is reduced via T^e mod P by
/// binary exponentiation, so sparse inputs of huge degree stay cheap.
inline bool divides_sparse(const FqPoly& P, const FqPoly& f) {
    const Fq& field = f.field();
    Dense dp = to_dense(P);
    Dense acc{field, {}};
    for (auto& [e, c] : f.terms()) {
        Dense t = dense_powmod(Dense::x(field), BigInt(e), dp);
        for (std::size_t i = 0; i < t.c.size(); ++i) {
            FqElem add = t.c[i] * c;
            if (i < acc.c.size())
                acc.c[i] = acc.c[i] + add;
            else
                acc.c.push_back(add);
        }
        acc.trim();
    }
    return acc.is_zero();
}

}  // namespace detail

/// Multiplicity of the monic irreducible P in the nonzero polynomial f.
inline std::int64_t multiplicity(const FqPoly& P, const FqPoly& f) {
    if (f.is_zero()) throw ZeroPolynomialError("multiplicity in 0");
    if (P.degree() == 1 && P.term_count() == 1) {
        // P = T: the multiplicity is the trailing exponent
        return f.trailing_exponent();
    }
    std::int64_t k = 0;
    FqPoly cur = f;
    while (detail::divides_sparse(P, cur)) {
        cur = exact_div(cur, P);
        ++k;
    }
    return k;
}

/// ord_v(x); std::nullopt encodes ord_v(0) = +infinity. At the infinite place
/// ord_inf = deg(den) - deg(num), so that the product formula holds.
inline std::optional<std::int64_t> ord_at(const Place& v, const RatFunc& x) {
    if (x.is_zero()) return std::nullopt;
    if (v.is_infinite()) return x.den().degree() - x.num().degree();
    // num and den are coprime, so at most one of the two multiplicities is
    // nonzero
    std::int64_t mn = multiplicity(v.prime(), x.num());
    if (mn > 0) return mn;
    return -multiplicity(v.prime(), x.den());
}

/// ord_v for known-nonzero arguments.
inline std::int64_t ord_at_nonzero(const Place& v, const RatFunc& x) {
    auto o = ord_at(v, x);
    if (!o) throw ZeroArgumentError("ord of zero");
    return *o;
}

/// The places with ord_v(x) != 0: irreducible factors of num and den, plus
/// the infinite place when deg num != deg den.
inline std::vector<Place> support(const RatFunc& x,
                                  std::uint64_t seed = kDefaultFactorSeed) {
    if (x.is_zero()) throw ZeroArgumentError("support of zero");
    std::vector<Place> out;
    for (auto& [p, mult] : factorize(x.num(), seed).factors)
        out.push_back(Place::finite(p));
    for (auto& [p, mult] : factorize(x.den(), seed).factors)
        out.push_back(Place::finite(p));
    if (x.num().degree() != x.den().degree())
        out.push_back(Place::infinity(x.field()));
    std::sort(out.begin(), out.end());
    return out;
}

/// Weil height of x in K0: max(deg num, deg den) in canonical form; h(0) = 0.
inline std::int64_t weil_height(const RatFunc& x) {
    if (x.is_zero()) return 0;
    return std::max(x.num().degree(), x.den().degree());
}

}  // namespace drh
