#pragma once

#include "drheights/errors.hpp"
#include "drheights/gf.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace drh {

/// Polynomial in T over F_q, stored sparsely as (exponent, coefficient) terms
/// in strictly increasing exponent order with no zero coefficients. Sparse
/// storage matters: the q-power twist maps T^e to T^(e*q^k), so exponents get
/// large while term counts stay small. deg(0) is the sentinel -1.
class FqPoly {
public:
    using Term = std::pair<std::int64_t, FqElem>;

    explicit FqPoly(Fq field) : field_(std::move(field)) {}

    static FqPoly zero(const Fq& f) { return FqPoly(f); }
    static FqPoly constant(const Fq& f, const FqElem& c) {
        FqPoly r(f);
        if (!c.is_zero()) r.terms_.push_back({0, c});
        return r;
    }
    static FqPoly one(const Fq& f) { return constant(f, f.one()); }
    static FqPoly variable(const Fq& f) { return monomial(f, 1, f.one()); }
    static FqPoly monomial(const Fq& f, std::int64_t e, const FqElem& c) {
        FqPoly r(f);
        if (!c.is_zero()) r.terms_.push_back({e, c});
        return r;
    }
    /// Dense construction from coefficients indexed by T-degree.
    static FqPoly from_coeffs(const Fq& f, const std::vector<FqElem>& coeffs) {
        FqPoly r(f);
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            if (!coeffs[i].is_zero())
                r.terms_.push_back({std::int64_t(i), coeffs[i]});
        return r;
    }
    static FqPoly from_terms(const Fq& f, std::vector<Term> terms) {
        std::map<std::int64_t, FqElem> acc;
        FqPoly r(f);
        for (auto& [e, c] : terms) {
            if (c.is_zero()) continue;
            auto it = acc.find(e);
            if (it == acc.end())
                acc.emplace(e, c);
            else {
                it->second = it->second + c;
                if (it->second.is_zero()) acc.erase(it);
            }
        }
        r.terms_.assign(acc.begin(), acc.end());
        return r;
    }

    const Fq& field() const { return field_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || terms_.back().first == 0; }
    std::int64_t degree() const { return terms_.empty() ? -1 : terms_.back().first; }
    std::int64_t trailing_exponent() const {
        return terms_.empty() ? -1 : terms_.front().first;
    }
    FqElem leading_coeff() const {
        return terms_.empty() ? field_.zero() : terms_.back().second;
    }
    FqElem coeff(std::int64_t e) const {
        auto it = std::lower_bound(
            terms_.begin(), terms_.end(), e,
            [](const Term& t, std::int64_t x) { return t.first < x; });
        if (it != terms_.end() && it->first == e) return it->second;
        return field_.zero();
    }
    std::size_t term_count() const { return terms_.size(); }
    bool is_monic() const { return !terms_.empty() && terms_.back().second.is_one(); }

    friend bool operator==(const FqPoly& a, const FqPoly& b) {
        if (a.field_ != b.field_) return false;
        if (a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (a.terms_[i].first != b.terms_[i].first ||
                a.terms_[i].second != b.terms_[i].second)
                return false;
        return true;
    }
    friend bool operator!=(const FqPoly& a, const FqPoly& b) { return !(a == b); }

    friend FqPoly operator+(const FqPoly& a, const FqPoly& b) {
        a.check(b);
        FqPoly r(a.field_);
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() || j < b.terms_.size()) {
            if (j == b.terms_.size() ||
                (i < a.terms_.size() && a.terms_[i].first < b.terms_[j].first)) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (i == a.terms_.size() ||
                       b.terms_[j].first < a.terms_[i].first) {
                r.terms_.push_back(b.terms_[j++]);
            } else {
                FqElem c = a.terms_[i].second + b.terms_[j].second;
                if (!c.is_zero()) r.terms_.push_back({a.terms_[i].first, c});
                ++i;
                ++j;
            }
        }
        return r;
    }
    friend FqPoly operator-(const FqPoly& a, const FqPoly& b) { return a + (-b); }
    FqPoly operator-() const {
        FqPoly r(field_);
        r.terms_.reserve(terms_.size());
        for (auto& [e, c] : terms_) r.terms_.push_back({e, -c});
        return r;
    }
    friend FqPoly operator*(const FqPoly& a, const FqPoly& b) {
        a.check(b);
        std::map<std::int64_t, FqElem> acc;
        for (auto& [ea, ca] : a.terms_) {
            for (auto& [eb, cb] : b.terms_) {
                const std::int64_t e = checked_add(ea, eb);
                FqElem c = ca * cb;
                auto it = acc.find(e);
                if (it == acc.end())
                    acc.emplace(e, c);
                else {
                    it->second = it->second + c;
                    if (it->second.is_zero()) acc.erase(it);
                }
            }
        }
        FqPoly r(a.field_);
        r.terms_.assign(acc.begin(), acc.end());
        return r;
    }

    FqPoly scaled(const FqElem& c) const {
        FqPoly r(field_);
        if (c.is_zero()) return r;
        r.terms_.reserve(terms_.size());
        for (auto& [e, a] : terms_) r.terms_.push_back({e, a * c});
        return r;
    }
    FqPoly shifted(std::int64_t k) const {  // multiply by T^k
        FqPoly r(field_);
        r.terms_.reserve(terms_.size());
        for (auto& [e, a] : terms_) r.terms_.push_back({checked_add(e, k), a});
        return r;
    }
    FqPoly make_monic() const {
        if (is_zero()) return *this;
        return scaled(leading_coeff().inv());
    }

    struct DivRes {
        FqPoly quot, rem;
    };
    friend DivRes divmod(const FqPoly& a, const FqPoly& b) {
        a.check(b);
        if (b.is_zero()) throw DivisionByZeroError("polynomial division by zero");
        DivRes res{FqPoly(a.field_), FqPoly(a.field_)};
        if (a.degree() < b.degree()) {
            res.rem = a;
            return res;
        }
        const FqElem lc_inv = b.leading_coeff().inv();
        const std::int64_t db = b.degree();
        std::map<std::int64_t, FqElem> rem(a.terms_.begin(), a.terms_.end());
        std::vector<Term> quot;  // produced in decreasing exponent order
        while (!rem.empty()) {
            auto top = std::prev(rem.end());
            if (top->first < db) break;
            const std::int64_t k = top->first - db;
            const FqElem c = top->second * lc_inv;
            quot.push_back({k, c});
            for (auto& [e, bc] : b.terms_) {
                const std::int64_t te = e + k;
                FqElem delta = c * bc;
                auto it = rem.find(te);
                if (it == rem.end()) {
                    rem.emplace(te, -delta);
                } else {
                    it->second = it->second - delta;
                    if (it->second.is_zero()) rem.erase(it);
                }
            }
        }
        std::reverse(quot.begin(), quot.end());
        res.quot.terms_ = std::move(quot);
        res.rem.terms_.assign(rem.begin(), rem.end());
        return res;
    }
    friend FqPoly operator/(const FqPoly& a, const FqPoly& b) {
        return divmod(a, b).quot;
    }
    friend FqPoly operator%(const FqPoly& a, const FqPoly& b) {
        return divmod(a, b).rem;
    }
    /// Division known to be exact; throws if a remainder appears.
    friend FqPoly exact_div(const FqPoly& a, const FqPoly& b) {
        auto [q, r] = divmod(a, b);
        if (!r.is_zero())
            throw Error("exact_div: division left a nonzero remainder");
        return q;
    }

    /// Monic gcd. Trailing powers of T are split off first so that the
    /// Euclidean loop runs on the T-free parts (exponent gaps shrink fast on
    /// sparse inputs).
    friend FqPoly gcd(const FqPoly& a, const FqPoly& b) {
        a.check(b);
        if (a.is_zero()) return b.make_monic();
        if (b.is_zero()) return a.make_monic();
        const std::int64_t ta = a.trailing_exponent(), tb = b.trailing_exponent();
        FqPoly x = a.shifted(-ta), y = b.shifted(-tb);
        while (!y.is_zero()) {
            FqPoly r = x % y;
            if (!r.is_zero()) r = r.shifted(-r.trailing_exponent());
            x = std::move(y);
            y = std::move(r);
        }
        return x.make_monic().shifted(std::min(ta, tb));
    }

    FqPoly pow(std::int64_t e) const {
        if (e < 0) throw Error("negative polynomial power");
        FqPoly r = one(field_);
        FqPoly b = *this;
        while (e > 0) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    /// p(T)^(q^k) = p(T^(q^k)): coefficients of F_q are Frobenius-fixed, so
    /// the q^k-th power is an exponent stretch.
    FqPoly frobenius_power(int k) const {
        if (k == 0 || is_zero()) return *this;
        std::int64_t factor = 1;
        for (int i = 0; i < k; ++i)
            factor = checked_mul(factor, field_.q());
        FqPoly r(field_);
        r.terms_.reserve(terms_.size());
        for (auto& [e, c] : terms_)
            r.terms_.push_back({checked_mul(e, factor), c});
        return r;
    }

    FqPoly derivative() const {
        FqPoly r(field_);
        for (auto& [e, c] : terms_) {
            if (e == 0) continue;
            FqElem d = c * field_.from_int(e % field_.p());
            if (!d.is_zero()) r.terms_.push_back({e - 1, d});
        }
        return r;
    }

    FqElem eval(const FqElem& x) const {
        // exponents can be huge; evaluate term-by-term with binary powers
        FqElem acc = field_.zero();
        for (auto& [e, c] : terms_) acc = acc + c * x.pow(e);
        return acc;
    }

    std::string to_string(const std::string& var = "T") const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            if (!out.empty()) out += "+";
            out += term_to_string(it->first, it->second, var);
        }
        return out;
    }

private:
    static std::string term_to_string(std::int64_t e, const FqElem& c,
                                      const std::string& var) {
        std::string cs = c.to_string();
        const bool compound = cs.find('+') != std::string::npos;
        if (e == 0) return compound ? "(" + cs + ")" : cs;
        std::string v = var;
        if (e != 1) v += "^" + std::to_string(e);
        if (c.is_one()) return v;
        if (compound) return "(" + cs + ")*" + v;
        return cs + "*" + v;
    }

    static std::int64_t checked_add(std::int64_t a, std::int64_t b) {
        std::int64_t r;
        if (__builtin_add_overflow(a, b, &r))
            throw UnsupportedSizeError("T-degree exceeds 64-bit range");
        return r;
    }
    static std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
        std::int64_t r;
        if (__builtin_mul_overflow(a, b, &r))
            throw UnsupportedSizeError("T-degree exceeds 64-bit range");
        return r;
    }
    void check(const FqPoly& o) const {
        if (field_ != o.field_)
            throw MismatchedContextError("polynomials over different fields");
    }

    Fq field_;
    std::vector<Term> terms_;
};

}  // namespace drh
