#pragma once

#include "drheights/errors.hpp"
#include "drheights/ratfunc.hpp"

#include <string>
#include <utility>
#include <vector>

namespace drh {

/// Twisted polynomial f = sum f_i t^i over K0 with the q-power twist
/// t*c = c^q*t. Multiplication follows the convolution with coefficients
/// f_i * g_j^(q^i). Coefficients are stored densely in the t-degree (which
/// stays small even when the coefficients themselves grow).
class TwistedPoly {
public:
    explicit TwistedPoly(Fq field) : field_(std::move(field)) {}
    TwistedPoly(Fq field, std::vector<RatFunc> coeffs)
        : field_(std::move(field)), coeffs_(std::move(coeffs)) {
        trim();
    }

    static TwistedPoly zero(const Fq& f) { return TwistedPoly(f); }
    static TwistedPoly one(const Fq& f) {
        return TwistedPoly(f, {RatFunc::one(f)});
    }
    static TwistedPoly tau(const Fq& f, int k = 1) {
        std::vector<RatFunc> c(std::size_t(k) + 1, RatFunc::zero(f));
        c.back() = RatFunc::one(f);
        return TwistedPoly(f, std::move(c));
    }
    static TwistedPoly constant(const RatFunc& c) {
        return TwistedPoly(c.field(), {c});
    }

    const Fq& field() const { return field_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// Degree in t; -1 for the zero polynomial.
    int deg_tau() const { return int(coeffs_.size()) - 1; }
    RatFunc coeff(int i) const {
        if (i < 0 || i >= int(coeffs_.size())) return RatFunc::zero(field_);
        return coeffs_[std::size_t(i)];
    }
    const std::vector<RatFunc>& coeffs() const { return coeffs_; }
    RatFunc constant_coeff() const {
        return coeffs_.empty() ? RatFunc::zero(field_) : coeffs_[0];
    }
    RatFunc leading_coeff() const {
        return coeffs_.empty() ? RatFunc::zero(field_) : coeffs_.back();
    }
    /// Separable = nonzero constant coefficient (the associated additive
    /// polynomial has distinct roots).
    bool is_separable() const {
        return !coeffs_.empty() && !coeffs_[0].is_zero();
    }
    bool is_normalized() const {
        return !coeffs_.empty() && coeffs_[0].is_one();
    }
    /// Left-scale by the inverse of the constant coefficient so that f_0 = 1.
    TwistedPoly normalized() const {
        if (is_zero()) throw ZeroArgumentError("normalize(0)");
        if (!is_separable())
            throw NotNormalizableError(
                "constant coefficient is zero; polynomial is not separable");
        return scaled_left(coeffs_[0].inv());
    }
    /// c * f for a scalar c (scales every coefficient).
    TwistedPoly scaled_left(const RatFunc& c) const {
        std::vector<RatFunc> out;
        out.reserve(coeffs_.size());
        for (auto& a : coeffs_) out.push_back(c * a);
        return TwistedPoly(field_, std::move(out));
    }

    friend bool operator==(const TwistedPoly& a, const TwistedPoly& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const TwistedPoly& a, const TwistedPoly& b) {
        return !(a == b);
    }

    friend TwistedPoly operator+(const TwistedPoly& a, const TwistedPoly& b) {
        a.check(b);
        std::vector<RatFunc> out(std::max(a.coeffs_.size(), b.coeffs_.size()),
                                 RatFunc::zero(a.field_));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] = a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
            out[i] = out[i] + b.coeffs_[i];
        return TwistedPoly(a.field_, std::move(out));
    }
    friend TwistedPoly operator-(const TwistedPoly& a, const TwistedPoly& b) {
        return a + b.scaled_left(-RatFunc::one(a.field_));
    }

    /// Non-commutative product: coefficient k is sum over i+j=k of
    /// f_i * g_j^(q^i).
    friend TwistedPoly operator*(const TwistedPoly& a, const TwistedPoly& b) {
        a.check(b);
        if (a.is_zero() || b.is_zero()) return zero(a.field_);
        std::vector<RatFunc> out(a.coeffs_.size() + b.coeffs_.size() - 1,
                                 RatFunc::zero(a.field_));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                if (b.coeffs_[j].is_zero()) continue;
                out[i + j] =
                    out[i + j] + a.coeffs_[i] * b.coeffs_[j].frobenius_power(int(i));
            }
        }
        return TwistedPoly(a.field_, std::move(out));
    }

    struct DivRes {
        TwistedPoly quot, rem;
    };

    /// Right division: f = quot * d + rem with rem = 0 or deg_tau rem <
    /// deg_tau d. The pair is unique.
    friend DivRes right_divmod(const TwistedPoly& f, const TwistedPoly& d) {
        f.check(d);
        if (d.is_zero()) throw DivisionByZeroError("right division by zero");
        DivRes res{zero(f.field_), f};
        if (f.deg_tau() < d.deg_tau()) return res;
        std::vector<RatFunc> rem = res.rem.coeffs_;
        const int dd = d.deg_tau();
        std::vector<RatFunc> quot(std::size_t(f.deg_tau() - dd) + 1,
                                  RatFunc::zero(f.field_));
        for (int top = f.deg_tau(); top >= dd; --top) {
            RatFunc& lead = rem[std::size_t(top)];
            if (lead.is_zero()) continue;
            const int k = top - dd;
            // (c t^k) * d contributes c * d_j^(q^k) at t^(k+j)
            RatFunc c = lead / d.coeffs_.back().frobenius_power(k);
            quot[std::size_t(k)] = c;
            for (int j = 0; j <= dd; ++j) {
                if (d.coeffs_[std::size_t(j)].is_zero()) continue;
                rem[std::size_t(k + j)] =
                    rem[std::size_t(k + j)] -
                    c * d.coeffs_[std::size_t(j)].frobenius_power(k);
            }
        }
        res.quot = TwistedPoly(f.field_, std::move(quot));
        res.rem = TwistedPoly(f.field_, std::move(rem));
        return res;
    }

    /// Right divisibility: d | f iff right_divmod(f, d).rem == 0.
    friend bool right_divides(const TwistedPoly& d, const TwistedPoly& f) {
        return right_divmod(f, d).rem.is_zero();
    }

    /// The F_q-linear evaluation f(x) = f_0 x + f_1 x^q + ... + f_d x^(q^d).
    RatFunc eval_linearized(const RatFunc& x) const {
        RatFunc acc = RatFunc::zero(field_);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i].is_zero()) continue;
            acc = acc + coeffs_[i] * x.frobenius_power(int(i));
        }
        return acc;
    }

    /// Canonical text form "f0 + f1*t + f2*t^2 + ...", zero terms omitted.
    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i].is_zero()) continue;
            if (!out.empty()) out += " + ";
            std::string cs = coeffs_[i].to_string();
            const bool compound =
                cs.find_first_of("+-*/") != std::string::npos;
            if (i == 0) {
                out += compound ? "(" + cs + ")" : cs;
            } else {
                std::string t = i == 1 ? "t" : "t^" + std::to_string(i);
                if (coeffs_[i].is_one())
                    out += t;
                else
                    out += (compound ? "(" + cs + ")" : cs) + "*" + t;
            }
        }
        return out;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }
    void check(const TwistedPoly& o) const {
        if (field_ != o.field_)
            throw MismatchedContextError("twisted polynomials over different fields");
    }

    Fq field_;
    std::vector<RatFunc> coeffs_;
};

/// Normalized right GCD: generator of the left ideal sum, scaled so the
/// constant coefficient is 1. NotNormalizable when that coefficient vanishes
/// (only possible for non-separable inputs).
inline TwistedPoly right_gcd(const TwistedPoly& f, const TwistedPoly& g) {
    if (f.is_zero() && g.is_zero())
        throw BothZeroError("right_gcd(0, 0)");
    TwistedPoly a = f, b = g;
    while (!b.is_zero()) {
        TwistedPoly r = right_divmod(a, b).rem;
        a = std::move(b);
        b = std::move(r);
    }
    return a.normalized();
}

/// Normalized right LCM via the extended Euclidean cofactor sequence: track
/// u with r = u*f + v*g; at termination u*f generates the ideal intersection.
inline TwistedPoly right_lcm(const TwistedPoly& f, const TwistedPoly& g) {
    if (f.is_zero() || g.is_zero())
        throw ZeroArgumentError("right_lcm of zero");
    const Fq& field = f.field();
    TwistedPoly r0 = f, r1 = g;
    TwistedPoly u0 = TwistedPoly::one(field), u1 = TwistedPoly::zero(field);
    while (!r1.is_zero()) {
        auto [q, r] = right_divmod(r0, r1);
        TwistedPoly u2 = u0 - q * u1;
        r0 = std::move(r1);
        r1 = std::move(r);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    return (u1 * f).normalized();
}

/// Normalized annihilator of the F_q-span of the given points: the twisted
/// polynomial of degree |points| whose kernel is exactly that span. Built one
/// point at a time through h <- (t - h(e)^(q-1)) * h.
inline TwistedPoly annihilator_of_span(const Fq& field,
                                       const std::vector<RatFunc>& points) {
    TwistedPoly h = TwistedPoly::one(field);
    for (const RatFunc& e : points) {
        if (e.is_zero()) throw ZeroPointError("span point is zero");
        RatFunc val = h.eval_linearized(e);
        if (val.is_zero())
            throw DependentPointsError(
                "point already lies in the span of its predecessors: " +
                e.to_string());
        TwistedPoly layer(field, {-val.pow(field.q() - 1), RatFunc::one(field)});
        h = layer * h;
    }
    return h.is_normalized() ? h : h.normalized();
}

}  // namespace drh
