#pragma once

// Dense univariate polynomials in X over a FieldElem coefficient field.

#include <algorithm>
#include <cstddef>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "starpull/kernel/field.hpp"

namespace starpull {

class Poly
{
    std::vector<FieldElem> c_; // c_[i] is the coefficient of X^i; no trailing zeros
    long d_ = 1;

    void trim()
    {
        while (!c_.empty() && c_.back().is_zero())
            c_.pop_back();
    }

  public:
    Poly() = default;
    explicit Poly(long tag) : d_(tag) {}
    Poly(FieldElem constant) : d_(constant.tag()) // NOLINT
    {
        if (!constant.is_zero())
            c_.push_back(std::move(constant));
    }
    Poly(std::vector<FieldElem> coeffs, long tag) : c_(std::move(coeffs)), d_(tag)
    {
        for (auto& a : c_) {
            if (a.tag() != 1 && d_ == 1)
                d_ = a.tag();
        }
        for (auto& a : c_)
            a = a.with_tag(d_);
        trim();
    }

    /// The monomial c*X^n.
    static Poly monomial(const FieldElem& c, std::size_t n)
    {
        std::vector<FieldElem> v(n + 1, FieldElem(0));
        v[n] = c;
        return Poly(std::move(v), c.tag());
    }
    static Poly x(long tag = 1) { return monomial(FieldElem(1).with_tag(tag), 1); }

    long tag() const { return d_; }
    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<FieldElem>& coeffs() const { return c_; }
    FieldElem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : FieldElem(0).with_tag(d_); }
    FieldElem leading() const { return c_.empty() ? FieldElem(0).with_tag(d_) : c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_monomial() const
    {
        return !c_.empty() && std::all_of(c_.begin(), c_.end() - 1, [](const FieldElem& a) { return a.is_zero(); });
    }

    /// Exact division by X^m.
    Poly shift_down(std::size_t m) const
    {
        if (m == 0)
            return *this;
        if (m > c_.size())
            throw evaluation_error("shift past the degree");
        return Poly(std::vector<FieldElem>(c_.begin() + static_cast<std::ptrdiff_t>(m), c_.end()), d_);
    }

    /// Lowest index with a nonzero coefficient (the X-adic order).
    long low_order() const
    {
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!c_[i].is_zero())
                return static_cast<long>(i);
        throw evaluation_error("order of the zero polynomial");
    }

    Poly monic() const
    {
        if (is_zero())
            return *this;
        return *this * leading().inv();
    }

    friend Poly operator+(const Poly& a, const Poly& b)
    {
        std::vector<FieldElem> r(std::max(a.c_.size(), b.c_.size()), FieldElem(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            r[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i)
            r[i] += b.c_[i];
        return Poly(std::move(r), a.d_ == 1 ? b.d_ : a.d_);
    }
    Poly operator-() const
    {
        Poly r = *this;
        for (auto& a : r.c_)
            a = -a;
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    friend Poly operator*(const Poly& a, const Poly& b)
    {
        long tag = a.d_ == 1 ? b.d_ : a.d_;
        if (a.is_zero() || b.is_zero())
            return Poly(tag);
        std::vector<FieldElem> r(a.c_.size() + b.c_.size() - 1, FieldElem(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(r), tag);
    }
    friend Poly operator*(const Poly& a, const FieldElem& s)
    {
        std::vector<FieldElem> r;
        r.reserve(a.c_.size());
        for (const auto& c : a.c_)
            r.push_back(c * s);
        return Poly(std::move(r), a.d_ == 1 ? s.tag() : a.d_);
    }

    /// Euclidean division: a = q*b + r with deg r < deg b.
    friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b)
    {
        if (b.is_zero())
            throw division_by_zero();
        long tag = a.d_ == 1 ? b.d_ : a.d_;
        if (a.c_.size() < b.c_.size())
            return {Poly(tag), a};
        std::vector<FieldElem> r = a.c_;
        const std::size_t nb = b.c_.size();
        std::vector<FieldElem> q(r.size() - nb + 1, FieldElem(0));
        FieldElem lc_inv = b.c_.back().inv();
        for (std::size_t k = q.size(); k-- > 0;) {
            FieldElem t = r[k + nb - 1] * lc_inv;
            if (t.is_zero())
                continue;
            for (std::size_t j = 0; j < nb; ++j)
                r[k + j] -= t * b.c_[j];
            q[k] = std::move(t);
        }
        r.resize(nb - 1);
        return {Poly(std::move(q), tag), Poly(std::move(r), tag)};
    }
    friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
    friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

    bool divides(const Poly& a) const { return (a % *this).is_zero(); }

    /// Value at X = 0.
    FieldElem at_zero() const { return coeff(0); }

    FieldElem eval(const FieldElem& t) const
    {
        FieldElem r = FieldElem(0).with_tag(d_);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            r = r * t + *it;
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    /// Parseable form such as "X^2+(1+sqrt(-5))*X-3".
    std::string to_expr() const
    {
        if (is_zero())
            return "0";
        std::string s;
        for (std::size_t k = c_.size(); k-- > 0;) {
            const FieldElem& a = c_[k];
            if (a.is_zero())
                continue;
            std::string term;
            bool neg_rational = a.is_rational() && a.rational_part() < 0;
            FieldElem mag = neg_rational ? -a : a;
            std::string cs = mag.is_rational() ? mag.to_expr() : "(" + mag.to_expr() + ")";
            if (k == 0)
                term = cs;
            else {
                std::string xs = k == 1 ? "X" : "X^" + std::to_string(k);
                term = mag.is_one() ? xs : cs + "*" + xs;
            }
            if (s.empty())
                s = (neg_rational ? "-" : "") + term;
            else
                s += (neg_rational ? "-" : "+") + term;
        }
        return s;
    }

    std::string to_string() const
    {
        if (is_zero())
            return "0";
        std::string s;
        for (std::size_t k = c_.size(); k-- > 0;) {
            const FieldElem& a = c_[k];
            if (a.is_zero())
                continue;
            bool neg_rational = a.is_rational() && a.rational_part() < 0;
            FieldElem mag = neg_rational ? -a : a;
            std::string cs = mag.is_rational() ? mag.to_string() : "(" + mag.to_string() + ")";
            std::string term;
            if (k == 0)
                term = cs;
            else {
                std::string xs = k == 1 ? "X" : "X^" + std::to_string(k);
                term = mag.is_one() ? xs : cs + xs;
            }
            if (s.empty())
                s = (neg_rational ? "-" : "") + term;
            else
                s += (neg_rational ? " - " : " + ") + term;
        }
        return s;
    }
};

/// Monic gcd. Throws if both inputs are zero.
inline Poly poly_gcd(Poly a, Poly b)
{
    if (a.is_zero() && b.is_zero())
        throw evaluation_error("gcd of two zero polynomials");
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Extended Euclid: returns (g, s, t) with g = s*a + t*b monic.
inline std::tuple<Poly, Poly, Poly> poly_xgcd(const Poly& a, const Poly& b)
{
    if (a.is_zero() && b.is_zero())
        throw evaluation_error("gcd of two zero polynomials");
    long tag = a.tag() == 1 ? b.tag() : a.tag();
    Poly r0 = a, r1 = b;
    Poly s0(FieldElem(1).with_tag(tag)), s1(tag);
    Poly t0(tag), t1(FieldElem(1).with_tag(tag));
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        Poly t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    FieldElem li = r0.leading().inv();
    return {r0 * li, s0 * li, t0 * li};
}

inline Poly poly_lcm(const Poly& a, const Poly& b)
{
    return (a * b / poly_gcd(a, b)).monic();
}

} // namespace starpull
