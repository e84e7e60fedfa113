#pragma once

// Rational functions num/den in one variable, kept in lowest terms with a
// monic denominator so that equal values have identical representations.

#include <algorithm>
#include <string>
#include <utility>

#include "starpull/kernel/poly.hpp"

namespace starpull {

class RatFunc
{
    Poly num_, den_;

    void normalize()
    {
        if (den_.is_zero())
            throw division_by_zero();
        long tag = num_.tag() == 1 ? den_.tag() : num_.tag();
        if (num_.is_zero()) {
            num_ = Poly(tag);
            den_ = Poly(FieldElem(1).with_tag(tag));
            return;
        }
        if (den_.degree() > 0 && num_.degree() > 0) {
            if (den_.is_monomial() || num_.is_monomial()) {
                auto m = static_cast<std::size_t>(std::min(num_.low_order(), den_.low_order()));
                num_ = num_.shift_down(m);
                den_ = den_.shift_down(m);
            } else {
                Poly g = poly_gcd(num_, den_);
                if (g.degree() > 0) {
                    num_ = num_ / g;
                    den_ = den_ / g;
                }
            }
        }
        if (den_.is_monic())
            return;
        FieldElem li = den_.leading().inv();
        num_ = num_ * li;
        den_ = den_ * li;
    }

  public:
    RatFunc() : den_(FieldElem(1)) {}
    RatFunc(long v) : num_(FieldElem(v)), den_(FieldElem(1)) {} // NOLINT
    RatFunc(FieldElem c) : num_(c), den_(FieldElem(1).with_tag(c.tag())) {} // NOLINT
    RatFunc(Poly p) : num_(std::move(p)), den_(FieldElem(1).with_tag(num_.tag())) {} // NOLINT
    RatFunc(Poly n, Poly d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    static RatFunc x(long tag = 1) { return RatFunc(Poly::x(tag)); }
    static RatFunc x_pow(long e, long tag = 1)
    {
        Poly m = Poly::monomial(FieldElem(1).with_tag(tag), static_cast<std::size_t>(e < 0 ? -e : e));
        if (e >= 0)
            return RatFunc(m);
        return RatFunc(Poly(FieldElem(1).with_tag(tag)), m);
    }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    long tag() const { return num_.tag() == 1 ? den_.tag() : num_.tag(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_poly() const { return den_.degree() == 0; }
    bool is_constant() const { return is_poly() && num_.degree() <= 0; }
    FieldElem constant_value() const
    {
        if (!is_constant())
            throw evaluation_error("rational function is not constant");
        return num_.coeff(0);
    }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b)
    {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b)
    {
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    RatFunc operator-() const
    {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b)
    {
        if (a.is_poly() && b.is_poly())
            return RatFunc(a.num_ * b.num_);
        if (a.is_zero() || b.is_zero())
            return RatFunc(Poly(a.tag() == 1 ? b.tag() : a.tag()));
        // cancel across before multiplying; both factors are already reduced
        RatFunc x(a.num_, b.den_), y(b.num_, a.den_);
        RatFunc r;
        r.num_ = x.num_ * y.num_;
        r.den_ = x.den_ * y.den_;
        return r;
    }
    RatFunc inv() const
    {
        if (is_zero())
            throw division_by_zero();
        return RatFunc(den_, num_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inv(); }

    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

    friend bool operator==(const RatFunc& a, const RatFunc& b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    /// Returns a copy with numerator also made monic, and the stripped leading ratio.
    std::pair<RatFunc, FieldElem> split_leading() const
    {
        if (is_zero())
            throw division_by_zero();
        FieldElem c = num_.leading();
        RatFunc r = *this;
        r.num_ = num_.monic();
        return {r, c};
    }

    std::string to_expr() const
    {
        if (is_poly())
            return num_.to_expr();
        return "(" + num_.to_expr() + ")/(" + den_.to_expr() + ")";
    }
    std::string to_string() const
    {
        if (is_poly())
            return num_.to_string();
        return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
    }
};

inline RatFunc pow(const RatFunc& a, long e)
{
    RatFunc base = e < 0 ? a.inv() : a;
    long n = e < 0 ? -e : e;
    RatFunc r(FieldElem(1).with_tag(a.tag()));
    while (n) {
        if (n & 1)
            r = r * base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

/// X-adic valuation. Throws on zero.
inline long ord_at_zero(const RatFunc& f)
{
    if (f.is_zero())
        throw evaluation_error("valuation of zero");
    return f.num().low_order() - f.den().low_order();
}

/// f(0); throws when f has a pole at 0.
inline FieldElem eval_at_zero(const RatFunc& f)
{
    if (f.is_zero())
        return FieldElem(0).with_tag(f.tag());
    if (ord_at_zero(f) < 0)
        throw evaluation_error("pole at zero");
    return f.num().at_zero() / f.den().at_zero();
}

} // namespace starpull
