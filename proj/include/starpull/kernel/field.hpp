#pragma once

/*
 * Exact elements x + y*sqrt(d) of Q or of a quadratic field Q(sqrt(d)).
 *
 * The tag d is a squarefree integer; d == 1 encodes plain Q and forces y == 0.
 * A rational element (tag 1) combines with any tag, two different quadratic
 * tags never do.
 */

#include <gmpxx.h>

#include <cstdlib>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>

#include "starpull/error.hpp"

namespace starpull {

inline bool is_squarefree(long d)
{
    if (d == 0)
        return false;
    long a = std::labs(d);
    for (long p = 2; p * p <= a; ++p)
        if (a % (p * p) == 0)
            return false;
    return true;
}

class FieldElem
{
    mpq_class x_, y_;
    long d_ = 1;

    void fold()
    {
        x_.canonicalize();
        y_.canonicalize();
        if (d_ == 1) {
            x_ += y_;
            y_ = 0;
        }
    }

    struct trusted {};
    FieldElem(mpq_class x, mpq_class y, long d, trusted) : x_(std::move(x)), y_(std::move(y)), d_(d) { fold(); }

    static long join(long a, long b)
    {
        if (a == 1)
            return b;
        if (b == 1 || a == b)
            return a;
        throw mismatched_field(a, b);
    }

  public:
    FieldElem() = default;
    FieldElem(long v) : x_(v) {} // NOLINT: integers embed everywhere
    explicit FieldElem(mpq_class x, long d = 1) : x_(std::move(x)), d_(d) { fold(); }
    FieldElem(mpq_class x, mpq_class y, long d) : x_(std::move(x)), y_(std::move(y)), d_(d)
    {
        if (!is_squarefree(d))
            throw error("discriminant tag must be squarefree: " + std::to_string(d));
        fold();
    }

    /// sqrt(d) itself.
    static FieldElem sqrt_of(long d) { return FieldElem(0, 1, d); }

    const mpq_class& rational_part() const { return x_; }
    const mpq_class& surd_part() const { return y_; }
    long tag() const { return d_; }

    bool is_zero() const { return x_ == 0 && y_ == 0; }
    bool is_one() const { return x_ == 1 && y_ == 0; }
    bool is_rational() const { return y_ == 0; }

    /// Same value carried under the tag d (used when a rational constant meets a quadratic field).
    FieldElem with_tag(long d) const
    {
        long t = join(d_, d);
        if (t == d_)
            return *this;
        return FieldElem(x_, y_, t, trusted{});
    }

    friend FieldElem operator+(const FieldElem& a, const FieldElem& b)
    {
        long d = join(a.d_, b.d_);
        return FieldElem(a.x_ + b.x_, a.y_ + b.y_, d, trusted{});
    }
    friend FieldElem operator-(const FieldElem& a, const FieldElem& b)
    {
        long d = join(a.d_, b.d_);
        return FieldElem(a.x_ - b.x_, a.y_ - b.y_, d, trusted{});
    }
    FieldElem operator-() const { return FieldElem(-x_, -y_, d_, trusted{}); }
    friend FieldElem operator*(const FieldElem& a, const FieldElem& b)
    {
        long d = join(a.d_, b.d_);
        if (a.y_ == 0 && b.y_ == 0)
            return FieldElem(a.x_ * b.x_, mpq_class(0), d, trusted{});
        return FieldElem(a.x_ * b.x_ + d * a.y_ * b.y_, a.x_ * b.y_ + a.y_ * b.x_, d, trusted{});
    }

    FieldElem conj() const { return FieldElem(x_, -y_, d_, trusted{}); }
    /// x^2 - d*y^2
    mpq_class norm() const { return x_ * x_ - d_ * y_ * y_; }
    mpq_class trace() const { return 2 * x_; }

    FieldElem inv() const
    {
        if (is_zero())
            throw division_by_zero();
        mpq_class n = norm();
        return FieldElem(x_ / n, -y_ / n, d_, trusted{});
    }
    friend FieldElem operator/(const FieldElem& a, const FieldElem& b) { return a * b.inv(); }

    FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
    FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
    FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }
    FieldElem& operator/=(const FieldElem& o) { return *this = *this / o; }

    friend bool operator==(const FieldElem& a, const FieldElem& b)
    {
        if (a.x_ != b.x_ || a.y_ != b.y_)
            return false;
        return a.y_ == 0 || a.d_ == b.d_;
    }

    /// Parseable form, e.g. "1/2+3*sqrt(-5)".
    std::string to_expr() const
    {
        std::ostringstream os;
        if (y_ == 0) {
            os << x_;
            return os.str();
        }
        if (x_ != 0)
            os << x_ << (y_ > 0 ? "+" : "-");
        else if (y_ < 0)
            os << "-";
        mpq_class ay = abs(y_);
        if (ay != 1)
            os << ay << "*";
        os << "sqrt(" << d_ << ")";
        return os.str();
    }

    /// Display form, e.g. "1+√-5".
    std::string to_string() const
    {
        std::ostringstream os;
        if (y_ == 0) {
            os << x_;
            return os.str();
        }
        if (x_ != 0)
            os << x_ << (y_ > 0 ? "+" : "-");
        else if (y_ < 0)
            os << "-";
        mpq_class ay = abs(y_);
        if (ay != 1)
            os << ay;
        if (d_ == -1)
            os << "i";
        else
            os << "√" << d_;
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const FieldElem& a) { return os << a.to_string(); }
};

/// Power with integer exponent; negative exponents invert.
inline FieldElem pow(FieldElem a, long e)
{
    if (e < 0) {
        a = a.inv();
        e = -e;
    }
    FieldElem r(1);
    r = r.with_tag(a.tag());
    while (e) {
        if (e & 1)
            r *= a;
        a *= a;
        e >>= 1;
    }
    return r;
}

enum class FieldOp { add, mul, inv, conj, norm };

/// Single entry point used by the expression evaluator; unary ops ignore b.
inline FieldElem field_arith(const FieldElem& a, const FieldElem& b, FieldOp op)
{
    switch (op) {
    case FieldOp::add:
        return a + b;
    case FieldOp::mul:
        return a * b;
    case FieldOp::inv:
        return a.inv();
    case FieldOp::conj:
        return a.conj();
    case FieldOp::norm:
        return FieldElem(a.norm());
    }
    throw error("unknown field operation");
}

} // namespace starpull
