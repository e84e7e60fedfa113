#pragma once

/*
 * Integer lattices in Q^n.
 *
 * A lattice is stored as (den, H) where H is the integer basis in row Hermite
 * normal form: pivots strictly increase along rows, pivots are positive,
 * entries above a pivot lie in [0, pivot), entries below are zero.  The
 * denominator is coprime to the content of H, which makes the pair unique
 * for each Z-module.
 */

#include <gmpxx.h>

#include <cstddef>
#include <utility>
#include <vector>

#include "starpull/error.hpp"

namespace starpull::lattice {

using IntRow = std::vector<mpz_class>;
using IntMat = std::vector<IntRow>;
using QRow = std::vector<mpq_class>;

struct HnfResult {
    IntMat h;    // nonzero rows, in HNF
    IntMat kernel; // basis of {c : c * A = 0} over Z
};

namespace detail {

inline void row_combine(IntRow& r1, IntRow& r2, const mpz_class& s, const mpz_class& t,
                        const mpz_class& u, const mpz_class& v)
{
    // (r1, r2) <- (s r1 + t r2, u r1 + v r2)
    for (std::size_t j = 0; j < r1.size(); ++j) {
        mpz_class a = s * r1[j] + t * r2[j];
        mpz_class b = u * r1[j] + v * r2[j];
        r1[j] = std::move(a);
        r2[j] = std::move(b);
    }
}

} // namespace detail

/// Row HNF of `a` (m x n) together with a basis of its integer left kernel.
inline HnfResult hnf(IntMat a, std::size_t ncols)
{
    const std::size_t m = a.size();
    IntMat u(m, IntRow(m, 0));
    for (std::size_t i = 0; i < m; ++i)
        u[i][i] = 1;

    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < m; ++col) {
        for (std::size_t i = row + 1; i < m; ++i) {
            if (a[i][col] == 0)
                continue;
            mpz_class g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a[row][col].get_mpz_t(),
                       a[i][col].get_mpz_t());
            mpz_class p = a[row][col] / g, q = a[i][col] / g;
            detail::row_combine(a[row], a[i], s, t, -q, p);
            detail::row_combine(u[row], u[i], s, t, -q, p);
        }
        if (a[row][col] == 0)
            continue;
        if (a[row][col] < 0) {
            for (auto& e : a[row])
                e = -e;
            for (auto& e : u[row])
                e = -e;
        }
        for (std::size_t k = 0; k < row; ++k) {
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), a[k][col].get_mpz_t(), a[row][col].get_mpz_t());
            if (q == 0)
                continue;
            for (std::size_t j = 0; j < ncols; ++j)
                a[k][j] -= q * a[row][j];
            for (std::size_t j = 0; j < m; ++j)
                u[k][j] -= q * u[row][j];
        }
        ++row;
    }
    HnfResult res;
    res.h.assign(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(row));
    res.kernel.assign(u.begin() + static_cast<std::ptrdiff_t>(row), u.end());
    return res;
}

class QLattice
{
    std::size_t n_ = 0;
    mpz_class den_ = 1;
    IntMat rows_;

  public:
    QLattice() = default;
    explicit QLattice(std::size_t n) : n_(n) {}

    /// Z-span of the given rational vectors (each of length n).
    static QLattice span(const std::vector<QRow>& vecs, std::size_t n)
    {
        QLattice l(n);
        mpz_class den = 1;
        for (const auto& v : vecs)
            for (const auto& e : v)
                mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), e.get_den_mpz_t());
        IntMat m;
        for (const auto& v : vecs) {
            IntRow r(n);
            for (std::size_t j = 0; j < n; ++j) {
                mpq_class s = v[j] * den;
                r[j] = s.get_num();
            }
            m.push_back(std::move(r));
        }
        auto h = hnf(std::move(m), n).h;
        mpz_class g = den;
        for (const auto& r : h)
            for (const auto& e : r)
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t());
        if (h.empty())
            g = den;
        for (auto& r : h)
            for (auto& e : r)
                e /= g;
        l.den_ = den / g;
        if (h.empty())
            l.den_ = 1;
        l.rows_ = std::move(h);
        return l;
    }

    std::size_t dim() const { return n_; }
    std::size_t rank() const { return rows_.size(); }
    bool is_zero() const { return rows_.empty(); }
    const mpz_class& den() const { return den_; }
    const IntMat& rows() const { return rows_; }

    std::vector<QRow> basis() const
    {
        std::vector<QRow> out;
        for (const auto& r : rows_) {
            QRow q(n_);
            for (std::size_t j = 0; j < n_; ++j) {
                q[j] = mpq_class(r[j], den_);
                q[j].canonicalize();
            }
            out.push_back(std::move(q));
        }
        return out;
    }

    friend QLattice operator+(const QLattice& a, const QLattice& b)
    {
        auto v = a.basis();
        auto w = b.basis();
        v.insert(v.end(), w.begin(), w.end());
        return span(v, a.n_);
    }

    friend QLattice intersect(const QLattice& a, const QLattice& b)
    {
        if (a.is_zero() || b.is_zero())
            return QLattice(a.n_);
        mpz_class den;
        mpz_lcm(den.get_mpz_t(), a.den_.get_mpz_t(), b.den_.get_mpz_t());
        mpz_class fa = den / a.den_, fb = den / b.den_;
        IntMat m;
        for (const auto& r : a.rows_) {
            IntRow s(a.n_);
            for (std::size_t j = 0; j < a.n_; ++j)
                s[j] = r[j] * fa;
            m.push_back(std::move(s));
        }
        for (const auto& r : b.rows_) {
            IntRow s(a.n_);
            for (std::size_t j = 0; j < a.n_; ++j)
                s[j] = -r[j] * fb;
            m.push_back(std::move(s));
        }
        auto res = hnf(m, a.n_);
        std::vector<QRow> gens;
        for (const auto& c : res.kernel) {
            QRow v(a.n_, 0);
            for (std::size_t i = 0; i < a.rows_.size(); ++i)
                for (std::size_t j = 0; j < a.n_; ++j)
                    v[j] += mpq_class(c[i] * m[i][j], den);
            gens.push_back(std::move(v));
        }
        return span(gens, a.n_);
    }

    bool contains(const QRow& v) const { return (*this + span({v}, n_)) == *this; }
    bool contains(const QLattice& o) const { return (*this + o) == *this; }

    friend bool operator==(const QLattice& a, const QLattice& b)
    {
        return a.n_ == b.n_ && a.den_ == b.den_ && a.rows_ == b.rows_;
    }
};

/// Canonical basis of the Q-span: reduced row echelon form, each row scaled to a
/// primitive integer vector with positive pivot.
inline std::vector<QRow> rational_span(const std::vector<QRow>& vecs, std::size_t n)
{
    std::vector<QRow> m = vecs;
    std::vector<QRow> out;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = row;
        while (piv < m.size() && m[piv][col] == 0)
            ++piv;
        if (piv == m.size())
            continue;
        std::swap(m[row], m[piv]);
        mpq_class p = m[row][col];
        for (auto& e : m[row])
            e /= p;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == row || m[i][col] == 0)
                continue;
            mpq_class f = m[i][col];
            for (std::size_t j = 0; j < n; ++j)
                m[i][j] -= f * m[row][j];
        }
        ++row;
    }
    for (std::size_t i = 0; i < row; ++i) {
        mpz_class l = 1, g = 0;
        for (const auto& e : m[i])
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.get_den_mpz_t());
        QRow r(n);
        for (std::size_t j = 0; j < n; ++j) {
            r[j] = m[i][j] * l;
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), r[j].get_num_mpz_t());
        }
        for (auto& e : r)
            e /= g;
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace starpull::lattice
