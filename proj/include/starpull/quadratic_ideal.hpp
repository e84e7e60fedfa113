#pragma once

/*
 * Fractional ideals of the maximal order of an imaginary quadratic field,
 * stored as Z-lattices in the (1, sqrt d) coordinates, and the binary
 * quadratic forms attached to them.
 */

#include <gmpxx.h>

#include <array>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "starpull/kernel/coords.hpp"
#include "starpull/lattice.hpp"

namespace starpull::quadratic {

/// Generator of the maximal order: sqrt(d) or (1 + sqrt(d))/2.
inline FieldElem omega(long d)
{
    long m = ((d % 4) + 4) % 4;
    if (m == 1)
        return FieldElem(mpq_class(1, 2), mpq_class(1, 2), d);
    return FieldElem::sqrt_of(d);
}

/// Field discriminant of Q(sqrt d).
inline long discriminant(long d)
{
    long m = ((d % 4) + 4) % 4;
    return m == 1 ? d : 4 * d;
}

/// Covolume of the maximal order in (1, sqrt d) coordinates.
inline mpq_class order_covolume(long d)
{
    long m = ((d % 4) + 4) % 4;
    return m == 1 ? mpq_class(1, 2) : mpq_class(1);
}

/// Z-span of {g, g*omega} over all generators: the O_K-module they generate.
inline lattice::QLattice ideal_from_gens(const std::vector<FieldElem>& gens, long d)
{
    FieldElem w = omega(d);
    std::vector<lattice::QRow> v;
    for (const auto& g : gens) {
        v.push_back(to_coords(g, d));
        v.push_back(to_coords(g * w, d));
    }
    return lattice::QLattice::span(v, 2);
}

inline std::vector<FieldElem> elements(const lattice::QLattice& l, long d)
{
    std::vector<FieldElem> out;
    for (const auto& r : l.basis())
        out.push_back(from_coords(r, d));
    return out;
}

inline lattice::QLattice ideal_mul(const lattice::QLattice& a, const lattice::QLattice& b, long d)
{
    std::vector<FieldElem> gens;
    for (const auto& x : elements(a, d))
        for (const auto& y : elements(b, d))
            gens.push_back(x * y);
    return ideal_from_gens(gens, d);
}

/// Absolute norm of a rank-2 lattice, relative to the maximal order.
inline mpq_class ideal_norm(const lattice::QLattice& l, long d)
{
    auto b = l.basis();
    if (b.size() != 2)
        throw evaluation_error("norm of a lattice that is not of full rank");
    mpq_class det = b[0][0] * b[1][1] - b[0][1] * b[1][0];
    return abs(det) / order_covolume(d);
}

struct BinaryForm {
    mpz_class a, b, c;
    friend bool operator==(const BinaryForm&, const BinaryForm&) = default;
    mpz_class disc() const { return b * b - 4 * a * c; }
};

inline BinaryForm reduce(BinaryForm f)
{
    for (;;) {
        if (f.b > f.a || f.b <= -f.a) {
            mpz_class k, num = f.a - f.b, den = 2 * f.a;
            mpz_fdiv_q(k.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            mpz_class nb = f.b + 2 * f.a * k;
            f.c = f.a * k * k + f.b * k + f.c;
            f.b = nb;
        }
        if (f.a > f.c) {
            std::swap(f.a, f.c);
            f.b = -f.b;
            continue;
        }
        if (f.a == f.c && f.b < 0)
            f.b = -f.b;
        return f;
    }
}

/// Oriented basis (alpha, beta) with Im(beta/alpha) > 0.
inline std::pair<FieldElem, FieldElem> oriented_basis(const lattice::QLattice& l, long d)
{
    auto e = elements(l, d);
    if (e.size() != 2)
        throw evaluation_error("ideal lattice must have rank 2");
    FieldElem s = e[1] * e[0].conj();
    if (s.surd_part() < 0)
        std::swap(e[0], e[1]);
    return {e[0], e[1]};
}

/// Reduced form N(x*alpha - y*beta)/N(I); its proper equivalence class is the ideal class.
inline BinaryForm form_of_ideal(const lattice::QLattice& l, long d)
{
    auto [al, be] = oriented_basis(l, d);
    mpq_class n = ideal_norm(l, d);
    mpq_class a = al.norm() / n;
    mpq_class b = -(al * be.conj()).trace() / n;
    mpq_class c = be.norm() / n;
    if (a.get_den() != 1 || b.get_den() != 1 || c.get_den() != 1)
        throw evaluation_error("lattice is not an ideal of the maximal order");
    return reduce(BinaryForm{a.get_num(), b.get_num(), c.get_num()});
}

/// The ideal Z*a + Z*(-b + sqrt(Delta))/2 attached to a form.
inline lattice::QLattice ideal_of_form(const BinaryForm& f, long d)
{
    long disc = discriminant(d);
    // sqrt(Delta) = sqrt(d) if Delta = d, else 2 sqrt(d)
    mpq_class surd = disc == d ? mpq_class(1, 2) : mpq_class(1);
    FieldElem beta(mpq_class(-f.b, 2), surd, d);
    return ideal_from_gens({FieldElem(mpq_class(f.a)).with_tag(d), beta}, d);
}

/// Reduced primitive positive definite forms of discriminant disc < 0.
inline std::vector<BinaryForm> reduced_forms(long disc)
{
    std::vector<BinaryForm> out;
    long nd = -disc;
    for (long a = 1; 3 * a * a <= nd; ++a) {
        for (long b = -a + 1; b <= a; ++b) {
            long num = b * b - disc;
            if (num % (4 * a) != 0)
                continue;
            long c = num / (4 * a);
            if (c < a || (c == a && b < 0))
                continue;
            mpz_class g = gcd(gcd(mpz_class(a), mpz_class(b)), mpz_class(c));
            if (g != 1)
                continue;
            out.push_back({a, b, c});
        }
    }
    return out;
}

/// Gauss-reduced basis of a rank-2 lattice under the norm form; first vector is shortest.
inline std::pair<FieldElem, FieldElem> shortest_basis(const lattice::QLattice& l, long d)
{
    auto e = elements(l, d);
    FieldElem al = e.at(0), be = e.at(1);
    for (;;) {
        if (be.norm() < al.norm())
            std::swap(al, be);
        mpq_class bil = (al * be.conj()).trace() / 2;
        mpq_class q = bil / al.norm() + mpq_class(1, 2);
        mpz_class mu;
        mpz_fdiv_q(mu.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
        if (mu != 0)
            be = be - al * FieldElem(mpq_class(mu));
        if (be.norm() >= al.norm())
            return {al, be};
    }
}

/// A generator when the ideal is principal.
inline std::optional<FieldElem> principal_generator(const lattice::QLattice& l, long d)
{
    auto [al, be] = shortest_basis(l, d);
    if (al.norm() == ideal_norm(l, d))
        return al;
    return std::nullopt;
}

} // namespace starpull::quadratic
