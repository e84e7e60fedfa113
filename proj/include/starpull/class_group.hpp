#pragma once

/*
 * Class groups of imaginary quadratic maximal orders at desk scale.
 *
 * The reduced forms of the field discriminant index the classes; the group
 * law comes from multiplying the attached ideals; the group is then written
 * as a product of cyclic groups and every class gets an exponent vector.
 */

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <string>
#include <tuple>
#include <vector>

#include "starpull/quadratic_ideal.hpp"

namespace starpull {

/// Element of Z/n1 x ... x Z/nr given by reduced exponents.
struct ClassLabel {
    std::vector<long> orders;
    std::vector<long> exps;

    bool is_identity() const
    {
        return std::all_of(exps.begin(), exps.end(), [](long e) { return e == 0; });
    }

    friend ClassLabel operator+(const ClassLabel& a, const ClassLabel& b)
    {
        if (a.orders != b.orders)
            throw evaluation_error("class labels from different groups");
        ClassLabel r = a;
        for (std::size_t i = 0; i < r.exps.size(); ++i)
            r.exps[i] = (a.exps[i] + b.exps[i]) % a.orders[i];
        return r;
    }
    ClassLabel operator-() const
    {
        ClassLabel r = *this;
        for (std::size_t i = 0; i < r.exps.size(); ++i)
            r.exps[i] = (orders[i] - exps[i]) % orders[i];
        return r;
    }
    friend bool operator==(const ClassLabel&, const ClassLabel&) = default;

    std::string to_string() const
    {
        std::string s = "[";
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (i)
                s += ", ";
            s += std::to_string(exps[i]) + " mod " + std::to_string(orders[i]);
        }
        return s + "]";
    }
};

/// Invariant-factor decomposition of a finite abelian group given by its table.
struct AbelianDecomposition {
    std::vector<long> orders;           // cyclic factor orders, largest first
    std::vector<std::vector<long>> coords; // coords[g] = exponent vector of element g
};

inline AbelianDecomposition decompose_abelian(const std::vector<std::vector<std::size_t>>& mul,
                                              std::size_t identity)
{
    const std::size_t n = mul.size();
    auto power = [&](std::size_t g, long k) {
        std::size_t r = identity;
        for (long i = 0; i < k; ++i)
            r = mul[r][g];
        return r;
    };
    auto order = [&](std::size_t g) {
        long k = 1;
        std::size_t r = g;
        while (r != identity) {
            r = mul[r][g];
            ++k;
        }
        return k;
    };

    // Greedy: repeatedly take an element of maximal order whose cyclic group meets
    // the span of the previous ones trivially. Verified below.
    std::vector<std::size_t> gens;
    std::vector<long> orders;
    std::vector<char> in_span(n, 0);
    in_span[identity] = 1;
    std::vector<std::size_t> span{identity};
    while (span.size() < n) {
        std::size_t best = identity;
        long best_order = 0;
        for (std::size_t g = 0; g < n; ++g) {
            if (in_span[g])
                continue;
            long o = order(g);
            bool trivial = true;
            for (long k = 1; k < o && trivial; ++k)
                if (in_span[power(g, k)])
                    trivial = false;
            if (trivial && o > best_order) {
                best = g;
                best_order = o;
            }
        }
        if (best_order == 0)
            throw evaluation_error("class group decomposition failed");
        gens.push_back(best);
        orders.push_back(best_order);
        std::vector<std::size_t> next;
        for (std::size_t s : span)
            for (long k = 0; k < best_order; ++k)
                next.push_back(mul[s][power(best, k)]);
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        span = next;
        for (std::size_t s : span)
            in_span[s] = 1;
    }

    AbelianDecomposition dec;
    dec.orders = orders;
    dec.coords.assign(n, {});
    std::vector<long> e(gens.size(), 0);
    std::vector<char> seen(n, 0);
    std::size_t filled = 0;
    for (;;) {
        std::size_t g = identity;
        for (std::size_t i = 0; i < gens.size(); ++i)
            g = mul[g][power(gens[i], e[i])];
        if (seen[g])
            throw evaluation_error("class group decomposition is not a direct product");
        seen[g] = 1;
        dec.coords[g] = e;
        ++filled;
        std::size_t i = 0;
        while (i < e.size() && ++e[i] == orders[i])
            e[i++] = 0;
        if (i == e.size())
            break;
    }
    if (filled != n)
        throw evaluation_error("class group decomposition does not cover the group");
    return dec;
}

class ClassGroup
{
    long d_ = 1;
    std::vector<quadratic::BinaryForm> forms_;
    AbelianDecomposition dec_;

    std::size_t index_of(const quadratic::BinaryForm& f) const
    {
        for (std::size_t i = 0; i < forms_.size(); ++i)
            if (forms_[i] == f)
                return i;
        throw evaluation_error("form is not reduced of the field discriminant");
    }

  public:
    ClassGroup() = default;

    /// Trivial group (for Z and for fields).
    static ClassGroup trivial()
    {
        ClassGroup g;
        g.dec_.coords = {{}};
        return g;
    }

    /// Class group of the maximal order of Q(sqrt d), d < 0.
    static ClassGroup imaginary_quadratic(long d)
    {
        ClassGroup g;
        g.d_ = d;
        long disc = quadratic::discriminant(d);
        g.forms_ = quadratic::reduced_forms(disc);
        const std::size_t h = g.forms_.size();
        std::vector<lattice::QLattice> ideals;
        for (const auto& f : g.forms_)
            ideals.push_back(quadratic::ideal_of_form(f, d));
        std::vector<std::vector<std::size_t>> mul(h, std::vector<std::size_t>(h));
        std::size_t identity = h;
        for (std::size_t i = 0; i < h; ++i) {
            if (g.forms_[i].a == 1)
                identity = i;
            for (std::size_t j = 0; j < h; ++j)
                mul[i][j] = g.index_of(
                    quadratic::form_of_ideal(quadratic::ideal_mul(ideals[i], ideals[j], d), d));
        }
        g.dec_ = decompose_abelian(mul, identity);
        return g;
    }

    std::size_t order() const { return dec_.coords.size(); }
    const std::vector<long>& cyclic_orders() const { return dec_.orders; }
    const std::vector<quadratic::BinaryForm>& reduced_forms() const { return forms_; }

    ClassLabel identity() const { return ClassLabel{dec_.orders, std::vector<long>(dec_.orders.size(), 0)}; }

    ClassLabel label_of_form(const quadratic::BinaryForm& f) const
    {
        return ClassLabel{dec_.orders, dec_.coords[index_of(quadratic::reduce(f))]};
    }

    /// Label of a fractional ideal (rank-2 O_K-lattice).
    ClassLabel label_of_ideal(const lattice::QLattice& l) const
    {
        if (forms_.empty())
            return identity();
        return label_of_form(quadratic::form_of_ideal(l, d_));
    }

    /// One ideal per class, in reduced-form order.
    std::vector<lattice::QLattice> representatives() const
    {
        std::vector<lattice::QLattice> out;
        for (const auto& f : forms_)
            out.push_back(quadratic::ideal_of_form(f, d_));
        return out;
    }
};

} // namespace starpull
