#pragma once

/*
 * The D-side calculus.
 *
 * D is Z, the maximal order of an imaginary quadratic field, or Q sitting
 * inside k = Q(sqrt d).  A D-submodule of k is either ZERO, FULL (all of k)
 * or a finitely generated lattice:
 *   - Z and O_K modules are Z-lattices in the coordinates of k,
 *   - Q-modules are Q-subspaces (a proper one; the whole space is FULL).
 */

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "starpull/class_group.hpp"
#include "starpull/kernel/coords.hpp"
#include "starpull/lattice.hpp"

namespace starpull {

enum class DomainKind { integers, quadratic_order, field };

class BaseDomain
{
    DomainKind kind_ = DomainKind::integers;
    long d_ = 1; // k = Q(sqrt d_)
    std::shared_ptr<const ClassGroup> cl_;

  public:
    BaseDomain() : cl_(std::make_shared<ClassGroup>(ClassGroup::trivial())) {}

    /// D = Z inside k = Q(sqrt d) (d = 1 gives k = Q).
    static BaseDomain integers(long d = 1)
    {
        BaseDomain b;
        b.kind_ = DomainKind::integers;
        b.d_ = d;
        return b;
    }
    /// D = O_K inside k = K = Q(sqrt d), d < 0 squarefree.
    static BaseDomain quadratic_order(long d)
    {
        if (d >= 0 || !is_squarefree(d))
            throw unsupported_instance("quadratic order needs a negative squarefree d, got " + std::to_string(d));
        if (-quadratic::discriminant(d) > 400)
            throw unsupported_instance("class group computation limited to |disc| <= 400");
        BaseDomain b;
        b.kind_ = DomainKind::quadratic_order;
        b.d_ = d;
        b.cl_ = std::make_shared<ClassGroup>(ClassGroup::imaginary_quadratic(d));
        return b;
    }
    /// D = Q inside k = Q(sqrt d).
    static BaseDomain rational_field(long d)
    {
        if (d == 1)
            throw unsupported_instance("D = Q must be a proper subring of k");
        BaseDomain b;
        b.kind_ = DomainKind::field;
        b.d_ = d;
        return b;
    }

    DomainKind kind() const { return kind_; }
    long field_tag() const { return d_; }
    std::size_t k_dim() const { return field_degree(d_); }
    /// qf(D) == k, i.e. the diagram is of type (square+).
    bool quotient_field_is_k() const { return kind_ == DomainKind::quadratic_order || d_ == 1; }
    bool is_field() const { return kind_ == DomainKind::field; }
    /// Z, Dedekind orders and fields are all PvMDs.
    bool is_pvmd() const { return true; }
    const ClassGroup& class_group() const { return *cl_; }

    /// Z-basis of D (a Q-basis when D is a field).
    std::vector<FieldElem> basis() const
    {
        FieldElem one = FieldElem(1).with_tag(d_);
        if (kind_ == DomainKind::quadratic_order)
            return {one, quadratic::omega(d_)};
        return {one};
    }

    bool contains(const FieldElem& x) const
    {
        auto c = to_coords(x, d_);
        switch (kind_) {
        case DomainKind::field:
            return k_dim() == 1 || c[1] == 0;
        case DomainKind::integers:
            return c[0].get_den() == 1 && (k_dim() == 1 || c[1] == 0);
        case DomainKind::quadratic_order: {
            if (((d_ % 4) + 4) % 4 != 1)
                return c[0].get_den() == 1 && c[1].get_den() == 1;
            mpq_class a = 2 * c[0], b = 2 * c[1];
            if (a.get_den() != 1 || b.get_den() != 1)
                return false;
            mpz_class diff = a.get_num() - b.get_num();
            return mpz_even_p(diff.get_mpz_t()) != 0;
        }
        }
        return false;
    }

    bool is_unit(const FieldElem& x) const
    {
        if (x.is_zero() || !contains(x))
            return false;
        return contains(x.inv());
    }

    /// Membership in the quotient field of D.
    bool in_quotient_field(const FieldElem& x) const { return quotient_field_is_k() || x.is_rational(); }

    std::string name() const
    {
        switch (kind_) {
        case DomainKind::integers:
            return "ℤ";
        case DomainKind::field:
            return "ℚ";
        case DomainKind::quadratic_order:
            return "O_K";
        }
        return "?";
    }

    std::string field_name() const
    {
        if (d_ == 1)
            return "ℚ";
        if (d_ == -1)
            return "ℚ(i)";
        return "ℚ(√" + std::to_string(d_) + ")";
    }

    friend bool operator==(const BaseDomain& a, const BaseDomain& b)
    {
        return a.kind_ == b.kind_ && a.d_ == b.d_;
    }
};

class ExtDModule
{
  public:
    enum class Kind { zero, full, lattice };

  private:
    Kind kind_ = Kind::zero;
    lattice::QLattice lat_;

    ExtDModule(Kind k, lattice::QLattice l) : kind_(k), lat_(std::move(l)) {}

  public:
    ExtDModule() = default;
    static ExtDModule zero() { return {}; }
    static ExtDModule full() { return ExtDModule(Kind::full, {}); }

    /// Canonical form of the D-module generated by gens.
    static ExtDModule from_generators(const std::vector<FieldElem>& gens, const BaseDomain& D)
    {
        const long d = D.field_tag();
        const std::size_t n = D.k_dim();
        std::vector<lattice::QRow> rows;
        for (const auto& g : gens) {
            if (g.is_zero())
                continue;
            for (const auto& b : D.basis())
                rows.push_back(to_coords(g * b, d));
        }
        if (rows.empty())
            return zero();
        if (D.is_field()) {
            auto r = lattice::rational_span(rows, n);
            if (r.size() == n)
                return full();
            return ExtDModule(Kind::lattice, lattice::QLattice::span(r, n));
        }
        return ExtDModule(Kind::lattice, lattice::QLattice::span(rows, n));
    }

    static ExtDModule unit(const BaseDomain& D) { return from_generators({FieldElem(1)}, D); }
    static ExtDModule principal(const FieldElem& c, const BaseDomain& D) { return from_generators({c}, D); }

    Kind kind() const { return kind_; }
    bool is_zero() const { return kind_ == Kind::zero; }
    bool is_full() const { return kind_ == Kind::full; }
    bool is_lattice() const { return kind_ == Kind::lattice; }
    const lattice::QLattice& lat() const { return lat_; }
    std::size_t rank() const { return lat_.rank(); }

    /// Lattice basis as field elements (D-generators of the module).
    std::vector<FieldElem> generators(const BaseDomain& D) const
    {
        std::vector<FieldElem> out;
        if (kind_ != Kind::lattice)
            return out;
        for (const auto& r : lat_.basis())
            out.push_back(from_coords(r, D.field_tag()));
        return out;
    }

    friend bool operator==(const ExtDModule& a, const ExtDModule& b)
    {
        return a.kind_ == b.kind_ && (a.kind_ != Kind::lattice || a.lat_ == b.lat_);
    }
};

// ---- operations ------------------------------------------------------------

inline ExtDModule dmod_from_generators(const std::vector<FieldElem>& gens, const BaseDomain& D)
{
    return ExtDModule::from_generators(gens, D);
}

inline ExtDModule dmod_add(const ExtDModule& a, const ExtDModule& b, const BaseDomain& D)
{
    if (a.is_zero())
        return b;
    if (b.is_zero())
        return a;
    if (a.is_full() || b.is_full())
        return ExtDModule::full();
    auto g = a.generators(D);
    auto h = b.generators(D);
    g.insert(g.end(), h.begin(), h.end());
    return ExtDModule::from_generators(g, D);
}

inline ExtDModule dmod_mul(const ExtDModule& a, const ExtDModule& b, const BaseDomain& D)
{
    if (a.is_zero() || b.is_zero())
        return ExtDModule::zero();
    if (a.is_full() || b.is_full())
        return ExtDModule::full();
    std::vector<FieldElem> g;
    for (const auto& x : a.generators(D))
        for (const auto& y : b.generators(D))
            g.push_back(x * y);
    return ExtDModule::from_generators(g, D);
}

inline ExtDModule dmod_scale(const FieldElem& c, const ExtDModule& a, const BaseDomain& D)
{
    if (c.is_zero())
        return ExtDModule::zero();
    if (!a.is_lattice())
        return a;
    std::vector<FieldElem> g;
    for (const auto& x : a.generators(D))
        g.push_back(c * x);
    return ExtDModule::from_generators(g, D);
}

inline ExtDModule dmod_intersect(const ExtDModule& a, const ExtDModule& b, const BaseDomain& D)
{
    if (a.is_zero() || b.is_zero())
        return ExtDModule::zero();
    if (a.is_full())
        return b;
    if (b.is_full())
        return a;
    auto l = intersect(a.lat(), b.lat());
    std::vector<FieldElem> g;
    for (const auto& r : l.basis())
        g.push_back(from_coords(r, D.field_tag()));
    return ExtDModule::from_generators(g, D);
}

/// {y in k : y N subset of D}.
inline ExtDModule dmod_colon(const ExtDModule& N, const BaseDomain& D)
{
    if (N.is_zero())
        return ExtDModule::full();
    if (N.is_full())
        return ExtDModule::zero();
    const long d = D.field_tag();
    const std::size_t n = D.k_dim();
    std::optional<lattice::QLattice> acc;
    for (const auto& g : N.generators(D)) {
        FieldElem gi = g.inv();
        std::vector<lattice::QRow> rows;
        for (const auto& b : D.basis())
            rows.push_back(to_coords(gi * b, d));
        auto piece = lattice::QLattice::span(rows, n);
        acc = acc ? intersect(*acc, piece) : piece;
    }
    std::vector<FieldElem> gens;
    for (const auto& r : acc->basis())
        gens.push_back(from_coords(r, d));
    return ExtDModule::from_generators(gens, D);
}

inline ExtDModule dmod_v(const ExtDModule& N, const BaseDomain& D) { return dmod_colon(dmod_colon(N, D), D); }

inline bool dmod_member(const FieldElem& x, const ExtDModule& N, const BaseDomain& D)
{
    if (x.is_zero() || N.is_full())
        return true;
    if (N.is_zero())
        return false;
    return dmod_add(N, ExtDModule::principal(x, D), D) == N;
}

/// a subset of b.
inline bool dmod_contains(const ExtDModule& b, const ExtDModule& a, const BaseDomain& D)
{
    return dmod_add(a, b, D) == b;
}

inline std::optional<FieldElem> dmod_is_cyclic(const ExtDModule& N, const BaseDomain& D)
{
    if (!N.is_lattice())
        return std::nullopt;
    if (D.kind() == DomainKind::quadratic_order) {
        auto l = N.lat();
        if (l.rank() != 2)
            return std::nullopt;
        return quadratic::principal_generator(l, D.field_tag());
    }
    if (N.rank() != 1)
        return std::nullopt;
    return N.generators(D).front();
}

inline bool dmod_is_invertible(const ExtDModule& N, const BaseDomain& D)
{
    return dmod_mul(N, dmod_colon(N, D), D) == ExtDModule::unit(D);
}

inline bool dmod_is_v_invertible(const ExtDModule& N, const BaseDomain& D)
{
    return dmod_v(dmod_mul(N, dmod_colon(N, D), D), D) == ExtDModule::unit(D);
}

/// The bundle of predicates in one record.
struct DModPredicates {
    bool is_invertible = false;
    bool is_v_invertible = false;
    std::optional<FieldElem> cyclic_generator;
};

inline DModPredicates dmod_predicates(const ExtDModule& N, const BaseDomain& D)
{
    return {dmod_is_invertible(N, D), dmod_is_v_invertible(N, D), dmod_is_cyclic(N, D)};
}

/// Class of an invertible D-ideal.
inline ClassLabel class_label_D(const ExtDModule& N, const BaseDomain& D)
{
    if (D.kind() == DomainKind::field)
        throw evaluation_error("class labels are defined for Z and quadratic orders only");
    if (!dmod_is_invertible(N, D))
        throw evaluation_error("class label of a non-invertible D-module");
    if (D.kind() == DomainKind::integers)
        return D.class_group().identity();
    return D.class_group().label_of_ideal(N.lat());
}

/// Human-readable canonical form, e.g. "2ℤ" or "ℤ·2 + ℤ·(1+√-5)".
inline std::string to_string(const ExtDModule& N, const BaseDomain& D)
{
    if (N.is_zero())
        return "0";
    if (N.is_full())
        return D.field_name();
    auto g = N.generators(D);
    const std::string ring = D.is_field() ? "ℚ" : "ℤ";
    if (g.size() == 1) {
        if (g[0].is_one())
            return ring;
        if (g[0].is_rational())
            return g[0].to_string() + ring;
        return ring + "·(" + g[0].to_string() + ")";
    }
    std::string s;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (i)
            s += " + ";
        s += ring + "·" + (g[i].is_rational() ? g[i].to_string() : "(" + g[i].to_string() + ")");
    }
    return s;
}

/// Parseable D-side literal.
inline std::string to_expr(const ExtDModule& N, const BaseDomain& D)
{
    if (N.is_zero())
        return "dideal(0)";
    if (N.is_full())
        throw evaluation_error("the full field has no dideal literal");
    std::string s = "dideal(";
    auto g = N.generators(D);
    for (std::size_t i = 0; i < g.size(); ++i)
        s += (i ? ", " : "") + g[i].to_expr();
    return s + ")";
}

} // namespace starpull
