#pragma once

/*
 * Star operations as values.  Each operation lives on one ring: D, R or T.
 *
 *   d, v, t                   on any side
 *   meet(a, b)                pointwise intersection, same side
 *   finite(a)                 finite-type companion; equals a on f.g. inputs
 *   proj(a)   R -> D          F |-> phi((phi^-1 F)^a)
 *   lift(a)   D -> R          u phi^-1(J) |-> u phi^-1(J^a)
 *   extT(a)   R -> T          E |-> E^a cap (T:(T:E))
 *   restT(a)  R -> T          E |-> E^a
 *   ovr(a)    T -> R          E |-> (ET)^a, only inside a meet
 *   w(a)                      stable companion, a tag that cannot be evaluated
 */

#include <memory>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "starpull/pullback.hpp"
#include "starpull/report.hpp"

namespace starpull {

enum class Side { D, R, T };

inline std::string side_name(Side s)
{
    switch (s) {
    case Side::D:
        return "D";
    case Side::R:
        return "R";
    case Side::T:
        return "T";
    }
    return "?";
}

enum class StarKind { d, v, t, meet, finite_type, projected, lifted, extended_T, restricted_T, overring_induced, stable };

class StarOp
{
    StarKind kind_;
    Side side_;
    std::vector<std::shared_ptr<const StarOp>> args_;

    StarOp(StarKind k, Side s, std::vector<std::shared_ptr<const StarOp>> a) : kind_(k), side_(s), args_(std::move(a)) {}

    static std::shared_ptr<const StarOp> box(const StarOp& o) { return std::make_shared<const StarOp>(o); }

    static void expect_side(const StarOp& o, Side s, const char* what)
    {
        if (o.side_ != s)
            throw evaluation_error(std::string(what) + " expects an operation on " + side_name(s) + ", got " +
                                   o.name() + " on " + side_name(o.side_));
    }

  public:
    static StarOp d(Side s) { return {StarKind::d, s, {}}; }
    static StarOp v(Side s) { return {StarKind::v, s, {}}; }
    static StarOp t(Side s) { return {StarKind::t, s, {}}; }

    static StarOp meet(const StarOp& a, const StarOp& b)
    {
        if (a.side_ != b.side_)
            throw evaluation_error("meet of operations on different rings: " + a.name() + ", " + b.name());
        return {StarKind::meet, a.side_, {box(a), box(b)}};
    }
    static StarOp finite_type(const StarOp& a) { return {StarKind::finite_type, a.side_, {box(a)}}; }
    static StarOp stable(const StarOp& a) { return {StarKind::stable, a.side_, {box(a)}}; }
    static StarOp projected(const StarOp& a)
    {
        expect_side(a, Side::R, "proj");
        return {StarKind::projected, Side::D, {box(a)}};
    }
    static StarOp lifted(const StarOp& a)
    {
        expect_side(a, Side::D, "lift");
        return {StarKind::lifted, Side::R, {box(a)}};
    }
    static StarOp extended_T(const StarOp& a)
    {
        expect_side(a, Side::R, "extT");
        return {StarKind::extended_T, Side::T, {box(a)}};
    }
    static StarOp restricted_T(const StarOp& a)
    {
        expect_side(a, Side::R, "restT");
        return {StarKind::restricted_T, Side::T, {box(a)}};
    }
    static StarOp overring_induced(const StarOp& a)
    {
        expect_side(a, Side::T, "ovr");
        return {StarKind::overring_induced, Side::R, {box(a)}};
    }

    StarKind kind() const { return kind_; }
    Side side() const { return side_; }
    const StarOp& arg(std::size_t i = 0) const { return *args_.at(i); }

    /// CLI spelling; the base operations carry their ring as a suffix, e.g. v_D.
    std::string name() const
    {
        switch (kind_) {
        case StarKind::d:
            return "d_" + side_name(side_);
        case StarKind::v:
            return "v_" + side_name(side_);
        case StarKind::t:
            return "t_" + side_name(side_);
        case StarKind::meet:
            return "meet(" + arg(0).name() + "," + arg(1).name() + ")";
        case StarKind::finite_type:
            return "finite(" + arg().name() + ")";
        case StarKind::stable:
            return "w(" + arg().name() + ")";
        case StarKind::projected:
            return "proj(" + arg().name() + ")";
        case StarKind::lifted:
            return "lift(" + arg().name() + ")";
        case StarKind::extended_T:
            return "extT(" + arg().name() + ")";
        case StarKind::restricted_T:
            return "restT(" + arg().name() + ")";
        case StarKind::overring_induced:
            return "ovr(" + arg().name() + ")";
        }
        return "?";
    }
};

inline StarOp star_meet(const StarOp& a, const StarOp& b) { return StarOp::meet(a, b); }

using IdealValue = std::variant<ExtDModule, StructuredIdeal, TIdeal>;

inline Side side_of(const IdealValue& v)
{
    if (std::holds_alternative<ExtDModule>(v))
        return Side::D;
    if (std::holds_alternative<StructuredIdeal>(v))
        return Side::R;
    return Side::T;
}

// ---- T-side helpers ----------------------------------------------------------

/// c1 T inside c2 T.
inline bool t_contains(const TIdeal& big, const TIdeal& small, const PullbackInstance& inst)
{
    return inst.in_T(small.c / big.c);
}

inline TIdeal t_intersect(const TIdeal& a, const TIdeal& b, const PullbackInstance& inst)
{
    if (inst.t_kind() == TKind::local)
        return make_T_ideal(ord_at_zero(a.c) >= ord_at_zero(b.c) ? a.c : b.c, inst);
    Poly n = poly_lcm(a.c.num(), b.c.num());
    Poly d = poly_gcd(a.c.den(), b.c.den());
    return make_T_ideal(RatFunc(n, d), inst);
}

// ---- evaluation --------------------------------------------------------------

namespace detail {

inline void reject_bare_ovr(const StarOp& op, bool inside_meet)
{
    if (op.kind() == StarKind::overring_induced && !inside_meet)
        throw evaluation_error(op.name() + " is a semistar operation on R (it moves R to T); "
                               "evaluate it inside a meet");
}

inline void reject_stable(const StarOp& op)
{
    if (op.kind() == StarKind::stable)
        throw evaluation_error(op.name() + " needs the maximal t-ideals of the ring and is not evaluated");
}

} // namespace detail

inline ExtDModule star_eval_D(const StarOp& op, const ExtDModule& J, const PullbackInstance& inst);
inline StructuredIdeal star_eval_R(const StarOp& op, const StructuredIdeal& S, const PullbackInstance& inst,
                                   bool inside_meet = false);
inline TIdeal star_eval_T(const StarOp& op, const TIdeal& c, const PullbackInstance& inst);

inline ExtDModule star_eval_D(const StarOp& op, const ExtDModule& J, const PullbackInstance& inst)
{
    if (op.side() != Side::D)
        throw evaluation_error(op.name() + " does not act on D-modules");
    detail::reject_stable(op);
    if (J.is_zero())
        throw evaluation_error("star operations act on nonzero modules");
    const auto& D = inst.D();
    switch (op.kind()) {
    case StarKind::d:
        return J;
    case StarKind::v:
    case StarKind::t:
        return dmod_v(J, D);
    case StarKind::finite_type:
        return star_eval_D(op.arg(), J, inst);
    case StarKind::meet:
        return dmod_intersect(star_eval_D(op.arg(0), J, inst), star_eval_D(op.arg(1), J, inst), D);
    case StarKind::projected: {
        StructuredIdeal S = star_eval_R(op.arg(), inverse_image_R(J, inst), inst);
        if (!(S.u == RatFunc(1)))
            throw evaluation_error("projection left the form phi^-1(F): " + to_string(S, inst));
        return S.J;
    }
    default:
        throw evaluation_error(op.name() + " is not evaluable on D");
    }
}

inline StructuredIdeal star_eval_R(const StarOp& op, const StructuredIdeal& S, const PullbackInstance& inst,
                                   bool inside_meet)
{
    if (op.side() != Side::R)
        throw evaluation_error(op.name() + " does not act on ideals of R");
    detail::reject_stable(op);
    detail::reject_bare_ovr(op, inside_meet);
    switch (op.kind()) {
    case StarKind::d:
        return S;
    case StarKind::v:
        return v_closure_R(S, inst);
    case StarKind::t:
        return t_closure_R(S, inst);
    case StarKind::finite_type:
        return star_eval_R(op.arg(), S, inst, inside_meet);
    case StarKind::meet:
        return ideal_intersect(star_eval_R(op.arg(0), S, inst, true), star_eval_R(op.arg(1), S, inst, true), inst);
    case StarKind::lifted: {
        // D-modules that are not fractional ideals of D (colon zero) go to k
        if (S.J.is_full() || dmod_colon(S.J, inst.D()).is_zero())
            return canonical(S.u, ExtDModule::full(), inst);
        return canonical(S.u, star_eval_D(op.arg(), S.J, inst), inst);
    }
    case StarKind::overring_induced:
        return T_ideal_as_R(star_eval_T(op.arg(), extend_to_T(S, inst), inst), inst);
    default:
        throw evaluation_error(op.name() + " is not evaluable on R");
    }
}

inline TIdeal star_eval_T(const StarOp& op, const TIdeal& c, const PullbackInstance& inst)
{
    if (op.side() != Side::T)
        throw evaluation_error(op.name() + " does not act on ideals of T");
    detail::reject_stable(op);
    switch (op.kind()) {
    case StarKind::d:
    case StarKind::v:
    case StarKind::t:
        return c; // every fractional ideal of T is principal
    case StarKind::finite_type:
        return star_eval_T(op.arg(), c, inst);
    case StarKind::meet:
        return t_intersect(star_eval_T(op.arg(0), c, inst), star_eval_T(op.arg(1), c, inst), inst);
    case StarKind::extended_T: {
        StructuredIdeal E = T_ideal_as_R(c, inst);
        StructuredIdeal r = ideal_intersect(star_eval_R(op.arg(), E, inst), E, inst);
        auto t = as_T_ideal(r, inst);
        if (!t)
            throw evaluation_error("extension did not return a T-module: " + to_string(r, inst));
        return *t;
    }
    case StarKind::restricted_T: {
        StructuredIdeal r = star_eval_R(op.arg(), T_ideal_as_R(c, inst), inst);
        auto t = as_T_ideal(r, inst);
        if (!t)
            throw evaluation_error("restriction did not return a T-module: " + to_string(r, inst));
        return *t;
    }
    default:
        throw evaluation_error(op.name() + " is not evaluable on T");
    }
}

inline IdealValue star_eval(const StarOp& op, const IdealValue& v, const PullbackInstance& inst)
{
    if (op.side() != side_of(v))
        throw evaluation_error(op.name() + " acts on " + side_name(op.side()) + " but the argument lives on " +
                               side_name(side_of(v)));
    if (auto* j = std::get_if<ExtDModule>(&v))
        return star_eval_D(op, *j, inst);
    if (auto* s = std::get_if<StructuredIdeal>(&v))
        return star_eval_R(op, *s, inst);
    return star_eval_T(op, std::get<TIdeal>(v), inst);
}

// ---- generic value helpers ---------------------------------------------------

inline bool value_contains(const IdealValue& big, const IdealValue& small, const PullbackInstance& inst)
{
    if (side_of(big) != side_of(small))
        throw evaluation_error("containment across rings");
    if (auto* j = std::get_if<ExtDModule>(&big))
        return dmod_contains(*j, std::get<ExtDModule>(small), inst.D());
    if (auto* s = std::get_if<StructuredIdeal>(&big))
        return contains(*s, std::get<StructuredIdeal>(small), inst);
    return t_contains(std::get<TIdeal>(big), std::get<TIdeal>(small), inst);
}

inline std::string value_to_string(const IdealValue& v, const PullbackInstance& inst)
{
    if (auto* j = std::get_if<ExtDModule>(&v))
        return to_string(*j, inst.D());
    if (auto* s = std::get_if<StructuredIdeal>(&v))
        return to_string(*s, inst);
    return to_string(std::get<TIdeal>(v), inst);
}

/// Parseable form, used as the replay witness of a violation.
inline std::string value_to_expr(const IdealValue& v, const PullbackInstance& inst)
{
    return std::visit(
        [&](const auto& x) -> std::string {
            using V = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<V, ExtDModule>)
                return to_expr(x, inst.D());
            else
                return to_expr(x, inst);
        },
        v);
}

/// Scalar multiplication; D-side scalars must be constants of the quotient field of D.
inline IdealValue value_scale(const RatFunc& z, const IdealValue& v, const PullbackInstance& inst)
{
    if (z.is_zero())
        throw evaluation_error("scaling by zero");
    if (auto* j = std::get_if<ExtDModule>(&v)) {
        if (!z.is_constant())
            throw evaluation_error("D-modules scale by constants only");
        return dmod_scale(z.constant_value().with_tag(inst.tag()), *j, inst.D());
    }
    if (auto* s = std::get_if<StructuredIdeal>(&v))
        return scale(z, *s, inst);
    return make_T_ideal(z * std::get<TIdeal>(v).c, inst);
}

inline IdealValue value_add(const IdealValue& a, const IdealValue& b, const PullbackInstance& inst)
{
    if (side_of(a) != side_of(b))
        throw evaluation_error("sum across rings");
    if (auto* j = std::get_if<ExtDModule>(&a))
        return dmod_add(*j, std::get<ExtDModule>(b), inst.D());
    if (auto* s = std::get_if<StructuredIdeal>(&a))
        return ideal_add(*s, std::get<StructuredIdeal>(b), inst);
    RawIdeal both({std::get<TIdeal>(a).c, std::get<TIdeal>(b).c});
    return make_T_ideal(content_T(both, inst).first, inst);
}

/// The principal ideal zD, zR or zT.
inline IdealValue principal_value(Side s, const RatFunc& z, const PullbackInstance& inst)
{
    switch (s) {
    case Side::D:
        if (!z.is_constant())
            throw evaluation_error("D-side principal ideals need a constant generator");
        return ExtDModule::principal(z.constant_value().with_tag(inst.tag()), inst.D());
    case Side::R:
        return principal_ideal(z, inst);
    case Side::T:
        return make_T_ideal(z, inst);
    }
    throw evaluation_error("unknown side");
}

// ---- checks ------------------------------------------------------------------

/// op1 <= op2 on every sample.
inline Report star_leq_check(const StarOp& op1, const StarOp& op2, const std::vector<IdealValue>& samples,
                             const PullbackInstance& inst)
{
    Report r;
    r.suite = "star-leq";
    r.instance = inst.name();
    r.details["ops"] = {op1.name(), op2.name()};
    std::size_t equal = 0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        IdealValue a = star_eval(op1, samples[i], inst);
        IdealValue b = star_eval(op2, samples[i], inst);
        if (!value_contains(b, a, inst))
            r.fail(i, op1.name() + "(E) inside " + op2.name() + "(E)", value_to_string(a, inst) + " vs " + value_to_string(b, inst),
                   value_to_expr(samples[i], inst));
        else if (value_contains(a, b, inst))
            ++equal;
        ++r.n_samples;
    }
    r.details["equal_on"] = equal;
    return r;
}

/// Extensive, idempotent, scalar compatible, fixes principal ideals, monotone on
/// the nested pairs (E, E + F).
inline Report star_axiom_check(const StarOp& op, const std::vector<IdealValue>& samples,
                               const std::vector<RatFunc>& scalars, const PullbackInstance& inst)
{
    Report r;
    r.suite = "star-axioms";
    r.instance = inst.name();
    r.details["op"] = op.name();
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const IdealValue& E = samples[i];
        const std::string es = value_to_expr(E, inst);
        IdealValue Es = star_eval(op, E, inst);
        if (!value_contains(Es, E, inst))
            r.fail(i, "E inside E*", value_to_string(Es, inst), es);
        IdealValue Ess = star_eval(op, Es, inst);
        if (!value_contains(Es, Ess, inst) || !value_contains(Ess, Es, inst))
            r.fail(i, "(E*)* = E*", value_to_string(Ess, inst), es);
        for (const auto& z : scalars) {
            if (side_of(E) == Side::D && (!z.is_constant() || !inst.D().in_quotient_field(z.constant_value())))
                continue;
            IdealValue zE = value_scale(z, E, inst);
            IdealValue lhs = star_eval(op, zE, inst);
            IdealValue rhs = value_scale(z, Es, inst);
            if (!value_contains(lhs, rhs, inst) || !value_contains(rhs, lhs, inst))
                r.fail(i, "(zE)* = zE* for z = " + z.to_string(), value_to_string(lhs, inst), es);
            IdealValue P = principal_value(side_of(E), z, inst);
            IdealValue Ps = star_eval(op, P, inst);
            if (!value_contains(P, Ps, inst))
                r.fail(i, "(zR)* = zR for z = " + z.to_string(), value_to_string(Ps, inst), value_to_expr(P, inst));
        }
        const IdealValue& F = samples[(i + 1) % samples.size()];
        IdealValue EF = value_add(E, F, inst);
        if (!value_contains(star_eval(op, EF, inst), Es, inst))
            r.fail(i, "E* inside (E+F)*", value_to_string(star_eval(op, EF, inst), inst), es + " ; " + value_to_expr(F, inst));
        ++r.n_samples;
    }
    return r;
}

} // namespace starpull
