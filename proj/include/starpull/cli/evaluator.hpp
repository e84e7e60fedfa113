#pragma once

// Evaluation of parsed expressions against one pullback instance.

#include <string>
#include <variant>

#include <json.hpp>

#include "starpull/class_maps.hpp"
#include "starpull/cli/parser.hpp"

namespace starpull::cli {

struct Info {
    std::string text;
};

using ValueData = std::variant<RatFunc, StructuredIdeal, ExtDModule, TIdeal, ClassLabel, Info>;

struct Value {
    ValueData data;

    std::string kind() const
    {
        switch (data.index()) {
        case 0:
            return "element";
        case 1:
            return "R-ideal";
        case 2:
            return "D-module";
        case 3:
            return "T-ideal";
        case 4:
            return "class";
        default:
            return "info";
        }
    }

    std::string to_string(const PullbackInstance& inst) const
    {
        return std::visit(
            [&](const auto& x) -> std::string {
                using V = std::decay_t<decltype(x)>;
                if constexpr (std::is_same_v<V, RatFunc>)
                    return x.to_string();
                else if constexpr (std::is_same_v<V, ExtDModule>)
                    return starpull::to_string(x, inst.D());
                else if constexpr (std::is_same_v<V, ClassLabel>)
                    return x.to_string();
                else if constexpr (std::is_same_v<V, Info>)
                    return x.text;
                else
                    return starpull::to_string(x, inst);
            },
            data);
    }

    /// Re-parseable form where one exists.
    std::string to_expr(const PullbackInstance& inst) const
    {
        return std::visit(
            [&](const auto& x) -> std::string {
                using V = std::decay_t<decltype(x)>;
                if constexpr (std::is_same_v<V, RatFunc>)
                    return x.to_expr();
                else if constexpr (std::is_same_v<V, ExtDModule>)
                    return starpull::to_expr(x, inst.D());
                else if constexpr (std::is_same_v<V, ClassLabel>)
                    return x.to_string();
                else if constexpr (std::is_same_v<V, Info>)
                    return x.text;
                else
                    return starpull::to_expr(x, inst);
            },
            data);
    }

    nlohmann::ordered_json to_json(const PullbackInstance& inst) const
    {
        return {{"kind", kind()}, {"value", to_string(inst)}, {"expr", to_expr(inst)}};
    }
};

/// sqrt(n) inside k: n = s^2 d0 with d0 the field tag (or 1).
inline FieldElem sqrt_in_field(const mpz_class& n, const PullbackInstance& inst)
{
    if (n == 0)
        return FieldElem(0);
    mpz_class a = abs(n), s = 1, d0 = 1;
    for (mpz_class p = 2; p * p <= a; ++p) {
        while (a % (p * p) == 0) {
            a /= p * p;
            s *= p;
        }
        if (a % p == 0) {
            a /= p;
            d0 *= p;
        }
    }
    d0 *= a;
    if (n < 0)
        d0 = -d0;
    if (d0 == 1)
        return FieldElem(mpq_class(s));
    if (!d0.fits_slong_p() || d0.get_si() != inst.tag())
        throw evaluation_error("sqrt(" + n.get_str() + ") is not in " + inst.D().field_name());
    return FieldElem(mpq_class(0), mpq_class(s), inst.tag());
}

inline Side resolve_side(char c, Side want, const std::string& name)
{
    Side s = c == 'D' ? Side::D : c == 'R' ? Side::R : c == 'T' ? Side::T : want;
    if (s != want)
        throw evaluation_error(name + " acts on " + side_name(s) + ", needed on " + side_name(want));
    return s;
}

/// Builds the star operation named by an op node for values on the given side.
inline StarOp resolve_op(const Expr& e, Side want)
{
    auto [base, c] = split_side(e.name);
    if (base == "d" || base == "v" || base == "t") {
        Side s = resolve_side(c, want, e.name);
        return base == "d" ? StarOp::d(s) : base == "v" ? StarOp::v(s) : StarOp::t(s);
    }
    auto from = [&](Side needed, Side arg) {
        if (want != needed)
            throw evaluation_error(base + "(..) acts on " + side_name(needed) + ", needed on " + side_name(want));
        return resolve_op(e.args.at(0), arg);
    };
    if (base == "meet")
        return StarOp::meet(resolve_op(e.args.at(0), want), resolve_op(e.args.at(1), want));
    if (base == "finite")
        return StarOp::finite_type(resolve_op(e.args.at(0), want));
    if (base == "w")
        return StarOp::stable(resolve_op(e.args.at(0), want));
    if (base == "proj")
        return StarOp::projected(from(Side::D, Side::R));
    if (base == "lift")
        return StarOp::lifted(from(Side::R, Side::D));
    if (base == "extT")
        return StarOp::extended_T(from(Side::T, Side::R));
    if (base == "restT")
        return StarOp::restricted_T(from(Side::T, Side::R));
    if (base == "ovr")
        return StarOp::overring_induced(from(Side::R, Side::T));
    throw evaluation_error("unknown star operation '" + e.name + "'");
}

class Evaluator
{
    const PullbackInstance& inst_;

    static const RatFunc& elem(const Value& v) { return std::get<RatFunc>(v.data); }

    RatFunc checked(RatFunc f) const
    {
        inst_.check_tag(f);
        return f;
    }

    FieldElem constant(const RatFunc& f, const Expr& at) const
    {
        if (!f.is_constant())
            throw evaluation_error("expected a constant at offset " + std::to_string(at.pos));
        return f.constant_value().with_tag(inst_.tag());
    }

    IdealValue ideal_of(const Value& v, const Expr& at) const
    {
        if (auto* s = std::get_if<StructuredIdeal>(&v.data))
            return *s;
        if (auto* d = std::get_if<ExtDModule>(&v.data))
            return *d;
        if (auto* t = std::get_if<TIdeal>(&v.data))
            return *t;
        throw evaluation_error("expected an ideal at offset " + std::to_string(at.pos));
    }

    static Value wrap(const IdealValue& v)
    {
        return std::visit([](const auto& x) { return Value{x}; }, v);
    }

    StructuredIdeal r_ideal(const Value& v, const Expr& at, const std::string& fn) const
    {
        if (auto* s = std::get_if<StructuredIdeal>(&v.data))
            return *s;
        throw evaluation_error(fn + " needs an ideal of R at offset " + std::to_string(at.pos));
    }

    Value binary(const Expr& e) const
    {
        if (e.name == "^") {
            RatFunc b = elem(eval(e.args[0]));
            return {pow(b, e.value.get_si())};
        }
        Value a = eval(e.args[0]), b = eval(e.args[1]);
        if (e.sort == Sort::element) {
            const RatFunc &x = elem(a), &y = elem(b);
            switch (e.name[0]) {
            case '+':
                return {checked(x + y)};
            case '-':
                return {checked(x - y)};
            case '*':
                return {checked(x * y)};
            default:
                if (y.is_zero())
                    throw evaluation_error("division by zero at offset " + std::to_string(e.pos));
                return {checked(x / y)};
            }
        }
        if (auto* z = std::get_if<RatFunc>(&a.data))
            return wrap(value_scale(checked(*z), ideal_of(b, e.args[1]), inst_));
        if (auto* z = std::get_if<RatFunc>(&b.data))
            return wrap(value_scale(checked(*z), ideal_of(a, e.args[0]), inst_));
        IdealValue x = ideal_of(a, e.args[0]), y = ideal_of(b, e.args[1]);
        if (side_of(x) != side_of(y))
            throw evaluation_error("cannot combine ideals of " + side_name(side_of(x)) + " and " +
                                   side_name(side_of(y)) + " at offset " + std::to_string(e.pos));
        if (e.name == "+")
            return wrap(value_add(x, y, inst_));
        switch (side_of(x)) {
        case Side::R:
            return {ideal_mul(std::get<StructuredIdeal>(x), std::get<StructuredIdeal>(y), inst_)};
        case Side::D:
            return {dmod_mul(std::get<ExtDModule>(x), std::get<ExtDModule>(y), inst_.D())};
        case Side::T:
            return {make_T_ideal(std::get<TIdeal>(x).c * std::get<TIdeal>(y).c, inst_)};
        }
        throw evaluation_error("unreachable");
    }

    Value colon(const IdealValue& x) const
    {
        switch (side_of(x)) {
        case Side::R:
            return {colon_R(std::get<StructuredIdeal>(x), inst_)};
        case Side::D: {
            ExtDModule c = dmod_colon(std::get<ExtDModule>(x), inst_.D());
            if (c.is_zero())
                throw evaluation_error("(D:J) is zero");
            return {c};
        }
        case Side::T:
            return {make_T_ideal(std::get<TIdeal>(x).c.inv(), inst_)};
        }
        throw evaluation_error("unreachable");
    }

    Value call(const Expr& e) const
    {
        const std::string& fn = e.name;
        if (fn == "ideal") {
            std::vector<RatFunc> g;
            for (const auto& a : e.args)
                g.push_back(checked(elem(eval(a))));
            return {structured_hull(RawIdeal(g), inst_)};
        }
        if (fn == "dideal") {
            std::vector<FieldElem> g;
            for (const auto& a : e.args) {
                FieldElem c = constant(checked(elem(eval(a))), a);
                if (!c.is_zero())
                    g.push_back(c);
            }
            if (g.empty())
                throw evaluation_error("empty D-ideal");
            return {dmod_from_generators(g, inst_.D())};
        }
        if (fn == "star") {
            IdealValue x = ideal_of(eval(e.args[1]), e.args[1]);
            return wrap(star_eval(resolve_op(e.args[0], side_of(x)), x, inst_));
        }
        Value a = eval(e.args[0]);
        const Expr& at = e.args[0];
        if (fn == "v" || fn == "t" || fn == "d") {
            IdealValue x = ideal_of(a, at);
            StarOp op = fn == "d" ? StarOp::d(side_of(x)) : fn == "v" ? StarOp::v(side_of(x)) : StarOp::t(side_of(x));
            return wrap(star_eval(op, x, inst_));
        }
        if (fn == "colon" || fn == "inv")
            return colon(ideal_of(a, at));
        if (fn == "extT" || fn == "beta")
            return {extend_to_T(r_ideal(a, at, fn), inst_)};
        if (fn == "hull")
            return {r_ideal(a, at, fn)};
        if (fn == "alpha") {
            auto* J = std::get_if<ExtDModule>(&a.data);
            if (!J)
                throw evaluation_error("alpha needs a D-ideal (dideal(...)) at offset " + std::to_string(at.pos));
            return {alpha(*J, inst_)};
        }
        if (fn == "gamma")
            return {gamma(r_ideal(a, at, fn), inst_)};
        if (fn == "principal") {
            if (auto* J = std::get_if<ExtDModule>(&a.data)) {
                auto c = J->is_lattice() ? dmod_is_cyclic(*J, inst_.D()) : std::nullopt;
                return {Info{c ? RatFunc(*c).to_string() : "none"}};
            }
            auto g = is_principal_R(r_ideal(a, at, fn), inst_);
            return {Info{g ? g->to_string() : "none"}};
        }
        if (fn == "classify")
            return {Info{certificate_name(classify_R(r_ideal(a, at, fn), StarOp::t(Side::R), inst_).certificate)}};
        throw evaluation_error("unknown function '" + fn + "'");
    }

  public:
    explicit Evaluator(const PullbackInstance& inst) : inst_(inst) {}

    Value eval(const Expr& e) const
    {
        switch (e.kind) {
        case NodeKind::number:
            return {RatFunc(FieldElem(mpq_class(e.value)))};
        case NodeKind::sqrt:
            return {RatFunc(sqrt_in_field(e.value, inst_))};
        case NodeKind::var:
            return {RatFunc::x()};
        case NodeKind::neg:
            return {-elem(eval(e.args[0]))};
        case NodeKind::atom:
            if (e.name == "T")
                return {whole_T(inst_)};
            if (e.name == "M")
                return {conductor(inst_)};
            return {unit_ideal(inst_)};
        case NodeKind::binary:
            return binary(e);
        case NodeKind::call:
            return call(e);
        case NodeKind::op:
            break;
        }
        throw evaluation_error("a star operation is not a value");
    }
};

inline Value evaluate(const std::string& text, const PullbackInstance& inst)
{
    return Evaluator(inst).eval(parse_expression(text));
}

} // namespace starpull::cli
