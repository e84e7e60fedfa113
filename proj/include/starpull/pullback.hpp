#pragma once

/*
 * Pullback rings R = phi^-1(D) inside T = k[X] or k[X]_(X), with
 * M = XT and phi the evaluation at 0.
 *
 * Ideals of R are carried in the structured form u * phi^-1(J), where u is a
 * nonzero rational function and J a nonzero D-module of k (FULL gives uT).
 * The zero D-module never appears: u * phi^-1(0) = uM = (uX) * phi^-1(k).
 * Every finitely generated ideal is exactly of this form, so raw generator
 * lists are converted on entry.
 */

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "starpull/base_domain.hpp"
#include "starpull/kernel/ratfunc.hpp"

namespace starpull {

enum class TKind { poly, local };

struct InstanceConfig {
    std::string name;          // catalogue letter, or empty for explicit fields
    std::string base = "integers"; // integers | quadratic | rational
    long field = 1;            // k = Q(sqrt field)
    std::string t_kind = "poly"; // poly | local
};

class PullbackInstance
{
    std::string name_;
    BaseDomain D_;
    TKind tkind_ = TKind::poly;

  public:
    PullbackInstance(std::string name, BaseDomain D, TKind t) : name_(std::move(name)), D_(std::move(D)), tkind_(t) {}

    const std::string& name() const { return name_; }
    const BaseDomain& D() const { return D_; }
    TKind t_kind() const { return tkind_; }
    long tag() const { return D_.field_tag(); }

    bool is_square_plus() const { return D_.quotient_field_is_k(); }
    bool t_quasilocal() const { return tkind_ == TKind::local; }
    // k^x lies in U(T) for both kinds of T, so U(T) -> k^x/U(D) is onto.
    bool phi_tilde_surjective() const { return true; }
    /// T_M is a valuation domain (DVR) for both supported kinds of T.
    bool t_localization_is_valuation() const { return true; }

    bool in_T(const RatFunc& f) const
    {
        if (f.is_zero())
            return true;
        if (tkind_ == TKind::poly)
            return f.is_poly();
        return ord_at_zero(f) >= 0;
    }

    bool is_T_unit(const RatFunc& f) const
    {
        if (f.is_zero())
            return false;
        if (tkind_ == TKind::poly)
            return f.is_constant();
        return ord_at_zero(f) == 0;
    }

    bool member_R(const RatFunc& f) const
    {
        check_tag(f);
        return in_T(f) && D_.contains(eval_at_zero(f).with_tag(tag()));
    }

    void check_tag(const RatFunc& f) const
    {
        if (f.tag() != 1 && f.tag() != tag())
            throw mismatched_field(tag(), f.tag());
    }

    std::string T_name() const
    {
        std::string s = D_.field_name() + "[X]";
        return tkind_ == TKind::local ? s + "_(X)" : s;
    }

    std::string describe() const
    {
        return name_ + ": D = " + D_.name() + ", k = " + D_.field_name() + ", T = " + T_name();
    }
};

/// Builds one of the catalogued instances A to E, or an explicit combination.
inline PullbackInstance make_instance(const InstanceConfig& cfg)
{
    auto tk = [](const std::string& s) {
        if (s == "poly")
            return TKind::poly;
        if (s == "local")
            return TKind::local;
        throw unsupported_instance("unknown T kind '" + s + "' (expected poly or local)");
    };
    if (!cfg.name.empty()) {
        const std::string& n = cfg.name;
        if (n == "A")
            return {"A", BaseDomain::integers(1), TKind::poly};
        if (n == "B")
            return {"B", BaseDomain::integers(1), TKind::local};
        if (n == "C")
            return {"C", BaseDomain::quadratic_order(-5), TKind::poly};
        if (n == "D")
            return {"D", BaseDomain::integers(-1), TKind::poly};
        if (n == "E")
            return {"E", BaseDomain::rational_field(-1), TKind::local};
        throw unsupported_instance("unknown instance '" + n + "' (catalogue is A-E)");
    }
    if (!is_squarefree(cfg.field))
        throw unsupported_instance("field discriminant must be squarefree");
    TKind t = tk(cfg.t_kind);
    if (cfg.field != 1 && cfg.field > 0)
        throw unsupported_instance("only Q and imaginary quadratic fields are supported");
    const std::string label = cfg.base + "/" + std::to_string(cfg.field) + "/" + cfg.t_kind;
    if (cfg.base == "integers")
        return {label, BaseDomain::integers(cfg.field), t};
    if (cfg.base == "rational")
        return {label, BaseDomain::rational_field(cfg.field), t};
    if (cfg.base.rfind("quadratic", 0) == 0) {
        if (cfg.field == 1)
            throw unsupported_instance("a quadratic order is not contained in k = Q");
        return {label, BaseDomain::quadratic_order(cfg.field), t};
    }
    throw unsupported_instance("unknown base domain '" + cfg.base + "'");
}

inline std::vector<PullbackInstance> catalogue()
{
    std::vector<PullbackInstance> out;
    for (const char* n : {"A", "B", "C", "D", "E"})
        out.push_back(make_instance(InstanceConfig{n}));
    return out;
}

// ---- ideal values ----------------------------------------------------------

struct RawIdeal {
    std::vector<RatFunc> gens;

    RawIdeal() = default;
    explicit RawIdeal(std::vector<RatFunc> g)
    {
        for (auto& f : g)
            if (!f.is_zero())
                gens.push_back(std::move(f));
        if (gens.empty())
            throw evaluation_error("the zero ideal is not a fractional ideal");
    }
};

struct StructuredIdeal {
    RatFunc u;
    ExtDModule J; // never ZERO once canonical

    friend bool operator==(const StructuredIdeal& a, const StructuredIdeal& b)
    {
        return a.u == b.u && a.J == b.J;
    }
};

/// Principal fractional T-ideal cT with canonical generator.
struct TIdeal {
    RatFunc c;
    friend bool operator==(const TIdeal& a, const TIdeal& b) { return a.c == b.c; }
};

/// Canonical T-generator of cT: monic over monic, or a power of X.
inline RatFunc normalize_T_generator(const RatFunc& c, const PullbackInstance& inst)
{
    if (c.is_zero())
        throw evaluation_error("zero is not a T-ideal generator");
    if (inst.t_kind() == TKind::local)
        return RatFunc::x_pow(ord_at_zero(c), 1);
    return c.split_leading().first;
}

inline TIdeal make_T_ideal(const RatFunc& c, const PullbackInstance& inst)
{
    return TIdeal{normalize_T_generator(c, inst)};
}

/// Canonical representative of u * phi^-1(J).
inline StructuredIdeal canonical(RatFunc u, ExtDModule J, const PullbackInstance& inst)
{
    if (u.is_zero())
        throw evaluation_error("zero unit part");
    inst.check_tag(u);
    if (J.is_zero()) {
        u = u * RatFunc::x();
        J = ExtDModule::full();
    }
    RatFunc n = normalize_T_generator(u, inst);
    RatFunc w = u / n; // unit of T
    FieldElem s = eval_at_zero(w).with_tag(inst.tag());
    return {n, dmod_scale(s, J, inst.D())};
}

inline StructuredIdeal unit_ideal(const PullbackInstance& inst)
{
    return canonical(RatFunc(1), ExtDModule::unit(inst.D()), inst);
}
inline StructuredIdeal conductor(const PullbackInstance& inst)
{
    return canonical(RatFunc::x(), ExtDModule::full(), inst);
}
inline StructuredIdeal whole_T(const PullbackInstance& inst)
{
    return canonical(RatFunc(1), ExtDModule::full(), inst);
}
inline StructuredIdeal principal_ideal(const RatFunc& z, const PullbackInstance& inst)
{
    return canonical(z, ExtDModule::unit(inst.D()), inst);
}

inline bool is_conductor(const StructuredIdeal& S, const PullbackInstance& inst) { return S == conductor(inst); }

/// (u, reduced) with u the T-content of I and reduced * T = T.
inline std::pair<RatFunc, RawIdeal> content_T(const RawIdeal& I, const PullbackInstance& inst)
{
    if (I.gens.empty())
        throw evaluation_error("empty ideal");
    for (const auto& f : I.gens)
        inst.check_tag(f);
    RatFunc u;
    if (inst.t_kind() == TKind::local) {
        long e = ord_at_zero(I.gens[0]);
        for (const auto& f : I.gens)
            e = std::min(e, ord_at_zero(f));
        u = RatFunc::x_pow(e, 1);
    } else {
        Poly g = I.gens[0].num(), l = I.gens[0].den();
        for (const auto& f : I.gens) {
            g = poly_gcd(g, f.num());
            l = poly_lcm(l, f.den());
        }
        u = RatFunc(g, l);
    }
    RawIdeal red;
    for (const auto& f : I.gens)
        red.gens.push_back(f / u);
    return {u, red};
}

inline StructuredIdeal structured_hull(const RawIdeal& I, const PullbackInstance& inst)
{
    auto [u, red] = content_T(I, inst);
    std::vector<FieldElem> vals;
    for (const auto& g : red.gens)
        vals.push_back(eval_at_zero(g).with_tag(inst.tag()));
    return canonical(u, dmod_from_generators(vals, inst.D()), inst);
}

inline StructuredIdeal inverse_image_R(const ExtDModule& J, const PullbackInstance& inst)
{
    return canonical(RatFunc(1), J, inst);
}

/// Generators over R when the ideal is finitely generated.
inline std::optional<RawIdeal> generators_R(const StructuredIdeal& S, const PullbackInstance& inst)
{
    std::vector<RatFunc> g;
    if (S.J.is_lattice()) {
        for (const auto& c : S.J.generators(inst.D()))
            g.push_back(S.u * RatFunc(c));
    } else if (inst.D().is_field()) {
        // T = R + sqrt(d) R when D is a field of index 2 in k
        g.push_back(S.u);
        g.push_back(S.u * RatFunc(FieldElem::sqrt_of(inst.tag())));
    } else {
        return std::nullopt;
    }
    return RawIdeal(g);
}

inline bool is_finitely_generated(const StructuredIdeal& S, const PullbackInstance& inst)
{
    return generators_R(S, inst).has_value();
}

inline bool member(const RatFunc& f, const StructuredIdeal& S, const PullbackInstance& inst)
{
    if (f.is_zero())
        return true;
    RatFunc w = f / S.u;
    if (!inst.in_T(w))
        return false;
    return dmod_member(eval_at_zero(w).with_tag(inst.tag()), S.J, inst.D());
}

/// S1 subset of S2.
inline bool contains(const StructuredIdeal& S2, const StructuredIdeal& S1, const PullbackInstance& inst)
{
    RatFunc w = S1.u / S2.u;
    if (!inst.in_T(w))
        return false;
    FieldElem w0 = eval_at_zero(w).with_tag(inst.tag());
    if (w0.is_zero() || S2.J.is_full())
        return true;
    if (S1.J.is_full())
        return false;
    return dmod_contains(S2.J, dmod_scale(w0, S1.J, inst.D()), inst.D());
}

// ---- arithmetic ------------------------------------------------------------

inline StructuredIdeal ideal_mul(const StructuredIdeal& a, const StructuredIdeal& b, const PullbackInstance& inst)
{
    return canonical(a.u * b.u, dmod_mul(a.J, b.J, inst.D()), inst);
}

/// Exact for every pair: with g the T-gcd of the unit parts and w_i = u_i/g,
/// the sum is g * phi^-1(w_1(0) J_1 + w_2(0) J_2).
inline StructuredIdeal ideal_add(const StructuredIdeal& a, const StructuredIdeal& b, const PullbackInstance& inst)
{
    RawIdeal both({a.u, b.u});
    RatFunc g = content_T(both, inst).first;
    const auto& D = inst.D();
    FieldElem w1 = eval_at_zero(a.u / g).with_tag(inst.tag());
    FieldElem w2 = eval_at_zero(b.u / g).with_tag(inst.tag());
    ExtDModule s = dmod_add(dmod_scale(w1, a.J, D), dmod_scale(w2, b.J, D), D);
    return canonical(g, s, inst);
}

inline StructuredIdeal scale(const RatFunc& z, const StructuredIdeal& S, const PullbackInstance& inst)
{
    return canonical(z * S.u, S.J, inst);
}

/// Intersection, available when one side contains the other or the unit parts agree.
inline StructuredIdeal ideal_intersect(const StructuredIdeal& a, const StructuredIdeal& b, const PullbackInstance& inst)
{
    if (contains(b, a, inst))
        return a;
    if (contains(a, b, inst))
        return b;
    if (a.u == b.u)
        return canonical(a.u, dmod_intersect(a.J, b.J, inst.D()), inst);
    throw evaluation_error("intersection of ideals with different T-contents is not representable");
}

inline RawIdeal raw_mul(const RawIdeal& a, const RawIdeal& b)
{
    std::vector<RatFunc> g;
    for (const auto& x : a.gens)
        for (const auto& y : b.gens)
            g.push_back(x * y);
    return RawIdeal(g);
}

inline RawIdeal raw_add(const RawIdeal& a, const RawIdeal& b)
{
    std::vector<RatFunc> g = a.gens;
    g.insert(g.end(), b.gens.begin(), b.gens.end());
    return RawIdeal(g);
}

// ---- colon and closures ----------------------------------------------------

inline StructuredIdeal colon_R(const StructuredIdeal& S, const PullbackInstance& inst)
{
    return canonical(S.u.inv(), dmod_colon(S.J, inst.D()), inst);
}
inline StructuredIdeal colon_R(const RawIdeal& I, const PullbackInstance& inst)
{
    return colon_R(structured_hull(I, inst), inst);
}

inline StructuredIdeal v_closure_R(const StructuredIdeal& S, const PullbackInstance& inst)
{
    return colon_R(colon_R(S, inst), inst);
}
inline StructuredIdeal v_closure_R(const RawIdeal& I, const PullbackInstance& inst)
{
    return v_closure_R(structured_hull(I, inst), inst);
}

// t agrees with v on finitely generated ideals, and the structured forms that
// are not finitely generated (uT, uM) are v-closed already.
inline StructuredIdeal t_closure_R(const StructuredIdeal& S, const PullbackInstance& inst)
{
    return v_closure_R(S, inst);
}
inline StructuredIdeal t_closure_R(const RawIdeal& I, const PullbackInstance& inst)
{
    return v_closure_R(I, inst);
}

inline TIdeal extend_to_T(const StructuredIdeal& S, const PullbackInstance& inst) { return make_T_ideal(S.u, inst); }
inline TIdeal extend_to_T(const RawIdeal& I, const PullbackInstance& inst)
{
    return make_T_ideal(content_T(I, inst).first, inst);
}

/// cT as an R-ideal.
inline StructuredIdeal T_ideal_as_R(const TIdeal& t, const PullbackInstance& inst)
{
    return canonical(t.c, ExtDModule::full(), inst);
}

/// The ideal is of the form cT.
inline std::optional<TIdeal> as_T_ideal(const StructuredIdeal& S, const PullbackInstance& inst)
{
    if (!S.J.is_full())
        return std::nullopt;
    return make_T_ideal(S.u, inst);
}

struct UnitPredicates {
    bool in_S = false; // R and U(T)
    bool in_N = false; // R with phi value a unit of D
};

inline UnitPredicates unit_group_predicates(const RatFunc& f, const PullbackInstance& inst)
{
    UnitPredicates p;
    if (f.is_zero() || !inst.member_R(f))
        return p;
    p.in_S = inst.is_T_unit(f);
    p.in_N = inst.D().is_unit(eval_at_zero(f).with_tag(inst.tag()));
    return p;
}

// ---- definitional oracles --------------------------------------------------

/// g in (R:I), tested generator by generator.
inline bool oracle_colon_member(const RatFunc& g, const RawIdeal& I, const PullbackInstance& inst)
{
    for (const auto& f : I.gens)
        if (!inst.member_R(g * f))
            return false;
    return true;
}

struct DegreeWindow {
    int max_shift = 12;
    long height = 50;
};

enum class OracleVerdict { in, out_with_witness, inconclusive };

struct OracleResult {
    OracleVerdict verdict = OracleVerdict::inconclusive;
    std::optional<RatFunc> witness;
};

inline std::vector<long> primes_up_to(long n)
{
    std::vector<long> p;
    for (long a = 2; a <= n; ++a) {
        bool prime = true;
        for (long b : p)
            if (a % b == 0) {
                prime = false;
                break;
            }
        if (prime)
            p.push_back(a);
    }
    return p;
}

/// Candidate elements of (R:I) scanned by the v-oracle.
inline std::vector<RatFunc> witness_family(const RawIdeal& I, const PullbackInstance& inst, const DegreeWindow& w)
{
    StructuredIdeal H = structured_hull(I, inst);
    RatFunc uinv = H.u.inv();
    std::vector<RatFunc> out;
    ExtDModule c = dmod_colon(H.J, inst.D());
    for (const auto& g : c.generators(inst.D()))
        out.push_back(uinv * RatFunc(g));
    std::vector<FieldElem> kappa{FieldElem(1)};
    for (long p : primes_up_to(w.height))
        kappa.push_back(FieldElem(mpq_class(1, p)));
    if (inst.tag() != 1) {
        std::size_t n = kappa.size();
        for (std::size_t i = 0; i < n; ++i)
            kappa.push_back(kappa[i] * FieldElem::sqrt_of(inst.tag()));
    }
    for (int j = 1; j <= w.max_shift; ++j) {
        RatFunc xj = RatFunc::x_pow(j, 1);
        for (const auto& k : kappa)
            out.push_back(uinv * xj * RatFunc(k));
    }
    return out;
}

/// Brute-force check of h against (R:(R:I)).
inline OracleResult oracle_v_member(const RatFunc& h, const RawIdeal& I, const PullbackInstance& inst,
                                    const DegreeWindow& w = {})
{
    for (const auto& g : witness_family(I, inst, w)) {
        if (!oracle_colon_member(g, I, inst))
            continue;
        if (!inst.member_R(h * g))
            return {OracleVerdict::out_with_witness, g};
    }
    if (member(h, v_closure_R(I, inst), inst))
        return {OracleVerdict::in, std::nullopt};
    return {OracleVerdict::inconclusive, std::nullopt};
}

// ---- printing --------------------------------------------------------------

inline std::string to_string(const StructuredIdeal& S, const PullbackInstance& inst)
{
    const auto& D = inst.D();
    std::string tn = inst.T_name();
    std::string body;
    if (S.J.is_full())
        body = tn;
    else
        body = to_string(S.J, D) + " + X·" + tn;
    if (S.u == RatFunc(1))
        return body;
    std::size_t terms = 0;
    for (const auto& c : S.u.num().coeffs())
        terms += c.is_zero() ? 0 : 1;
    std::string us = S.u.is_poly() && terms == 1 ? S.u.to_string() : "(" + S.u.to_string() + ")";
    if (S.J.is_full())
        return us + "·" + tn;
    return us + "·(" + body + ")";
}

inline std::string to_string(const TIdeal& t, const PullbackInstance& inst)
{
    if (t.c == RatFunc(1))
        return inst.T_name();
    return "(" + t.c.to_string() + ")·" + inst.T_name();
}

inline std::string to_string(const RawIdeal& I)
{
    std::string s = "(";
    for (std::size_t i = 0; i < I.gens.size(); ++i)
        s += (i ? ", " : "") + I.gens[i].to_string();
    return s + ")";
}

/// Expression that parses back to the same ideal.
inline std::string to_expr(const StructuredIdeal& S, const PullbackInstance& inst)
{
    if (auto g = generators_R(S, inst); g && S.J.is_lattice()) {
        std::string s = "ideal(";
        for (std::size_t i = 0; i < g->gens.size(); ++i)
            s += (i ? ", " : "") + g->gens[i].to_expr();
        return s + ")";
    }
    if (S.u == RatFunc(1))
        return "T";
    return "ideal(" + S.u.to_expr() + ")*T";
}

inline std::string to_expr(const TIdeal& t, const PullbackInstance&) { return "ideal(" + t.c.to_expr() + ")*T"; }

inline std::string to_expr(const RawIdeal& I)
{
    std::string s = "ideal(";
    for (std::size_t i = 0; i < I.gens.size(); ++i)
        s += (i ? ", " : "") + I.gens[i].to_expr();
    return s + ")";
}

} // namespace starpull
