#pragma once

/*
 * Classes of ideals of R and the maps between class groups
 *
 *   alpha : J |-> phi^-1(J)          (D-ideals to R-ideals)
 *   beta  : H |-> HT                 (R-ideals to T-ideals)
 *   gamma : u phi^-1(J) |-> [J^v]    (R-ideals to Cl(D), square+ instances)
 */

#include <optional>
#include <string>

#include "starpull/star_ops.hpp"

namespace starpull {

enum class Certificate { principal, invertible, star_invertible, none };

inline std::string certificate_name(Certificate c)
{
    switch (c) {
    case Certificate::principal:
        return "principal";
    case Certificate::invertible:
        return "invertible";
    case Certificate::star_invertible:
        return "star_invertible";
    case Certificate::none:
        return "none";
    }
    return "?";
}

struct RClassWitness {
    StructuredIdeal ideal;
    StarOp op = StarOp::t(Side::R);
    Certificate certificate = Certificate::none;
    std::optional<RatFunc> generator;         // principal
    std::optional<StructuredIdeal> inverse;   // invertible / star_invertible
    std::optional<StructuredIdeal> closure;   // (H H^-1)^*

    /// Re-runs the check that the certificate claims.
    bool replay(const PullbackInstance& inst) const
    {
        const StructuredIdeal R = unit_ideal(inst);
        switch (certificate) {
        case Certificate::principal:
            return generator && principal_ideal(*generator, inst) == ideal;
        case Certificate::invertible:
            return inverse && ideal_mul(ideal, *inverse, inst) == R;
        case Certificate::star_invertible:
            return inverse && star_eval_R(op, ideal_mul(ideal, *inverse, inst), inst) == R;
        case Certificate::none:
            return !inverse || star_eval_R(op, ideal_mul(ideal, *inverse, inst), inst) != R;
        }
        return false;
    }
};

/// A generator when H = zR.
inline std::optional<RatFunc> is_principal_R(const StructuredIdeal& H, const PullbackInstance& inst)
{
    if (!H.J.is_lattice())
        return std::nullopt;
    auto c = dmod_is_cyclic(H.J, inst.D());
    if (!c)
        return std::nullopt;
    return H.u * RatFunc(*c);
}

inline RClassWitness invertibility_R(const StructuredIdeal& H, const StarOp& op, const PullbackInstance& inst)
{
    RClassWitness w;
    w.ideal = H;
    w.op = op;
    StructuredIdeal inv = colon_R(H, inst);
    StructuredIdeal prod = ideal_mul(H, inv, inst);
    w.inverse = inv;
    w.closure = star_eval_R(op, prod, inst);
    const StructuredIdeal R = unit_ideal(inst);
    if (prod == R)
        w.certificate = Certificate::invertible;
    else if (*w.closure == R)
        w.certificate = Certificate::star_invertible;
    return w;
}

/// Principal certificate when available, otherwise the invertibility witness.
inline RClassWitness classify_R(const StructuredIdeal& H, const StarOp& op, const PullbackInstance& inst)
{
    if (auto g = is_principal_R(H, inst)) {
        RClassWitness w;
        w.ideal = H;
        w.op = op;
        w.certificate = Certificate::principal;
        w.generator = *g;
        return w;
    }
    return invertibility_R(H, op, inst);
}

inline bool is_star_invertible_R(const StructuredIdeal& H, const StarOp& op, const PullbackInstance& inst)
{
    return invertibility_R(H, op, inst).certificate != Certificate::none;
}

inline bool class_equivalent_R(const StructuredIdeal& H1, const StructuredIdeal& H2, const StarOp& op,
                               const PullbackInstance& inst)
{
    if (!is_star_invertible_R(H1, op, inst) || !is_star_invertible_R(H2, op, inst))
        throw evaluation_error("class comparison needs " + op.name() + "-invertible ideals");
    StructuredIdeal q = star_eval_R(op, ideal_mul(H1, colon_R(H2, inst), inst), inst);
    return is_principal_R(q, inst).has_value();
}

/// alpha(J) = phi^-1(J), for J invertible under the projection of op.
inline StructuredIdeal alpha(const ExtDModule& J, const PullbackInstance& inst, const StarOp& op = StarOp::t(Side::R))
{
    if (!inst.phi_tilde_surjective())
        throw precondition_error("alpha needs U(T) to surject onto k^x/U(D)");
    if (!J.is_lattice())
        throw evaluation_error("alpha needs a nonzero fractional ideal of D");
    const auto& D = inst.D();
    StarOp p = StarOp::projected(op);
    if (star_eval_D(p, dmod_mul(J, dmod_colon(J, D), D), inst) != ExtDModule::unit(D))
        throw evaluation_error("alpha needs a " + p.name() + "-invertible ideal");
    return inverse_image_R(J, inst);
}

inline TIdeal beta(const StructuredIdeal& H, const PullbackInstance& inst) { return extend_to_T(H, inst); }
inline TIdeal beta(const RawIdeal& H, const PullbackInstance& inst) { return extend_to_T(H, inst); }

/// Class of (phi(H'))^v in Cl(D), where H = u H' and H' = phi^-1(J).
inline ClassLabel gamma(const StructuredIdeal& H, const PullbackInstance& inst, const StarOp& op = StarOp::t(Side::R))
{
    if (!inst.is_square_plus())
        throw precondition_error("gamma is defined when D and k share their quotient field");
    if (!is_star_invertible_R(H, op, inst))
        throw evaluation_error("gamma needs a " + op.name() + "-invertible ideal");
    const auto& D = inst.D();
    return class_label_D(dmod_v(H.J, D), D);
}

/// gamma through a D-multiple that lands inside R and outside M, as in the definition.
inline StructuredIdeal gamma_normal_form(const StructuredIdeal& H, const PullbackInstance& inst)
{
    if (!H.J.is_lattice())
        throw evaluation_error("no normal form for a T-module");
    mpz_class den = H.J.lat().den();
    return inverse_image_R(dmod_scale(FieldElem(mpq_class(den)), H.J, inst.D()), inst);
}

} // namespace starpull
