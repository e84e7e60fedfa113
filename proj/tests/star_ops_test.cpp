#include <gtest/gtest.h>

#include "starpull/sampling.hpp"
#include "starpull/star_ops.hpp"

using namespace starpull;

namespace {

PullbackInstance inst(const char* n) { return make_instance(InstanceConfig{n}); }
FieldElem q(long a, long b = 1) { return FieldElem(mpq_class(a, b)); }
FieldElem qd(long a, long b, long d) { return FieldElem(mpq_class(a), mpq_class(b), d); }
RatFunc X() { return RatFunc::x(); }

SampleParams params(int count, std::uint64_t seed = 1)
{
    SampleParams p;
    p.count = count;
    p.seed = seed;
    return p;
}

const StarOp dD = StarOp::d(Side::D), vD = StarOp::v(Side::D), tD = StarOp::t(Side::D);
const StarOp dR = StarOp::d(Side::R), vR = StarOp::v(Side::R), tR = StarOp::t(Side::R);
const StarOp dT = StarOp::d(Side::T);

} // namespace

TEST(StarOp, Construction)
{
    EXPECT_EQ(StarOp::meet(vR, dR).name(), "meet(v_R,d_R)");
    EXPECT_EQ(StarOp::lifted(vD).side(), Side::R);
    EXPECT_EQ(StarOp::projected(tR).side(), Side::D);
    EXPECT_EQ(StarOp::extended_T(tR).side(), Side::T);
    EXPECT_THROW(StarOp::meet(vR, vD), evaluation_error);
    EXPECT_THROW(StarOp::lifted(vR), evaluation_error);
    EXPECT_THROW(StarOp::overring_induced(vR), evaluation_error);
}

TEST(StarOp, LiftedVEqualsVOnHull)
{
    auto A = inst("A");
    auto H = structured_hull(RawIdeal({RatFunc(2), X()}), A);
    EXPECT_EQ(star_eval_R(StarOp::lifted(vD), H, A), v_closure_R(H, A));
    for (const auto& S : sample_structured(A, params(40)))
        EXPECT_EQ(star_eval_R(StarOp::lifted(vD), S, A), v_closure_R(S, A)) << to_string(S, A);
}

TEST(StarOp, ProjectedTOnPrime)
{
    auto C = inst("C");
    auto P = dmod_from_generators({q(2), qd(1, 1, -5)}, C.D());
    EXPECT_EQ(star_eval_D(StarOp::projected(tR), P, C), P);
    EXPECT_EQ(star_eval_D(StarOp::projected(tR), P, C), star_eval_D(tD, P, C));
}

TEST(StarOp, ExtendedTOnPrincipal)
{
    auto A = inst("A");
    for (const auto& c : sample_t_ideals(A, params(20))) {
        EXPECT_EQ(star_eval_T(StarOp::extended_T(tR), c, A), c);
        // definition cross-check: (cT)^t cap cT computed on the R side
        auto E = T_ideal_as_R(c, A);
        EXPECT_EQ(ideal_intersect(t_closure_R(E, A), E, A), E);
    }
}

TEST(StarOp, MeetExamples)
{
    auto A = inst("A");
    auto samples = sample_structured(A, params(30));
    auto lv_ovr = StarOp::meet(StarOp::lifted(vD), StarOp::overring_induced(dT));
    for (const auto& S : samples) {
        EXPECT_EQ(star_eval_R(StarOp::meet(vR, vR), S, A), star_eval_R(vR, S, A));
        EXPECT_EQ(star_eval_R(StarOp::meet(dR, vR), S, A), S);
        EXPECT_EQ(star_eval_R(lv_ovr, S, A), v_closure_R(S, A));
    }
    EXPECT_THROW(star_eval_R(StarOp::overring_induced(dT), samples[0], A), evaluation_error);
    EXPECT_THROW(star_eval_R(StarOp::stable(tR), samples[0], A), evaluation_error);
}

TEST(StarOp, LeqChecks)
{
    auto A = inst("A");
    auto raw = sample_ideals(A, params(50));
    std::vector<IdealValue> vals;
    for (const auto& I : raw)
        vals.push_back(structured_hull(I, A));
    auto r1 = star_leq_check(dR, tR, vals, A);
    EXPECT_TRUE(r1.pass());
    EXPECT_EQ(r1.n_samples, 50u);
    auto r2 = star_leq_check(tR, vR, vals, A);
    EXPECT_TRUE(r2.pass());
    EXPECT_EQ(r2.details["equal_on"], 50);

    auto D = inst("D");
    std::vector<IdealValue> one{structured_hull(RawIdeal({RatFunc(1), RatFunc(qd(0, 1, -1))}), D)};
    auto r3 = star_leq_check(vR, dR, one, D);
    EXPECT_FALSE(r3.pass());
    ASSERT_EQ(r3.violations.size(), 1u);
}

TEST(StarOp, AxiomChecks)
{
    for (const char* n : {"A", "B", "C", "D", "E"}) {
        auto I = inst(n);
        auto R = as_values(sample_structured(I, params(50)));
        auto Dv = as_values(sample_d_ideals(I, params(20)));
        auto z = sample_scalars(I);
        EXPECT_TRUE(star_axiom_check(tR, R, z, I).pass()) << n;
        EXPECT_TRUE(star_axiom_check(dR, R, z, I).pass()) << n;
        EXPECT_TRUE(star_axiom_check(StarOp::lifted(dD), R, z, I).pass()) << n;
        EXPECT_TRUE(star_axiom_check(StarOp::lifted(vD), R, z, I).pass()) << n;
        EXPECT_TRUE(star_axiom_check(StarOp::projected(tR), Dv, z, I).pass()) << n;
    }
}

TEST(StarOp, ProjectionOfLiftIsIdentity)
{
    for (const char* n : {"A", "C", "D"}) {
        auto I = inst(n);
        for (const auto& J : sample_d_ideals(I, params(30))) {
            for (const auto& op : {dD, vD})
                EXPECT_EQ(star_eval_D(StarOp::projected(StarOp::lifted(op)), J, I), star_eval_D(op, J, I)) << n;
        }
    }
}

TEST(StarOp, LiftOfProjectionDominates)
{
    for (const char* n : {"A", "C", "D", "E"}) {
        auto I = inst(n);
        for (const auto& S : sample_structured(I, params(30)))
            for (const auto& op : {dR, tR, vR}) {
                auto a = star_eval_R(op, S, I);
                auto b = star_eval_R(StarOp::lifted(StarOp::projected(op)), S, I);
                EXPECT_TRUE(contains(b, a, I)) << n << " " << op.name() << " " << to_string(S, I);
            }
    }
}

TEST(StarOp, ConductorIsFixed)
{
    for (const auto& I : catalogue()) {
        auto M = conductor(I);
        for (const auto& op : {dR, tR, vR, StarOp::lifted(dD), StarOp::lifted(vD), StarOp::finite_type(vR),
                               StarOp::meet(StarOp::lifted(vD), StarOp::overring_induced(dT))})
            EXPECT_EQ(star_eval_R(op, M, I), M) << I.name() << " " << op.name();
    }
}

TEST(StarOp, ExtendedAndRestrictedAgree)
{
    for (const auto& I : catalogue()) {
        for (const auto& c : sample_t_ideals(I, params(20))) {
            auto e = star_eval_T(StarOp::extended_T(tR), c, I);
            EXPECT_EQ(e, star_eval_T(StarOp::restricted_T(tR), c, I));
            EXPECT_EQ(e, star_eval_T(StarOp::finite_type(StarOp::extended_T(vR)), c, I));
        }
    }
}
