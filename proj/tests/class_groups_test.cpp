#include <gtest/gtest.h>

#include "starpull/class_maps.hpp"
#include "starpull/sampling.hpp"

using namespace starpull;

namespace {

PullbackInstance inst(const char* n) { return make_instance(InstanceConfig{n}); }
FieldElem q(long a, long b = 1) { return FieldElem(mpq_class(a, b)); }
FieldElem qd(long a, long b, long d) { return FieldElem(mpq_class(a), mpq_class(b), d); }
RatFunc X() { return RatFunc::x(); }

const StarOp tR = StarOp::t(Side::R);
const StarOp dR = StarOp::d(Side::R);

ExtDModule prime_P(const PullbackInstance& C) { return dmod_from_generators({q(2), qd(1, 1, -5)}, C.D()); }

} // namespace

TEST(ClassMaps, AlphaExamples)
{
    auto C = inst("C");
    auto P = prime_P(C);
    auto H = alpha(P, C);
    EXPECT_EQ(H, inverse_image_R(P, C));
    EXPECT_EQ(invertibility_R(H, dR, C).certificate, Certificate::invertible);
    EXPECT_FALSE(is_principal_R(H, C).has_value());

    auto cD = ExtDModule::principal(qd(1, 1, -5), C.D());
    auto Hc = alpha(cD, C);
    auto g = is_principal_R(Hc, C);
    ASSERT_TRUE(g.has_value());
    EXPECT_EQ(principal_ideal(*g, C), Hc);

    auto H2 = alpha(dmod_mul(P, P, C.D()), C);
    EXPECT_EQ(H2, principal_ideal(RatFunc(2), C));

    auto D = inst("D");
    auto L = dmod_from_generators({q(1), qd(0, 1, -1)}, D.D());
    EXPECT_THROW(alpha(L, D), evaluation_error);
}

TEST(ClassMaps, BetaExamples)
{
    auto C = inst("C");
    EXPECT_EQ(beta(alpha(prime_P(C), C), C).c, RatFunc(1));
    EXPECT_EQ(beta(principal_ideal(X(), C), C).c, X());
    RatFunc u = (X() + RatFunc(2)) / (X() * X());
    auto H = canonical(u, prime_P(C), C);
    EXPECT_EQ(beta(H, C), make_T_ideal(u, C));
}

TEST(ClassMaps, GammaExamples)
{
    auto C = inst("C");
    auto P = prime_P(C);
    auto lp = class_label_D(P, C.D());
    EXPECT_EQ(gamma(alpha(P, C), C), lp);
    EXPECT_TRUE(gamma(principal_ideal((X() + RatFunc(1)) / RatFunc(7), C), C).is_identity());
    auto P3 = dmod_mul(P, ExtDModule::principal(q(3), C.D()), C.D());
    RatFunc u = X() + RatFunc(5);
    EXPECT_EQ(gamma(canonical(u, P3, C), C), lp);
    // definition route: clear denominators into R, off M
    auto H = canonical(u / RatFunc(4), dmod_scale(q(1, 3), P, C.D()), C);
    auto Hn = gamma_normal_form(H, C);
    EXPECT_TRUE(contains(unit_ideal(C), Hn, C));
    EXPECT_FALSE(contains(conductor(C), Hn, C));
    EXPECT_EQ(class_label_D(dmod_v(Hn.J, C.D()), C.D()), gamma(H, C));

    EXPECT_THROW(gamma(unit_ideal(inst("D")), inst("D")), precondition_error);
    EXPECT_THROW(gamma(conductor(C), C), evaluation_error);
}

TEST(ClassMaps, PrincipalityExamples)
{
    auto A = inst("A"), C = inst("C");
    auto g = is_principal_R(inverse_image_R(ExtDModule::principal(q(2), A.D()), A), A);
    ASSERT_TRUE(g.has_value());
    EXPECT_EQ(*g, RatFunc(2));
    EXPECT_FALSE(is_principal_R(alpha(prime_P(C), C), C).has_value());
    EXPECT_FALSE(is_principal_R(conductor(A), A).has_value());
    EXPECT_FALSE(is_principal_R(whole_T(A), A).has_value());
    // E: T = (1, i)R is finitely generated but not principal
    auto E = inst("E");
    EXPECT_FALSE(is_principal_R(whole_T(E), E).has_value());
}

TEST(ClassMaps, InvertibilityExamples)
{
    auto C = inst("C"), D = inst("D");
    auto w = invertibility_R(alpha(prime_P(C), C), tR, C);
    EXPECT_EQ(w.certificate, Certificate::invertible);
    EXPECT_TRUE(w.replay(C));

    auto H = structured_hull(RawIdeal({RatFunc(1), RatFunc(qd(0, 1, -1))}), D);
    auto wd = invertibility_R(H, tR, D);
    EXPECT_EQ(wd.certificate, Certificate::none);
    EXPECT_EQ(*wd.closure, conductor(D));
    EXPECT_TRUE(wd.replay(D));

    auto z = principal_ideal((X() + RatFunc(1)) / X(), C);
    auto wz = invertibility_R(z, dR, C);
    EXPECT_EQ(wz.certificate, Certificate::invertible);
    auto pz = classify_R(z, dR, C);
    EXPECT_EQ(pz.certificate, Certificate::principal);
    EXPECT_TRUE(pz.replay(C));
}

TEST(ClassMaps, ClassEquivalence)
{
    auto C = inst("C");
    auto P = prime_P(C);
    auto Pbar = dmod_from_generators({q(2), qd(1, -1, -5)}, C.D());
    auto HP = alpha(P, C), HPb = alpha(Pbar, C);
    EXPECT_TRUE(class_equivalent_R(HP, HPb, tR, C));
    EXPECT_FALSE(class_equivalent_R(HP, unit_ideal(C), tR, C));
    RatFunc z = (X() * X() + RatFunc(3)) / (X() + RatFunc(1));
    EXPECT_TRUE(class_equivalent_R(scale(z, HP, C), HP, tR, C));
    EXPECT_THROW(class_equivalent_R(conductor(C), HP, tR, C), evaluation_error);
}

TEST(ClassMaps, SplittingOnAllDClasses)
{
    for (long d : {-5L, -14L, -21L, -23L}) {
        auto I = make_instance(InstanceConfig{"", "quadratic", d, "poly"});
        const auto& D = I.D();
        std::vector<ExtDModule> reps;
        for (const auto& l : D.class_group().representatives())
            reps.push_back(dmod_from_generators(quadratic::elements(l, d), D));
        for (std::size_t i = 0; i < reps.size(); ++i) {
            auto Hi = alpha(reps[i], I);
            EXPECT_EQ(gamma(Hi, I), class_label_D(reps[i], D));
            EXPECT_EQ(beta(Hi, I).c, RatFunc(1));
            for (std::size_t j = 0; j < reps.size(); ++j)
                EXPECT_EQ(class_equivalent_R(Hi, alpha(reps[j], I), tR, I), i == j) << d;
        }
    }
}

TEST(ClassMaps, GroupLawsOnSamples)
{
    auto C = inst("C");
    SampleParams p;
    p.count = 30;
    auto S = sample_structured(C, p);
    for (std::size_t i = 0; i + 1 < S.size(); ++i) {
        const auto &a = S[i], &b = S[i + 1];
        if (!is_star_invertible_R(a, tR, C) || !is_star_invertible_R(b, tR, C))
            continue;
        auto ab = ideal_mul(a, b, C);
        EXPECT_EQ(gamma(ab, C), gamma(a, C) + gamma(b, C));
        auto w = classify_R(ab, tR, C);
        EXPECT_TRUE(w.replay(C));
    }
}
