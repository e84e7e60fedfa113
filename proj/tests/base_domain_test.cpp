#include <gtest/gtest.h>

#include <random>

#include "starpull/base_domain.hpp"

using namespace starpull;

namespace {

FieldElem q(long a, long b = 1) { return FieldElem(mpq_class(a, b)); }
FieldElem qd(long a, long b, long d) { return FieldElem(mpq_class(a), mpq_class(b), d); }

// Independent description of P = (2, 1+sqrt(-5)): a + b sqrt(-5) with a = b mod 2.
bool in_P(long a, long b) { return ((a - b) % 2 + 2) % 2 == 0; }

ExtDModule random_ok_ideal(std::mt19937_64& rng, const BaseDomain& D)
{
    std::uniform_int_distribution<int> c(-4, 4);
    std::vector<FieldElem> g;
    int n = 1 + static_cast<int>(rng() % 2);
    for (int i = 0; i < n; ++i) {
        FieldElem e = qd(c(rng), c(rng), D.field_tag());
        if (e.is_zero())
            e = qd(1, 0, D.field_tag());
        g.push_back(e);
    }
    return dmod_from_generators(g, D);
}

} // namespace

TEST(DModule, FromGenerators)
{
    auto Z = BaseDomain::integers();
    auto N = dmod_from_generators({q(2), q(0)}, Z);
    EXPECT_EQ(N, ExtDModule::principal(q(2), Z));
    EXPECT_EQ(N.generators(Z), std::vector<FieldElem>{q(2)});
    EXPECT_TRUE(dmod_from_generators({}, Z).is_zero());
    EXPECT_TRUE(dmod_from_generators({q(0)}, Z).is_zero());

    auto Zi = BaseDomain::integers(-1);
    auto L = dmod_from_generators({q(1), qd(0, 1, -1)}, Zi);
    EXPECT_EQ(L.rank(), 2u);
}

TEST(DModule, PrimeAboveTwoMatchesBruteForce)
{
    auto D = BaseDomain::quadratic_order(-5);
    auto P = dmod_from_generators({q(2), qd(1, 1, -5)}, D);
    ASSERT_TRUE(P.is_lattice());
    EXPECT_EQ(P.rank(), 2u);
    for (long a = -6; a <= 6; ++a)
        for (long b = -6; b <= 6; ++b)
            EXPECT_EQ(dmod_member(qd(a, b, -5), P, D), in_P(a, b)) << a << " " << b;
    EXPECT_EQ(quadratic::ideal_norm(P.lat(), -5), 2);
    // HNF basis {1 + sqrt(-5), 2 sqrt(-5)} in (1, sqrt d) coordinates
    auto rows = P.lat().rows();
    EXPECT_EQ(P.lat().den(), 1);
    ASSERT_EQ(rows.size(), 2u);
    EXPECT_EQ(rows[0], (lattice::IntRow{1, 1}));
    EXPECT_EQ(rows[1], (lattice::IntRow{0, 2}));
}

TEST(DModule, CanonicalUniqueness)
{
    auto D = BaseDomain::quadratic_order(-5);
    auto a = dmod_from_generators({q(2), qd(1, 1, -5)}, D);
    auto b = dmod_from_generators({qd(1, -1, -5), qd(-2, 0, -5), qd(3, 1, -5)}, D);
    EXPECT_EQ(a, b);
    auto Z = BaseDomain::integers();
    EXPECT_EQ(dmod_from_generators({q(4), q(6)}, Z), dmod_from_generators({q(-2)}, Z));
}

TEST(DModule, Products)
{
    auto D = BaseDomain::quadratic_order(-5);
    auto P = dmod_from_generators({q(2), qd(1, 1, -5)}, D);
    auto Pbar = dmod_from_generators({q(2), qd(1, -1, -5)}, D);
    EXPECT_EQ(dmod_mul(P, Pbar, D), ExtDModule::principal(q(2), D));
    EXPECT_EQ(dmod_add(P, ExtDModule::zero(), D), P);
    auto Z = BaseDomain::integers();
    EXPECT_EQ(dmod_mul(ExtDModule::principal(q(2), Z), ExtDModule::principal(q(3), Z), Z),
              ExtDModule::principal(q(6), Z));
    EXPECT_TRUE(dmod_mul(P, ExtDModule::full(), D).is_full());
    EXPECT_TRUE(dmod_mul(P, ExtDModule::zero(), D).is_zero());
}

TEST(DModule, Colon)
{
    auto Z = BaseDomain::integers();
    EXPECT_EQ(dmod_colon(ExtDModule::principal(q(2), Z), Z), ExtDModule::principal(q(1, 2), Z));
    EXPECT_TRUE(dmod_colon(ExtDModule::zero(), Z).is_full());
    EXPECT_TRUE(dmod_colon(ExtDModule::full(), Z).is_zero());

    auto Zi = BaseDomain::integers(-1);
    auto L = dmod_from_generators({q(1), qd(0, 1, -1)}, Zi);
    EXPECT_TRUE(dmod_colon(L, Zi).is_zero());

    auto D = BaseDomain::quadratic_order(-5);
    auto P = dmod_from_generators({q(2), qd(1, 1, -5)}, D);
    auto C = dmod_colon(P, D);
    auto expect = dmod_from_generators({q(1), FieldElem(mpq_class(1, 2), mpq_class(-1, 2), -5)}, D);
    EXPECT_EQ(C, expect);
    EXPECT_EQ(dmod_mul(C, P, D), ExtDModule::unit(D));
    // definitional oracle: y in colon iff y*2 and y*(1+sqrt(-5)) lie in O_K
    for (long a = -4; a <= 4; ++a)
        for (long b = -4; b <= 4; ++b) {
            FieldElem y(mpq_class(a, 2), mpq_class(b, 2), -5);
            bool oracle = D.contains(y * q(2)) && D.contains(y * qd(1, 1, -5));
            EXPECT_EQ(dmod_member(y, C, D), oracle);
        }
}

TEST(DModule, Divisorial)
{
    auto Z = BaseDomain::integers();
    EXPECT_EQ(dmod_v(ExtDModule::principal(q(2), Z), Z), ExtDModule::principal(q(2), Z));
    auto D = BaseDomain::quadratic_order(-5);
    auto P = dmod_from_generators({q(2), qd(1, 1, -5)}, D);
    EXPECT_EQ(dmod_v(P, D), P);
    EXPECT_TRUE(dmod_v(ExtDModule::zero(), D).is_zero());

    auto Zi = BaseDomain::integers(-1);
    auto L = dmod_from_generators({q(1), qd(0, 1, -1)}, Zi);
    EXPECT_TRUE(dmod_v(L, Zi).is_full());
}

TEST(DModule, FieldBase)
{
    auto Q = BaseDomain::rational_field(-1);
    auto one = ExtDModule::unit(Q);
    EXPECT_TRUE(one.is_lattice());
    EXPECT_EQ(ExtDModule::principal(q(7, 3), Q), one);
    EXPECT_TRUE(dmod_from_generators({q(1), qd(0, 1, -1)}, Q).is_full());
    EXPECT_EQ(dmod_colon(one, Q), one);
    auto Ni = ExtDModule::principal(qd(2, 1, -1), Q);
    EXPECT_EQ(dmod_colon(Ni, Q), ExtDModule::principal(qd(2, -1, -1), Q));
    EXPECT_TRUE(dmod_is_invertible(Ni, Q));
    EXPECT_TRUE(dmod_intersect(one, Ni, Q).is_zero());
}

TEST(DModule, Predicates)
{
    auto D = BaseDomain::quadratic_order(-5);
    auto P = dmod_from_generators({q(2), qd(1, 1, -5)}, D);
    auto pr = dmod_predicates(P, D);
    EXPECT_TRUE(pr.is_invertible);
    EXPECT_TRUE(pr.is_v_invertible);
    EXPECT_FALSE(pr.cyclic_generator.has_value());
    // brute force: no element of norm 2 in Z[sqrt(-5)]
    for (long a = -3; a <= 3; ++a)
        for (long b = -3; b <= 3; ++b)
            EXPECT_NE(a * a + 5 * b * b, 2);

    auto Z = BaseDomain::integers();
    auto g = dmod_is_cyclic(ExtDModule::principal(q(2), Z), Z);
    ASSERT_TRUE(g.has_value());
    EXPECT_EQ(*g, q(2));

    auto two = dmod_from_generators({q(2)}, D);
    auto g2 = dmod_is_cyclic(two, D);
    ASSERT_TRUE(g2.has_value());
    EXPECT_EQ(ExtDModule::principal(*g2, D), two);

    auto Zi = BaseDomain::integers(-1);
    auto L = dmod_from_generators({q(1), qd(0, 1, -1)}, Zi);
    EXPECT_FALSE(dmod_is_invertible(L, Zi));
    EXPECT_FALSE(dmod_is_v_invertible(L, Zi));
}

TEST(DModule, VIsClosureRandom)
{
    std::mt19937_64 rng(3);
    for (long d : {-5L, -1L, -23L}) {
        auto D = BaseDomain::quadratic_order(d);
        for (int it = 0; it < 25; ++it) {
            auto N = random_ok_ideal(rng, D);
            auto Nv = dmod_v(N, D);
            EXPECT_TRUE(dmod_contains(Nv, N, D));
            EXPECT_EQ(dmod_v(Nv, D), Nv);
            auto Big = dmod_add(N, random_ok_ideal(rng, D), D);
            EXPECT_TRUE(dmod_contains(dmod_v(Big, D), Nv, D));
        }
    }
}

TEST(DModule, InvertibilityGroupLawsRandom)
{
    std::mt19937_64 rng(4);
    auto D = BaseDomain::quadratic_order(-5);
    for (int it = 0; it < 25; ++it) {
        auto A = random_ok_ideal(rng, D), B = random_ok_ideal(rng, D);
        ASSERT_TRUE(dmod_is_invertible(A, D));
        EXPECT_TRUE(dmod_is_invertible(dmod_mul(A, B, D), D));
        EXPECT_TRUE(dmod_is_invertible(dmod_colon(A, D), D));
        EXPECT_TRUE(dmod_is_invertible(dmod_v(A, D), D));
    }
}

TEST(ClassGroup, MinusFive)
{
    auto D = BaseDomain::quadratic_order(-5);
    const auto& cl = D.class_group();
    EXPECT_EQ(cl.order(), 2u);
    EXPECT_EQ(cl.cyclic_orders(), std::vector<long>{2});
    auto P = dmod_from_generators({q(2), qd(1, 1, -5)}, D);
    auto lp = class_label_D(P, D);
    EXPECT_FALSE(lp.is_identity());
    EXPECT_EQ(lp.exps, std::vector<long>{1});
    EXPECT_TRUE(class_label_D(dmod_from_generators({q(2)}, D), D).is_identity());
    EXPECT_TRUE(class_label_D(dmod_mul(P, P, D), D).is_identity());
    EXPECT_EQ(quadratic::form_of_ideal(P.lat(), -5), (quadratic::BinaryForm{2, 2, 3}));
}

TEST(ClassGroup, ClassNumbersAgainstFormCount)
{
    // oracle: direct count of reduced forms b^2 - 4ac = disc with |b| <= a <= c
    auto count = [](long disc) {
        long h = 0;
        for (long a = 1; a <= 40; ++a)
            for (long b = -a; b <= a; ++b)
                for (long c = a; c <= 200; ++c) {
                    if (b * b - 4 * a * c != disc)
                        continue;
                    if ((b < 0 && (-b == a || a == c)))
                        continue;
                    if (std::gcd(std::gcd(a, std::labs(b)), c) != 1)
                        continue;
                    ++h;
                }
        return h;
    };
    for (long d : {-1L, -2L, -5L, -6L, -14L, -21L, -23L, -47L, -65L}) {
        auto D = BaseDomain::quadratic_order(d);
        EXPECT_EQ(static_cast<long>(D.class_group().order()), count(quadratic::discriminant(d))) << d;
    }
    EXPECT_EQ(BaseDomain::quadratic_order(-21).class_group().cyclic_orders(), (std::vector<long>{2, 2}));
    EXPECT_EQ(BaseDomain::quadratic_order(-14).class_group().cyclic_orders(), (std::vector<long>{4}));
    EXPECT_EQ(BaseDomain::quadratic_order(-65).class_group().cyclic_orders(), (std::vector<long>{4, 2}));
}

TEST(ClassGroup, LabelIsHomomorphismRandom)
{
    std::mt19937_64 rng(9);
    for (long d : {-5L, -14L, -21L, -23L, -65L}) {
        auto D = BaseDomain::quadratic_order(d);
        for (int it = 0; it < 15; ++it) {
            auto A = random_ok_ideal(rng, D), B = random_ok_ideal(rng, D);
            EXPECT_EQ(class_label_D(dmod_mul(A, B, D), D), class_label_D(A, D) + class_label_D(B, D));
            bool principal = dmod_is_cyclic(A, D).has_value();
            EXPECT_EQ(principal, class_label_D(A, D).is_identity());
        }
    }
}

TEST(ClassGroup, Rejections)
{
    auto Zi = BaseDomain::integers(-1);
    auto L = dmod_from_generators({q(1), qd(0, 1, -1)}, Zi);
    EXPECT_THROW(class_label_D(L, Zi), evaluation_error);
    EXPECT_THROW(BaseDomain::quadratic_order(-4), unsupported_instance);
    EXPECT_THROW(BaseDomain::quadratic_order(-401), unsupported_instance);
}
