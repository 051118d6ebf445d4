#include "gordian/gring.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace gordian;

TEST(Scalar, UnitsAndInverses) {
    EXPECT_FALSE(Scalar(RingTag::Z(), 2).is_unit());
    Scalar two(RingTag::F(3), 2);
    EXPECT_TRUE(two.is_unit());
    EXPECT_EQ(two.inverse(), Scalar(RingTag::F(3), 2));
    EXPECT_EQ(Scalar(RingTag::Z(), -1) * Scalar(RingTag::Z(), -1), Scalar(RingTag::Z(), 1));
    EXPECT_EQ(Scalar(RingTag::Q(), 2).inverse(), Scalar(RingTag::Q(), BigRat(1, 2)));
    EXPECT_THROW(Scalar(RingTag::Z(), 2).inverse(), Error);
}

TEST(Scalar, FieldReduction) {
    EXPECT_EQ(Scalar(RingTag::F(5), -1), Scalar(RingTag::F(5), 4));
    EXPECT_EQ(Scalar(RingTag::F(7), BigRat(1, 3)), Scalar(RingTag::F(7), 5));
    EXPECT_THROW(Scalar(RingTag::F(3), BigRat(1, 3)), Error);
    EXPECT_THROW(Scalar(RingTag::Z(), BigRat(1, 2)), Error);
    EXPECT_THROW(Scalar(RingTag::Z(), 1) + Scalar(RingTag::Q(), 1), Error);
}

TEST(RingTag, Parse) {
    EXPECT_EQ(RingTag::parse("Z"), RingTag::Z());
    EXPECT_EQ(RingTag::parse("F7"), RingTag::F(7));
    EXPECT_THROW(RingTag::parse("F4"), Error);
    EXPECT_THROW(RingTag::parse("R"), Error);
    EXPECT_EQ(RingTag::F(1000003).name(), "F1000003");
}

TEST(Monomial, Products) {
    RingTag Z = RingTag::Z();
    EXPECT_EQ(Monomial(Scalar(Z, 2), 1) * Monomial(Scalar(Z, 3), 2), Monomial(Scalar(Z, 6), 3));
    Monomial x(Scalar(Z, -5), 4);
    EXPECT_EQ(Monomial::unit(Z) * x, x);
    RingTag F2 = RingTag::F(2);
    Monomial p = Monomial(Scalar(F2, 2), 1) * Monomial(Scalar(F2, 2), 1);
    EXPECT_TRUE(p.is_zero());
    EXPECT_EQ(p, Monomial::zero(F2));
    EXPECT_EQ(Monomial::unit(Z, 3).qdeg(), -6);
    EXPECT_THROW(Monomial(Scalar(Z, 1), -1), Error);
}

TEST(Scalar, RandomizedRingAxioms) {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long long> v(-1000, 1000);
    for (RingTag r : {RingTag::Z(), RingTag::Q(), RingTag::F(2), RingTag::F(3), RingTag::F(101)}) {
        for (int i = 0; i < 300; ++i) {
            Scalar a(r, v(rng)), b(r, v(rng)), c(r, v(rng));
            EXPECT_EQ(a + b, b + a);
            EXPECT_EQ(a * b, b * a);
            EXPECT_EQ((a + b) + c, a + (b + c));
            EXPECT_EQ((a * b) * c, a * (b * c));
            EXPECT_EQ(a * (b + c), a * b + a * c);
            EXPECT_TRUE((a - a).is_zero());
            if (r.is_field() && !a.is_zero()) {
                EXPECT_TRUE((a * a.inverse()).is_one());
            }
        }
    }
}
