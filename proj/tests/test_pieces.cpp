#include "gordian/pairing.hpp"
#include "gordian/pieces.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace gordian;

namespace {
FreeComplex two_and_g_complex(RingTag r) {
    FreeComplex c(r);
    auto a = c.add_generator("a", 0, 0), b = c.add_generator("b", 0, -2), t = c.add_generator("c", 1, 0);
    c.set_entry(a, t, Monomial(Scalar(r, 2), 0));
    c.set_entry(b, t, Monomial::unit(r, 1));
    return c;
}
} // namespace

TEST(Decompose, Errors) {
    try {
        decompose(two_and_g_complex(RingTag::Z()));
        FAIL() << "expected NotSplit";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind, "NotSplit");
    }
    FreeComplex two(RingTag::Q());
    two.add_generator("x", 0, 0);
    two.add_generator("y", 0, 2);
    try {
        decompose(two);
        FAIL() << "expected MultiplePawns";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind, "MultiplePawns");
    }
    FreeComplex none(RingTag::Q());
    none.add_generator("x", 1, 0);
    try {
        decompose(none);
        FAIL() << "expected NoPawn";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind, "NoPawn");
    }
}

TEST(Decompose, TwoAndGComplexOverFields) {
    Decomposition q = decompose(two_and_g_complex(RingTag::Q()));
    EXPECT_EQ(q.pawn.s, -2);
    EXPECT_TRUE(q.knights.empty());
    // over F2 the entry 2 vanishes: pawn at q0 and a G-knight
    Decomposition f = decompose(base_change(two_and_g_complex(RingTag::Z()), RingTag::F(2)));
    EXPECT_EQ(f.pawn.s, 0);
    EXPECT_EQ(f.knights, (std::vector<Knight>{{1, 0, -2}}));
}

TEST(TorusComplexes, ClosedForms) {
    RingTag F2 = RingTag::F(2);
    Decomposition t34 = decompose(torus_complex(3, 1, 1, F2));
    EXPECT_EQ(t34.pawn.s, 6);
    EXPECT_EQ(t34.knights, (std::vector<Knight>{{1, 2, 10}, {2, 4, 12}}));
    EXPECT_EQ(torus_decomposition_2(1, RingTag::Z()).knights, (std::vector<Knight>{{1, 2, 6}}));
    EXPECT_EQ(torus_decomposition_2(1, RingTag::Z()).pawn.s, 2);
    EXPECT_TRUE(torus_decomposition_2(0, RingTag::Z()).knights.empty());
    EXPECT_EQ(decompose(torus_knot(3, 2, F2)), decompose(torus_knot(2, 3, F2)));
    EXPECT_THROW(torus_knot(3, 4, RingTag::Z()), Error);
    EXPECT_NO_THROW(torus_knot(3, 4, RingTag::Z(), true));
    EXPECT_THROW(torus_knot(2, 4, F2), Error);
    EXPECT_THROW(torus_knot(4, 5, F2), Error);
}

TEST(TorsionProfile, Examples) {
    RingTag F2 = RingTag::F(2);
    auto p37 = torsion_profile(decompose(torus_knot(3, 7, F2)));
    EXPECT_EQ(p37.at(3), 1);
    EXPECT_EQ(p37.at(7), 1);
    EXPECT_EQ(p37.at(5), 2);
    EXPECT_EQ(p37.at(9), 2);
    auto p213 = torsion_profile(decompose(torus_knot(2, 13, F2)));
    for (int k = 0; k <= 5; ++k) EXPECT_EQ(p213.at(2 * k + 3), 1);
    int gap = 0;
    for (int i = 0; i <= 12; ++i) gap = std::max(gap, std::abs(p37.at(i) - p213.at(i)));
    EXPECT_EQ(gap, 1);
    auto pu = torsion_profile(decompose(torus_knot(1, 1, F2)));
    EXPECT_TRUE(pu.u.empty());
    EXPECT_EQ(pu.umax, 0);
    auto pt = torsion_profile(decompose(zero_closure(Slope(-3, 1))));
    EXPECT_EQ(pt.at(3), 1);
    EXPECT_EQ(pt.umax, 1);
}

TEST(Decompose, ReassembleRoundTrip) {
    for (RingTag r : {RingTag::Z(), RingTag::Q(), RingTag::F(2)})
        for (int m = 0; m <= 5; ++m) {
            Decomposition d = torus_decomposition_2(m, r);
            EXPECT_EQ(decompose(reassemble(d)), d);
            EXPECT_EQ(dualize(dualize(d)), d);
            EXPECT_EQ(decompose(dualize(reassemble(d))), dualize(d));
        }
}

TEST(Properties, DecomposeRecoversHiddenPieces) {
    std::mt19937 rng(3);
    for (RingTag r : {RingTag::F(2), RingTag::F(3), RingTag::Q(), RingTag::Z()}) {
        for (int trial = 0; trial < 60; ++trial) {
            auto rs = gtest_support::random_split(rng, r, 1 + trial % 4, trial % 3, 10 + trial % 7);
            Decomposition d;
            ASSERT_NO_THROW(d = decompose(rs.complex)) << r.name() << " trial " << trial;
            EXPECT_EQ(d, rs.expected) << r.name() << " trial " << trial;
            // the split form is thin: every knight is one G-power edge
            FreeComplex back = reassemble(d);
            for (std::size_t a = 0; a < back.size(); ++a) EXPECT_LE(back.out(a).size(), 1u);
        }
    }
}
