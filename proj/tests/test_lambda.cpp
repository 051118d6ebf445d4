#include "gordian/json_io.hpp"
#include "gordian/lambda.hpp"
#include "gordian/oracle.hpp"
#include "gordian/pairing.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace gordian;

namespace {
Decomposition knot(int p, int q, RingTag r = RingTag::F(2)) { return decompose(torus_knot(p, q, r, true)); }
Region trefoil_region() { return intersect(Region::half_plane(1), Region::quadrant(1, -1)); }
} // namespace

TEST(Region, Membership) {
    Region r = trefoil_region();
    EXPECT_TRUE(r.member(1, 0));
    EXPECT_FALSE(r.member(0, 1));
    EXPECT_TRUE(r.member(2, -1));
    EXPECT_FALSE(r.member(3, -2));
    EXPECT_EQ(r.corners(), (std::vector<Point>{{1, 0}, {2, -1}}));
    EXPECT_FALSE(r.diagonal().has_value());
}

TEST(Region, Algebra) {
    Region r = trefoil_region();
    EXPECT_EQ(transpose(transpose(r)), r);
    EXPECT_EQ(minkowski_add(Region::quadrant(0, 0), Region::quadrant(1, -1)), Region::quadrant(1, -1));
    EXPECT_EQ(region_union(Region::half_plane(2), Region::quadrant(5, 0)), Region::half_plane(2));
    EXPECT_EQ(intersect(Region::half_plane(0), Region::quadrant(0, 0)), Region::quadrant(0, 0));
    EXPECT_FALSE(Region::empty().member(100, 100));
}

TEST(Region, JsonRoundTrip) {
    for (Region r : {trefoil_region(), Region::half_plane(3), Region::empty(), region_union(Region::half_plane(4), Region::quadrant(-1, 2))})
        EXPECT_EQ(region_from_json(to_json(r)), r);
}

TEST(Lambda, SmallValues) {
    Region r = trefoil_region();
    EXPECT_EQ(small_lambda(r), 1);
    EXPECT_EQ(small_lambda0(r), 1);
    EXPECT_EQ(small_lambda(Region::empty()), std::nullopt);
    EXPECT_EQ(small_lambda0(Region::empty()), std::nullopt);
    EXPECT_EQ(lambda_to_string(std::nullopt), "inf");
}

TEST(Lambda, TrefoilAgainstUnknot) {
    RingTag Z = RingTag::Z();
    auto r = lambda_region_structured(decompose(zero_closure(Slope(-3, 1))), decompose(torus_complex(2, 0, 0, Z)));
    EXPECT_TRUE(r.exact);
    EXPECT_EQ(r.region, trefoil_region());
    auto f = lambda_region_structured(knot(2, 3), knot(1, 1));
    EXPECT_EQ(f.region, trefoil_region());
    EXPECT_EQ(lambda_region_brute(torus_knot(2, 3, RingTag::F(2)), torus_knot(1, 1, RingTag::F(2))), trefoil_region());
}

TEST(Lambda, SelfDistance) {
    for (auto [p, q] : {std::pair{1, 1}, {2, 5}, {3, 4}}) {
        auto r = lambda_region_structured(knot(p, q), knot(p, q));
        EXPECT_EQ(r.region, Region::quadrant(0, 0));
        EXPECT_EQ(small_lambda0(r.region), 0);
    }
}

TEST(Lambda, IntroValues) {
    auto a = lambda_region_structured(knot(3, 4), knot(2, 9));
    EXPECT_EQ(small_lambda0(a.region), 2);
    EXPECT_TRUE(a.region.member(1, 1));
    EXPECT_FALSE(a.region.member(1, 0));
    EXPECT_FALSE(a.region.member(0, 1));
    auto b = lambda_region_structured(knot(3, 7), knot(2, 13));
    EXPECT_EQ(small_lambda(b.region), 2);
}

TEST(Lambda, ClosedForms) {
    RingTag F2 = RingTag::F(2);
    Decomposition u = knot(1, 1);
    for (int m = 1; m <= 6; ++m) {
        auto c = closed_form_lambda(decompose(torus_complex(2, m, 0, F2)), u);
        EXPECT_EQ(c.lambda0_exact, std::max(m, 1));
    }
    EXPECT_EQ(closed_form_lambda(knot(3, 4), u).lambda_exact, 2);
    EXPECT_EQ(closed_form_lambda(u, u).lambda0_exact, 0);
    EXPECT_THROW(closed_form_lambda(decompose(torus_complex(2, 1, 0, RingTag::Z())), decompose(torus_complex(2, 0, 0, RingTag::Z()))),
                 Error);
}

TEST(Lambda, IndeterminateOnCollisions) {
    // two knights sharing a homological degree
    Decomposition d{{0}, {{1, 2, 6}, {1, 2, 8}}, RingTag::F(2)};
    EXPECT_FALSE(multiplicity_free(d));
    auto r = lambda_region_structured(d, knot(1, 1));
    EXPECT_FALSE(r.exact);
    EXPECT_EQ(r.outer, Region::quadrant(0, 0));
}

TEST(HomBasis, PieceExamples) {
    RingTag F2 = RingTag::F(2);
    EXPECT_EQ(hom_basis(Piece::P(0), Piece::P(0), 0, F2).dimension(), 1u);
    EXPECT_EQ(hom_basis(Piece::N(1, 2, 6), Piece::N(1, 2, 6), -2, F2).dimension(), 0u);
    EXPECT_EQ(hom_basis(Piece::N(2, 4, 12), Piece::N(2, 4, 12), -2, F2).dimension(), 1u);
    EXPECT_EQ(hom_basis(Piece::N(2, 4, 12), Piece::N(2, 4, 12), -4, F2).dimension(), 0u);
}

TEST(HomBasis, AgreesWithBruteForce) {
    RingTag F2 = RingTag::F(2);
    auto as_complex = [&](const Piece& p) {
        Decomposition d{{0}, {}, F2};
        FreeComplex c(F2);
        if (p.pawn) {
            c.add_generator("p", 0, p.s);
        } else {
            auto a = c.add_generator("a", p.knight.i, p.knight.q0);
            auto b = c.add_generator("b", p.knight.i + 1, p.knight.q0 + 2 * p.knight.k);
            c.set_entry(a, b, Monomial::unit(F2, p.knight.k));
        }
        return c;
    };
    std::vector<Piece> pieces{Piece::P(0), Piece::P(2), Piece::N(1, 0, 0), Piece::N(2, 0, 2), Piece::N(1, -1, -2),
                              Piece::N(2, -1, 0), Piece::N(1, 1, 2), Piece::N(3, 0, 0)};
    for (auto& x : pieces)
        for (auto& y : pieces)
            for (int qd = -6; qd <= 4; qd += 2)
                EXPECT_EQ(hom_basis(x, y, qd, F2).dimension(), brute_hom_dimension(as_complex(x), as_complex(y), qd))
                    << (x.pawn ? "P" : "N") << " -> " << (y.pawn ? "P" : "N") << " q " << qd;
}

TEST(Oracle, AgreesWithStructuredOnSamples) {
    for (std::uint64_t p : {2u, 3u}) {
        RingTag F = RingTag::F(p);
        std::vector<FreeComplex> cs;
        for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 1}, {2, 3}, {2, 5}, {3, 4}}) cs.push_back(torus_knot(a, b, F, true));
        for (auto& x : cs)
            for (auto& y : cs) EXPECT_EQ(lambda_region_brute(x, y), lambda_region_structured(decompose(x), decompose(y)).region);
    }
}

TEST(Oracle, CapsAreEnforced) {
    RingTag F2 = RingTag::F(2);
    OracleCaps tiny{2, 1};
    try {
        lambda_region_brute(torus_knot(3, 5, F2), torus_knot(2, 7, F2), tiny);
        FAIL() << "expected CapExceeded";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind, "CapExceeded");
    }
}

TEST(Properties, RandomPairsBoundsAndSymmetry) {
    std::mt19937 rng(5);
    RingTag F2 = RingTag::F(2);
    for (int trial = 0; trial < 40; ++trial) {
        // random knight positions keep the pawn at degree 0; multiplicity-free ones are exact
        auto a = gtest_support::random_split(rng, F2, 2, 0, 0).expected;
        auto b = gtest_support::random_split(rng, F2, 2, 0, 0).expected;
        auto ab = lambda_region_structured(a, b), ba = lambda_region_structured(b, a);
        EXPECT_EQ(transpose(ab.region), ba.region);
        EXPECT_EQ(transpose(ab.outer), ba.outer);
        long long h = (a.pawn.s - b.pawn.s) / 2;
        for (long long x = -8; x <= 8; ++x)
            for (long long y = -8; y <= 8; ++y) {
                if (ab.region.member(x, y)) EXPECT_TRUE(Region::quadrant(h, -h).member(x, y));
                if (ab.inner.member(x, y)) EXPECT_TRUE(ab.region.member(x, y));
                if (ab.region.member(x, y)) EXPECT_TRUE(ab.outer.member(x, y));
            }
    }
}
