#include "gordian/json_io.hpp"
#include "gordian/pairing.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace gordian;

namespace {

// gens t0:{q0, q-2}, t1:{q0}; d = (2, G)
FreeComplex c1(RingTag r) {
    FreeComplex c(r);
    auto a = c.add_generator("a", 0, 0), b = c.add_generator("b", 0, -2), t = c.add_generator("c", 1, 0);
    c.set_entry(a, t, Monomial(Scalar(r, 2), 0));
    c.set_entry(b, t, Monomial::unit(r, 1));
    return c;
}

FreeComplex trefoil() { return zero_closure(Slope(-3, 1)); }

} // namespace

TEST(FreeComplex, Validation) {
    FreeComplex empty(RingTag::Z());
    EXPECT_NO_THROW(empty.validate());
    FreeComplex pawn(RingTag::Z());
    pawn.add_generator("p", 0, 0);
    EXPECT_NO_THROW(pawn.validate());
    FreeComplex bad(RingTag::Z());
    bad.add_generator("x", 0, 0);
    bad.add_generator("y", 1, 1);
    EXPECT_THROW(bad.set_entry(0, 1, Monomial::unit(RingTag::Z(), 1)), Error);
    EXPECT_THROW(bad.add_generator("x", 2, 0), Error);
}

TEST(FreeComplex, DSquaredZeroIsChecked) {
    RingTag Z = RingTag::Z();
    FreeComplex c(Z);
    auto a = c.add_generator("a", 0, 0), b = c.add_generator("b", 1, 0), d = c.add_generator("d", 2, 0);
    c.set_entry(a, b, Monomial::unit(Z));
    c.set_entry(b, d, Monomial::unit(Z));
    EXPECT_THROW(c.validate(), Error);
}

TEST(GaussianEliminate, TwoAndGComplex) {
    FreeComplex q = gaussian_eliminate(c1(RingTag::Q()));
    ASSERT_EQ(q.size(), 1u);
    EXPECT_EQ(q.gen(0).t, 0);
    EXPECT_EQ(q.gen(0).q, -2);
    EXPECT_EQ(q.entry_count(), 0u);
    EXPECT_EQ(gaussian_eliminate(c1(RingTag::Z())), c1(RingTag::Z()));
}

TEST(GaussianEliminate, DeloopedCircle) {
    // a unit edge next to a G edge: the unit edge cancels, one free generator stays
    RingTag Z = RingTag::Z();
    FreeComplex c(Z);
    auto x0 = c.add_generator("x0", 0, 1), x1 = c.add_generator("x1", 0, -1);
    auto y0 = c.add_generator("y0", 1, 1), y1 = c.add_generator("y1", 1, -1);
    c.set_entry(x0, y0, Monomial::unit(Z));
    c.set_entry(x1, y0, Monomial::unit(Z, 1));
    c.set_entry(x1, y1, Monomial::unit(Z));
    FreeComplex r = gaussian_eliminate(c);
    EXPECT_EQ(r.size(), 0u);
    c.set_entry(x1, y1, Monomial::zero(Z));
    r = gaussian_eliminate(c);
    ASSERT_EQ(r.size(), 2u);
    EXPECT_EQ(r.entry_count(), 0u);
}

TEST(Dualize, Involution) {
    FreeComplex t = trefoil();
    EXPECT_EQ(dualize(dualize(t)), t);
    FreeComplex p(RingTag::Z());
    p.add_generator("p", 0, 4);
    EXPECT_EQ(dualize(p).gen(0).q, -4);
    Decomposition d = decompose(dualize(t));
    EXPECT_EQ(d.pawn.s, -2);
    ASSERT_EQ(d.knights.size(), 1u);
    EXPECT_EQ(d.knights[0], (Knight{1, -3, -8}));
}

TEST(BaseChange, Examples) {
    FreeComplex f2 = base_change(c1(RingTag::Z()), RingTag::F(2));
    EXPECT_TRUE(f2.entry(0, 2).is_zero());
    EXPECT_EQ(f2.entry(1, 2), Monomial::unit(RingTag::F(2), 1));
    FreeComplex t = trefoil();
    FreeComplex tq = base_change(t, RingTag::Q());
    EXPECT_EQ(tq.size(), t.size());
    FreeComplex t2 = base_change(t, RingTag::F(2));
    EXPECT_EQ(t2.entry_count(), t.entry_count());
    EXPECT_EQ(decompose(t2), torus_decomposition_2(1, RingTag::F(2)));
}

TEST(Homology, TrefoilSlices) {
    FreeComplex t = trefoil();
    auto h = homology_slice(t, 3, 8);
    EXPECT_EQ(h.rank, 1u);
    EXPECT_TRUE(h.torsion.empty());
    EXPECT_EQ(homology_slice(t, 3, 6).rank, 0u);
    EXPECT_EQ(homology_slice(t, 0, 2).rank, 1u);
    FreeComplex u = torus_complex(2, 0, 0, RingTag::Z());
    EXPECT_EQ(homology_slice(u, 0, 0).rank, 1u);
}

TEST(Homology, TorsionOverZ) {
    // 2 : Z -> Z at equal q gives Z/2
    RingTag Z = RingTag::Z();
    FreeComplex c(Z);
    c.add_generator("a", 0, 0);
    c.add_generator("b", 1, 0);
    c.set_entry(0, 1, Monomial(Scalar(Z, 2), 0));
    auto h = homology_slice(c, 1, 0);
    EXPECT_EQ(h.rank, 0u);
    ASSERT_EQ(h.torsion.size(), 1u);
    EXPECT_EQ(h.torsion[0], 2);
    EXPECT_EQ(homology_slice(base_change(c, RingTag::F(2)), 1, 0).rank, 1u);
}

TEST(Shift, Examples) {
    FreeComplex t = trefoil();
    EXPECT_EQ(shift(t, 0, 0), t);
    FreeComplex p(RingTag::Z());
    p.add_generator("p", 0, 0);
    FreeComplex s = shift(p, 2, 6);
    EXPECT_EQ(s.gen(0).t, 2);
    EXPECT_EQ(s.gen(0).q, 6);
}

TEST(Json, RoundTrip) {
    FreeComplex t = trefoil();
    EXPECT_EQ(read_json(write_json(t)), t);
    FreeComplex q = base_change(c1(RingTag::Z()), RingTag::Q());
    q.set_entry(0, 2, Monomial(Scalar(RingTag::Q(), BigRat(3, 7)), 0));
    EXPECT_EQ(read_json(write_json(q)), q);
    EXPECT_THROW(read_json("{\"ring\":\"Z\"}"), Error);
    EXPECT_THROW(read_json("not json"), Error);
    EXPECT_THROW(read_json(R"({"ring":"Z","generators":[{"id":"a","t":0,"q":0},{"id":"b","t":1,"q":1}],
                               "diff":[{"src":"a","tgt":"b","coeff":1,"gexp":0}]})"),
                 Error);
}

TEST(Json, SampleFileLoads) {
    FreeComplex c = read_json_file(std::string(GORDIAN_TEST_DATA) + "/trefoil.json");
    EXPECT_EQ(decompose(c), torus_decomposition_2(1, RingTag::Z()));
}

TEST(Properties, EliminationPreservesHomology) {
    std::mt19937 rng(11);
    for (RingTag r : {RingTag::Z(), RingTag::Q(), RingTag::F(2), RingTag::F(3)}) {
        for (int trial = 0; trial < 25; ++trial) {
            auto rs = gtest_support::random_split(rng, r);
            ASSERT_NO_THROW(rs.complex.validate());
            FreeComplex e = gaussian_eliminate(rs.complex);
            EXPECT_NO_THROW(e.validate());
            for (auto [t, q] : support_window(rs.complex))
                EXPECT_EQ(homology_slice(e, t, q), homology_slice(rs.complex, t, q)) << r.name() << " " << t << "," << q;
            EXPECT_EQ(dualize(dualize(rs.complex)), rs.complex);
            EXPECT_EQ(read_json(write_json(rs.complex)), rs.complex);
        }
    }
}
