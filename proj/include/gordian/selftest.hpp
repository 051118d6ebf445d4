#pragma once
// Acceptance checks, one function per criterion.

#include "gordian/json_io.hpp"
#include "gordian/knot_spec.hpp"
#include "gordian/lambda.hpp"
#include "gordian/obstruct.hpp"
#include "gordian/oracle.hpp"
#include "gordian/pairing.hpp"

#include <chrono>
#include <filesystem>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace gordian::selftest {

struct Outcome {
    int id;
    std::string title;
    bool pass = true;
    std::string detail;
    Outcome(int i, std::string t, bool p = true, std::string d = {}) : id(i), title(std::move(t)), pass(p), detail(std::move(d)) {}
};

class Check {
public:
    void expect(bool ok, const std::string& what) {
        if (!ok && failures_.size() < 8) failures_.push_back(what);
        if (!ok) ++fail_count_;
        ++count_;
    }
    bool ok() const { return fail_count_ == 0; }
    std::string summary() const {
        if (ok()) return std::to_string(count_) + " checks";
        std::string s = std::to_string(fail_count_) + "/" + std::to_string(count_) + " failed:";
        for (auto& f : failures_) s += " [" + f + "]";
        return s;
    }

private:
    std::vector<std::string> failures_;
    std::size_t count_ = 0, fail_count_ = 0;
};

inline std::string knot_name(int p, int q) {
    if (p == 1) return "U";
    return "T(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

inline Decomposition torus(int p, int q, RingTag r) { return decompose(torus_knot(p, q, r, true)); }

// odd coprime slopes with |p|, |q| <= bound
inline std::vector<Slope> odd_slopes(int bound) {
    std::vector<Slope> v;
    for (int p = -bound; p <= bound; ++p)
        for (int q = 1; q <= bound; q += 2)
            if (p % 2 != 0 && std::gcd(std::abs(p), q) == 1) v.push_back(Slope(p, q));
    return v;
}

inline Outcome criterion1() {
    Outcome o{1, "zz(3/2) matches the five-object golden shape with its relative bigradings"};
    Check c;
    ZigzagComplex z = zz(Slope(3, 2));
    validate_zigzag(z);
    propagate_grading(z, 0, 0, 0);
    // golden: o(2,6) -S-> *(3,7) <-D- *(2,5) <-S- o(1,4) <-D- o(0,2)
    struct G { Vertex v; int t, q; };
    std::vector<G> golden{{Vertex::Circ, 2, 6}, {Vertex::Bullet, 3, 7}, {Vertex::Bullet, 2, 5}, {Vertex::Circ, 1, 4}, {Vertex::Circ, 0, 2}};
    std::vector<std::pair<std::size_t, char>> arrows{{0, 'S'}, {2, 'D'}, {3, 'S'}, {4, 'D'}}; // source index, kind
    c.expect(z.objects.size() == 5, "five objects");
    if (z.objects.size() == 5) {
        for (std::size_t i = 0; i < 5; ++i) {
            c.expect(z.objects[i].v == golden[i].v, "vertex " + std::to_string(i));
            c.expect(*z.objects[i].t - *z.objects[0].t == golden[i].t - golden[0].t, "relative t " + std::to_string(i));
            c.expect(*z.objects[i].q - *z.objects[0].q == golden[i].q - golden[0].q, "relative q " + std::to_string(i));
        }
        for (std::size_t i = 0; i < 4; ++i) {
            c.expect(z.arrows[i].from == arrows[i].first, "arrow direction " + std::to_string(i));
            bool is_s = label_parity(z.arrows[i].label) == Parity::Odd;
            c.expect(is_s == (arrows[i].second == 'S'), "arrow kind " + std::to_string(i));
        }
    }
    o.pass = c.ok();
    o.detail = c.summary() + "; " + z.to_string();
    return o;
}

inline Outcome criterion2() {
    Outcome o{2, "0-closure pawn degree equals -signature for all odd slopes |p|,|q| <= 21"};
    Check c;
    auto t0 = std::chrono::steady_clock::now();
    std::size_t n = 0;
    for (auto& s : odd_slopes(21)) {
        FreeComplex k = zero_closure(s);
        Decomposition d = decompose(k);
        c.expect(d.pawn.s == -two_bridge_signature(s), s.to_string());
        ++n;
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    c.expect(secs < 5.0, "runtime under 5 s");
    o.pass = c.ok();
    std::ostringstream ss;
    ss << n << " slopes in " << secs << " s; " << c.summary();
    o.detail = ss.str();
    return o;
}

inline Outcome criterion3() {
    Outcome o{3, "decomposed 0-closure of slope -(2m+1) equals the closed form of T(2,2m+1), m <= 10"};
    Check c;
    for (int m = 0; m <= 10; ++m) {
        Decomposition d = decompose(zero_closure(Slope(-(2 * m + 1), 1)));
        c.expect(d == torus_decomposition_2(m, RingTag::Z()), "m=" + std::to_string(m));
    }
    o.pass = c.ok();
    o.detail = c.summary();
    return o;
}

inline Outcome criterion4() {
    Outcome o{4, "classification of lambda0 = 1 and lambda = 1 among 2- and 3-strand torus knots over F2"};
    Check c;
    const RingTag F2 = RingTag::F(2);
    struct K { int p, q; Decomposition d; };
    std::vector<K> ks;
    for (int m = 0; m <= 8; ++m) ks.push_back({2, 2 * m + 1, torus(2, 2 * m + 1, F2)});
    for (int n = 1; n <= 5; ++n)
        for (int i = 1; i <= 2; ++i) ks.push_back({3, 3 * n + i, torus(3, 3 * n + i, F2)});
    auto pair_is = [](const K& a, const K& b, int p1, int q1, int p2, int q2) {
        return (a.p == p1 && a.q == q1 && b.p == p2 && b.q == q2) || (a.p == p2 && a.q == q2 && b.p == p1 && b.q == q1);
    };
    std::size_t pairs = 0, hits0 = 0, hits = 0;
    for (std::size_t x = 0; x < ks.size(); ++x)
        for (std::size_t y = x + 1; y < ks.size(); ++y) {
            const K &a = ks[x], &b = ks[y];
            bool expect0 = false, expect1 = false;
            if (a.p == 2 && b.p == 2) {
                expect0 = std::abs(a.q - b.q) == 2;
                expect1 = true;
            } else if (a.p == 3 && b.p == 3) {
                expect0 = expect1 = (a.q / 3 == b.q / 3);
            } else {
                const K& t3 = a.p == 3 ? a : b;
                const K& t2 = a.p == 3 ? b : a;
                expect0 = pair_is(a, b, 3, 4, 2, 5) || pair_is(a, b, 3, 4, 2, 7) || pair_is(a, b, 3, 5, 2, 7) ||
                          pair_is(a, b, 3, 5, 2, 9);
                expect1 = (t3.q == 4 || t3.q == 5) && t2.q >= 5;
            }
            auto r = lambda_region_structured(a.d, b.d);
            c.expect(r.exact, "exact " + knot_name(a.p, a.q) + "," + knot_name(b.p, b.q));
            auto l0 = small_lambda0(r.region), l = small_lambda(r.region);
            std::string name = knot_name(a.p, a.q) + "," + knot_name(b.p, b.q);
            c.expect((l0 && *l0 == 1) == expect0, "lambda0 " + name + "=" + lambda_to_string(l0));
            c.expect((l && *l == 1) == expect1, "lambda " + name + "=" + lambda_to_string(l));
            c.expect(l && *l >= 1 && l0 && *l0 >= 1, "positive " + name);
            hits0 += expect0;
            hits += expect1;
            ++pairs;
        }
    o.pass = c.ok();
    o.detail = std::to_string(pairs) + " pairs, " + std::to_string(hits0) + " with lambda0=1, " + std::to_string(hits) +
               " with lambda=1; " + c.summary();
    return o;
}

inline Outcome criterion5() {
    Outcome o{5, "Lambda(T(2,3), U; Z) = V_1 cap V(1,-1)"};
    Check c;
    const RingTag Z = RingTag::Z();
    Decomposition tre = decompose(zero_closure(Slope(-3, 1)));
    c.expect(tre == decompose(torus_complex(2, 1, 0, Z)), "0-closure agrees with closed form");
    auto r = lambda_region_structured(tre, decompose(torus_complex(2, 0, 0, Z)));
    Region want = intersect(Region::half_plane(1), Region::quadrant(1, -1));
    c.expect(r.exact && r.region == want, "region " + r.region.to_string());
    c.expect(small_lambda(r.region) == 1 && small_lambda0(r.region) == 1, "lambda = lambda0 = 1");
    c.expect(!r.region.member(0, 1), "(0,1) not in");
    c.expect(r.region.member(1, 0), "(1,0) in");
    c.expect(r.region.member(2, -1), "(2,-1) in");
    o.pass = c.ok();
    o.detail = c.summary() + "; " + r.region.to_string();
    return o;
}

inline Outcome criterion6() {
    Outcome o{6, "lambda0(T(3,4),T(2,9)) = 2; lambda(T(3,7),T(2,13)) = 2 with torsion gap 1 and s gap 0"};
    Check c;
    const RingTag F2 = RingTag::F(2);
    auto r1 = lambda_region_structured(torus(3, 4, F2), torus(2, 9, F2));
    c.expect(small_lambda0(r1.region) == 2, "lambda0(T(3,4),T(2,9))=" + lambda_to_string(small_lambda0(r1.region)));
    c.expect(r1.region.member(1, 1), "(1,1) in");
    c.expect(!r1.region.member(0, 1) && !r1.region.member(1, 0), "nonnegative sum 1 excluded");
    auto a = torus(3, 7, F2), b = torus(2, 13, F2);
    auto r2 = lambda_region_structured(a, b);
    c.expect(small_lambda(r2.region) == 2, "lambda(T(3,7),T(2,13))=" + lambda_to_string(small_lambda(r2.region)));
    auto pa = torsion_profile(a), pb = torsion_profile(b);
    int gap = 0;
    for (int i = -2; i <= 20; ++i) gap = std::max(gap, std::abs(pa.at(i) - pb.at(i)));
    c.expect(gap == 1, "torsion gap " + std::to_string(gap));
    c.expect(std::abs(a.pawn.s - b.pawn.s) / 2 == 0, "s gap");
    o.pass = c.ok();
    o.detail = c.summary();
    return o;
}

inline Outcome criterion7(const std::string& data_dir) {
    Outcome o{7, "lambda0 over Q for T(2,11),T(3,7) and T(2,13),T(3,8) is 2 with half s gap 1"};
    Check c;
    const RingTag Q = RingTag::Q();
    for (auto [a, b] : {std::pair{11, 7}, std::pair{13, 8}}) {
        auto d1 = torus(2, a, Q), d2 = torus(3, b, Q);
        auto r = lambda_region_structured(d1, d2);
        std::string name = knot_name(2, a) + "," + knot_name(3, b);
        c.expect(r.exact && small_lambda0(r.region) == 2, name + " lambda0=" + lambda_to_string(small_lambda0(r.region)));
        c.expect(std::abs(d1.pawn.s - d2.pawn.s) / 2 == 1, name + " half s gap");
    }
    // optional rows from imported complexes: <dir>/external/rows.json, a list of
    // {"left": file, "right": file, "ring": R, "lambda0": n}
    std::string extra = "external rows skipped (no data)";
    std::filesystem::path rows = std::filesystem::path(data_dir) / "external" / "rows.json";
    if (std::filesystem::exists(rows)) {
        std::ifstream in(rows);
        json j = json::parse(in);
        std::size_t done = 0;
        for (auto& row : j) {
            RingTag r = RingTag::parse(row.at("ring").get<std::string>());
            auto base = rows.parent_path();
            auto c1 = base_change(read_json_file((base / row.at("left").get<std::string>()).string()), r);
            auto c2 = base_change(read_json_file((base / row.at("right").get<std::string>()).string()), r);
            auto res = lambda_region_structured(decompose(c1), decompose(c2));
            if (res.exact) c.expect(small_lambda0(res.region) == row.at("lambda0").get<long long>(), "external row");
            else c.expect(small_lambda0(res.inner) >= row.at("lambda0").get<long long>(), "external row bound");
            ++done;
        }
        extra = std::to_string(done) + " external rows";
    }
    o.pass = c.ok();
    o.detail = c.summary() + "; " + extra;
    return o;
}

inline Outcome criterion8() {
    Outcome o{8, "brute-force oracle equals structured engine over F2 and F3 on the sample pairs"};
    Check c;
    std::vector<std::pair<int, int>> names{{1, 1}, {2, 3}, {2, 5}, {2, 7}, {3, 4}, {3, 5}};
    OracleCaps caps = OracleCaps::from_env();
    std::size_t n = 0;
    for (std::uint64_t p : {2u, 3u}) {
        RingTag F = RingTag::F(p);
        std::vector<FreeComplex> cs;
        for (auto [a, b] : names) cs.push_back(torus_knot(a, b, F, true));
        for (std::size_t x = 0; x < cs.size(); ++x)
            for (std::size_t y = 0; y < cs.size(); ++y) {
                auto s = lambda_region_structured(decompose(cs[x]), decompose(cs[y]));
                Region b = lambda_region_brute(cs[x], cs[y], caps);
                c.expect(s.exact && s.region == b, "F" + std::to_string(p) + " " + knot_name(names[x].first, names[x].second) +
                                                       "," + knot_name(names[y].first, names[y].second) + " structured " +
                                                       s.region.to_string() + " brute " + b.to_string());
                ++n;
            }
    }
    o.pass = c.ok();
    o.detail = std::to_string(n) + " ordered pairs; " + c.summary();
    return o;
}

inline std::vector<std::pair<std::string, Decomposition>> sample_set(RingTag r) {
    std::vector<std::pair<std::string, Decomposition>> v;
    for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 1}, {2, 3}, {2, 5}, {2, 7}, {2, 9}, {3, 4}, {3, 5}})
        v.push_back({knot_name(a, b), torus(a, b, r)});
    return v;
}

inline Region random_region(std::mt19937& rng) {
    std::uniform_int_distribution<int> coord(-4, 4), count(0, 4), coin(0, 2);
    std::vector<Point> cs;
    int k = count(rng);
    for (int i = 0; i < k; ++i) {
        int a = coord(rng), b = coord(rng);
        if (a + b < 0) b = -a;
        cs.push_back({a, b});
    }
    std::optional<long long> d;
    if (coin(rng) == 0) d = std::uniform_int_distribution<int>(0, 6)(rng);
    return Region(d, cs);
}

inline Outcome criterion9() {
    Outcome o{9, "pseudometric, region laws, mirror symmetry, s and torsion bounds, single-knot regions, End ranks"};
    Check c;
    const RingTag F2 = RingTag::F(2);
    auto S = sample_set(F2);
    const std::size_t N = S.size();
    std::vector<std::vector<Region>> L(N, std::vector<Region>(N));
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) {
            auto r = lambda_region_structured(S[i].second, S[j].second);
            c.expect(r.exact, "exact");
            L[i][j] = r.region;
        }
    auto box_points = [](const std::function<void(long long, long long)>& f) {
        for (long long x = -12; x <= 12; ++x)
            for (long long y = -12; y <= 12; ++y) f(x, y);
    };
    for (std::size_t i = 0; i < N; ++i) {
        c.expect(small_lambda(L[i][i]) == 0 && small_lambda0(L[i][i]) == 0, "lambda(K,K)=0 " + S[i].first);
        c.expect(L[i][i] == Region::quadrant(0, 0), "Lambda(K,K)=V(0,0) " + S[i].first);
        // single knot against the unknot
        c.expect(L[i][0] == knot_region_closed_form(S[i].second), "Lambda(K) closed form " + S[i].first);
        auto cf = closed_form_lambda(S[i].second, S[0].second);
        c.expect(small_lambda0(L[i][0]) == cf.lambda0_exact && small_lambda(L[i][0]) == cf.lambda_exact,
                 "closed form values " + S[i].first);
    }
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) {
            std::string name = S[i].first + "," + S[j].first;
            const Region& r = L[i][j];
            c.expect(transpose(r) == L[j][i], "transpose " + name);
            c.expect(small_lambda(r) == small_lambda(L[j][i]) && small_lambda0(r) == small_lambda0(L[j][i]),
                     "symmetry " + name);
            box_points([&](long long x, long long y) {
                if (r.member(x, y)) c.expect(r.member(x + 1, y) && r.member(x, y + 1), "upward closure " + name);
            });
            // mirror: Lambda(-K2, -K1) = Lambda(K1, K2)
            auto m1 = decompose(dualize(reassemble(S[i].second))), m2 = decompose(dualize(reassemble(S[j].second)));
            c.expect(lambda_region_structured(m2, m1).region == r, "mirror " + name);
            long long s12 = (S[i].second.pawn.s - S[j].second.pawn.s) / 2;
            long long kF = std::max(knot_umax(S[i].second), knot_umax(S[j].second));
            Region outer = Region::quadrant(s12, -s12);
            Region inner = intersect(Region::half_plane(kF), outer);
            box_points([&](long long x, long long y) {
                if (r.member(x, y)) c.expect(outer.member(x, y), "outer bound " + name);
                if (inner.member(x, y)) c.expect(r.member(x, y), "inner bound " + name);
            });
            auto l0 = small_lambda0(r), l = small_lambda(r);
            c.expect(l0 && std::abs(s12) <= *l0, "s bound " + name);
            auto pi = torsion_profile(S[i].second), pj = torsion_profile(S[j].second);
            for (int d = -2; d <= 16; ++d) c.expect(l && std::abs(pi.at(d) - pj.at(d)) <= *l, "torsion bound " + name);
            for (std::size_t k = 0; k < N; ++k) {
                auto a = small_lambda(L[i][k]), b = small_lambda(L[k][j]);
                auto a0 = small_lambda0(L[i][k]), b0 = small_lambda0(L[k][j]);
                c.expect(*l <= *a + *b && *l0 <= *a0 + *b0, "triangle " + name + " via " + S[k].first);
                Region sum = minkowski_add(L[i][k], L[k][j]);
                for (auto& p : sum.corners()) c.expect(r.member(p), "minkowski " + name + " via " + S[k].first);
                if (sum.diagonal()) c.expect(r.member(*sum.diagonal(), 0) && r.member(0, *sum.diagonal()), "minkowski diagonal");
            }
        }
    // randomized region algebra
    std::mt19937 rng(20261016);
    for (int trial = 0; trial < 300; ++trial) {
        Region a = random_region(rng), b = random_region(rng);
        Region u = region_union(a, b), in = intersect(a, b), t = transpose(a), m = minkowski_add(a, b);
        c.expect(transpose(t) == a, "transpose involution");
        box_points([&](long long x, long long y) {
            c.expect(u.member(x, y) == (a.member(x, y) || b.member(x, y)), "union pointwise");
            c.expect(in.member(x, y) == (a.member(x, y) && b.member(x, y)), "intersection pointwise");
            c.expect(t.member(x, y) == a.member(y, x), "transpose pointwise");
        });
        for (long long x = -6; x <= 6; ++x)
            for (long long y = -6; y <= 6; ++y)
                for (long long x2 = -6; x2 <= 6; x2 += 3)
                    for (long long y2 = -6; y2 <= 6; y2 += 3)
                        if (a.member(x, y) && b.member(x2, y2)) c.expect(m.member(x + x2, y + y2), "minkowski contains sums");
    }
    // End-space ranks
    for (auto s : {Slope(1, 1), Slope(3, 1), Slope(5, 3)}) {
        auto z = graded_zz(s);
        FreeComplex e = mor_complex(z, z);
        auto h0 = homology_slice(e, 0, 0);
        c.expect(h0.rank == 1 && h0.torsion.empty(), "End_0 rank 1 for " + s.to_string());
        for (int n = 1; n <= 3; ++n) {
            auto h = homology_slice(e, 0, -2 * n);
            c.expect(h.rank == 2 && h.torsion.empty(), "End_n rank 2 for " + s.to_string());
        }
    }
    o.pass = c.ok();
    o.detail = c.summary();
    return o;
}

inline Outcome criterion10() {
    Outcome o{10, "alpha/beta identity, trefoil admissibility signatures, positive crossing bound"};
    Check c;
    for (auto& s : odd_slopes(21)) {
        if (s.p == s.q) continue; // beta(1) and alpha(-1) are excluded
        c.expect(beta(s) == alpha(Slope(-s.p, s.q)), "beta=alpha(-) at " + s.to_string());
    }
    const RingTag Z = RingTag::Z();
    Region tre = lambda_region_structured(decompose(torus_complex(2, 1, 0, Z)), decompose(torus_complex(2, 0, 0, Z))).region;
    std::set<long long> seen;
    for (auto& s : odd_slopes(21)) {
        if (s.p == -1 && s.q == 1) continue;
        if (admissible(tre, s)) {
            long long sg = two_bridge_signature(s);
            c.expect(sg == 0 || sg == 2 || sg == 4, "signature of admissible " + s.to_string());
            seen.insert(sg);
        }
    }
    c.expect(seen == std::set<long long>{0, 2, 4}, "all of 0, 2, 4 occur");
    c.expect(admissible(tre, Slope(1, 1)), "crossing change unknots the trefoil");
    for (int n = 1; n <= 5; ++n)
        for (int i = 1; i <= 2; ++i)
            c.expect(positive_crossing_bound(torsion_profile(torus(3, 3 * n + i, RingTag::F(2)))) == 4 * n + 1,
                     "crossing bound T(3," + std::to_string(3 * n + i) + ")");
    c.expect(positive_crossing_bound(torsion_profile(torus(1, 1, RingTag::F(2)))) == 0, "unknot bound");
    o.pass = c.ok();
    o.detail = c.summary();
    return o;
}

inline std::vector<Outcome> run_all(const std::string& data_dir) {
    std::vector<std::function<Outcome()>> fs{criterion1, criterion2, criterion3, criterion4, criterion5, criterion6,
                                             [&] { return criterion7(data_dir); }, criterion8, criterion9, criterion10};
    std::vector<Outcome> out;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        try {
            out.push_back(fs[i]());
        } catch (const std::exception& e) {
            out.push_back({static_cast<int>(i + 1), "criterion " + std::to_string(i + 1), false, std::string("error: ") + e.what()});
        }
    }
    return out;
}

inline std::string format(const Outcome& o) {
    return "criterion " + std::to_string(o.id) + ": " + (o.pass ? "PASS" : "FAIL") + " - " + o.title + " (" + o.detail + ")";
}

} // namespace gordian::selftest
