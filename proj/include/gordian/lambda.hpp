#pragma once
// lambda, lambda0 and the region Lambda between knot complexes, computed
// from pawn/knight decompositions.

#include "gordian/pieces.hpp"
#include "gordian/region.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace gordian {

using LambdaValue = std::optional<long long>; // nullopt means infinity

inline std::string lambda_to_string(const LambdaValue& v) { return v ? std::to_string(*v) : "inf"; }

inline LambdaValue small_lambda(const Region& r) { return intersect(r, Region::half_plane(0)).min_sum(); }
inline LambdaValue small_lambda0(const Region& r) { return intersect(r, Region::quadrant(0, 0)).min_sum(); }

struct LambdaResult {
    bool exact = true;
    Region region; // exact region when exact
    Region inner;  // bounds, equal to region when exact
    Region outer;
};

inline bool multiplicity_free(const Decomposition& d) {
    std::map<int, int> count;
    ++count[0];
    for (auto& k : d.knights) {
        ++count[k.i];
        ++count[k.i + 1];
    }
    for (auto& [deg, c] : count)
        if (c > 1) return false;
    return true;
}

namespace detail {
inline long long half(long long x) {
    if (x % 2) throw Error("InternalError", "odd s difference");
    return x / 2;
}
inline const Knight* aligned(const Decomposition& d, int i) {
    for (auto& k : d.knights)
        if (k.i == i) return &k;
    return nullptr;
}
} // namespace detail

// Membership of (q1, q2) for multiplicity-free decompositions.
inline bool structured_member(const Decomposition& d1, const Decomposition& d2, long long q1, long long q2) {
    long long n = q1 + q2;
    if (n < 0) return false;
    long long s12 = detail::half(d1.pawn.s - d2.pawn.s);
    // pawn components G^(q1 - s12/2) and G^(q2 + s12/2)
    if (q1 - s12 < 0 || q2 + s12 < 0) return false;
    for (auto& x : d1.knights) {
        const Knight* y = detail::aligned(d2, x.i);
        if (!y) {
            if (n < x.k) return false;
            continue;
        }
        if (n >= std::max(x.k, y->k)) continue;
        long long dq = x.q0 - y->q0;
        if (dq % 2) return false;
        bool f_ok = q1 >= dq / 2 + std::max(0, x.k - y->k);
        bool g_ok = q2 >= -dq / 2 + std::max(0, y->k - x.k);
        if (!(f_ok && g_ok)) return false;
    }
    for (auto& y : d2.knights)
        if (!detail::aligned(d1, y.i) && n < y.k) return false;
    return true;
}

inline int knot_umax(const Decomposition& d) { return torsion_profile(d).umax; }

inline LambdaResult lambda_region_structured(const Decomposition& d1, const Decomposition& d2) {
    if (!(d1.ring == d2.ring)) throw Error("MixedRings", d1.ring.name() + " vs " + d2.ring.name());
    long long s12 = detail::half(d1.pawn.s - d2.pawn.s);
    long long kF = std::max(knot_umax(d1), knot_umax(d2));
    Region outer = Region::quadrant(s12, -s12);
    Region high = intersect(Region::half_plane(kF), outer);
    LambdaResult res;
    if (!multiplicity_free(d1) || !multiplicity_free(d2)) {
        res.exact = false;
        res.inner = high;
        res.outer = outer;
        res.region = high;
        return res;
    }
    std::vector<Point> pts;
    for (long long n = 0; n < kF; ++n)
        for (long long q1 = s12; q1 <= n + s12; ++q1)
            if (structured_member(d1, d2, q1, n - q1)) pts.push_back({q1, n - q1});
    for (auto& c : high.corners())
        if (!structured_member(d1, d2, c.first, c.second))
            throw Error("InternalError", "high corner rejected by structured engine");
    res.region = region_union(Region(std::nullopt, pts), high);
    res.inner = res.outer = res.region;
    return res;
}

// ---- homotopy classes of maps between single pieces ----

struct Piece {
    bool pawn = true;
    int s = 0;  // pawn degree
    Knight knight{};
    static Piece P(int s) { return {true, s, {}}; }
    static Piece N(int k, int i, int q0) { return {false, 0, {k, i, q0}}; }
    // slots: pawn has one slot (0, s); knight has a at (i, q0) and b at (i+1, q0+2k)
    std::vector<std::pair<int, int>> slots() const {
        if (pawn) return {{0, s}};
        return {{knight.i, knight.q0}, {knight.i + 1, knight.q0 + 2 * knight.k}};
    }
};

struct MapComponent {
    int src_slot;
    int tgt_slot;
    Monomial value;
};

struct HomotopyHomSpace {
    Piece source;
    Piece target;
    int qdeg = 0;
    std::vector<std::vector<MapComponent>> basis;
    std::size_t dimension() const { return basis.size(); }
};

inline HomotopyHomSpace hom_basis(const Piece& x, const Piece& y, int qdeg, RingTag r) {
    HomotopyHomSpace h{x, y, qdeg, {}};
    auto sx = x.slots(), sy = y.slots();
    // exponent of the G-power in a component from slot a to slot b, or -1
    auto expo = [&](int a, int b) -> int {
        if (sx[a].first != sy[b].first) return -1;
        int diff = sy[b].second - sx[a].second - qdeg;
        if (diff < 0 || diff % 2) return -1;
        return diff / 2;
    };
    auto comp = [&](int a, int b) { return MapComponent{a, b, Monomial::unit(r, expo(a, b))}; };
    if (x.pawn && y.pawn) {
        if (expo(0, 0) >= 0) h.basis.push_back({comp(0, 0)});
        return h;
    }
    if (x.pawn) { // into a knight: only onto its b slot when the knight is at (-1, 0)
        if (y.knight.i == -1) {
            int m = expo(0, 1);
            if (m >= 0 && m < y.knight.k) h.basis.push_back({comp(0, 1)});
        }
        return h;
    }
    if (y.pawn) { // out of a knight: only from its a slot when the knight is at (0, 1)
        if (x.knight.i == 0) {
            int m = expo(0, 0);
            if (m >= 0 && m < x.knight.k) h.basis.push_back({comp(0, 0)});
        }
        return h;
    }
    const Knight &kx = x.knight, &ky = y.knight;
    if (kx.i == ky.i) {
        int m = expo(0, 0), m2 = expo(1, 1);
        if (m >= 0 && m2 >= 0 && m < kx.k) h.basis.push_back({comp(0, 0), comp(1, 1)});
    } else if (kx.i == ky.i + 1) { // a of x onto b of y
        int m = expo(0, 1);
        if (m >= 0 && m < std::min(kx.k, ky.k)) h.basis.push_back({comp(0, 1)});
    }
    return h;
}

// ---- closed forms over a field ----

struct ClosedFormLambda {
    long long lambda0_upper = 0; // max{|s12|/2, u1, u2}
    long long lambda_upper = 0;  // max{u1, u2}
    std::optional<long long> lambda0_exact; // when the right knot is the unknot
    std::optional<long long> lambda_exact;
};

inline bool is_unknot(const Decomposition& d) { return d.pawn.s == 0 && d.knights.empty(); }

inline ClosedFormLambda closed_form_lambda(const Decomposition& d1, const Decomposition& d2) {
    if (!d1.ring.is_field() || !(d1.ring == d2.ring)) throw Error("BadRing", "closed forms need one field");
    long long u1 = knot_umax(d1), u2 = knot_umax(d2);
    long long hs = std::abs(detail::half(d1.pawn.s - d2.pawn.s));
    ClosedFormLambda c;
    c.lambda0_upper = std::max({hs, u1, u2});
    c.lambda_upper = std::max(u1, u2);
    if (is_unknot(d2)) {
        c.lambda0_exact = std::max<long long>(std::abs(detail::half(d1.pawn.s)), u1);
        c.lambda_exact = u1;
    }
    return c;
}

// Lambda(K; F) = V_u cap V(s/2, -s/2) for a single knot against the unknot
inline Region knot_region_closed_form(const Decomposition& d) {
    long long h = detail::half(d.pawn.s);
    return intersect(Region::half_plane(knot_umax(d)), Region::quadrant(h, -h));
}

} // namespace gordian
