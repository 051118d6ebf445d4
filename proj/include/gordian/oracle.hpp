#pragma once
// Brute-force evaluation of Lambda over a prime field, straight from the
// definition: chain maps modulo homotopy, linear conditions on g.

#include "gordian/lambda.hpp"
#include "gordian/linalg.hpp"

#include <cstdint>
#include <cstdlib>
#include <map>
#include <string>
#include <vector>

namespace gordian {

struct OracleCaps {
    std::size_t generators = 24;
    std::size_t dimension = 16;

    // GORDIAN_CAPS=gen,dim
    static OracleCaps from_env() {
        OracleCaps c;
        if (const char* e = std::getenv("GORDIAN_CAPS")) {
            std::string s(e);
            auto comma = s.find(',');
            try {
                if (comma == std::string::npos) throw std::invalid_argument(s);
                c.generators = std::stoul(s.substr(0, comma));
                c.dimension = std::stoul(s.substr(comma + 1));
            } catch (const std::logic_error&) {
                throw Error("SchemaError", "GORDIAN_CAPS must look like gen,dim");
            }
        }
        return c;
    }
};

namespace oracle {

using linalg::ModP;
using Vec = std::vector<std::uint64_t>;

struct ModComplex {
    std::vector<Generator> gens;
    std::vector<std::map<std::size_t, std::uint64_t>> out; // coefficient only, the G-power is forced
};

inline ModComplex to_mod(const FreeComplex& c, std::uint64_t p) {
    ModComplex m;
    m.gens = c.generators();
    m.out.resize(c.size());
    BigInt P(p);
    for (std::size_t a = 0; a < c.size(); ++a)
        for (auto& [b, e] : c.out(a)) {
            BigInt v = numerator(e.coeff.value()) % P;
            if (v < 0) v += P;
            m.out[a][b] = static_cast<std::uint64_t>(v);
        }
    return m;
}

// Homogeneous maps C1 -> C2 of bidegree (dt, dq): one coordinate per (x, y) pair.
struct MapSpace {
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
    std::size_t size() const { return index.size(); }
};

inline MapSpace map_space(const ModComplex& c1, const ModComplex& c2, int dt, int dq) {
    MapSpace s;
    for (std::size_t x = 0; x < c1.gens.size(); ++x)
        for (std::size_t y = 0; y < c2.gens.size(); ++y) {
            auto &g = c1.gens[x], &h = c2.gens[y];
            int diff = h.q - g.q - dq;
            if (h.t == g.t + dt && diff >= 0 && diff % 2 == 0) s.index.emplace(std::pair(x, y), s.index.size());
        }
    return s;
}

struct HomSpace {
    MapSpace maps;                 // degree-0 maps
    std::vector<Vec> boundaries;   // spanning set of nullhomotopic maps
    std::vector<Vec> reps;         // chain maps forming a basis modulo boundaries
};

inline HomSpace hom_space(const ModComplex& c1, const ModComplex& c2, int dq, const ModP& F, std::size_t dim_cap) {
    HomSpace H;
    H.maps = map_space(c1, c2, 0, dq);
    const std::size_t N = H.maps.size();
    // chain condition rows: for each (x, z) with t(z) = t(x) + 1
    std::map<std::pair<std::size_t, std::size_t>, Vec> rows;
    auto row = [&](std::size_t x, std::size_t z) -> Vec& {
        auto it = rows.find({x, z});
        if (it == rows.end()) it = rows.emplace(std::pair(x, z), Vec(N, 0)).first;
        return it->second;
    };
    for (auto& [xy, j] : H.maps.index) {
        auto [x, y] = xy;
        for (auto& [z, c] : c2.out[y]) { // d2 f
            Vec& r = row(x, z);
            r[j] = F.add(r[j], c);
        }
        for (std::size_t x0 = 0; x0 < c1.gens.size(); ++x0) { // f d1
            auto it = c1.out[x0].find(x);
            if (it == c1.out[x0].end()) continue;
            Vec& r = row(x0, y);
            r[j] = F.sub(r[j], it->second);
        }
    }
    linalg::ModMatrix m;
    for (auto& [k, r] : rows) m.push_back(r);
    auto cycles = linalg::null_space(m, N, F);
    // boundaries d2 h + h d1, h of bidegree (-1, dq)
    MapSpace hs = map_space(c1, c2, -1, dq);
    for (auto& [xw, j] : hs.index) {
        auto [x, w] = xw;
        Vec b(N, 0);
        for (auto& [y, c] : c2.out[w]) {
            auto it = H.maps.index.find({x, y});
            if (it != H.maps.index.end()) b[it->second] = F.add(b[it->second], c);
        }
        for (std::size_t x0 = 0; x0 < c1.gens.size(); ++x0) {
            auto it = c1.out[x0].find(x);
            if (it == c1.out[x0].end()) continue;
            auto jt = H.maps.index.find({x0, w});
            if (jt != H.maps.index.end()) b[jt->second] = F.add(b[jt->second], it->second);
        }
        H.boundaries.push_back(std::move(b));
    }
    // extend the boundary span by cycles
    linalg::ModMatrix span = H.boundaries;
    std::size_t rank = span.empty() ? 0 : linalg::row_reduce(span, F, N).size();
    for (auto& z : cycles) {
        linalg::ModMatrix trial = H.boundaries;
        for (auto& r : H.reps) trial.push_back(r);
        trial.push_back(z);
        std::size_t rk = linalg::row_reduce(trial, F, N).size();
        if (rk > rank) {
            H.reps.push_back(z);
            rank = rk;
            if (H.reps.size() > dim_cap)
                throw Error("CapExceeded", "chain-map space dimension " + std::to_string(H.reps.size()));
        }
    }
    return H;
}

// (g o f) as a vector in the map space of C1 -> C3
inline Vec compose(const MapSpace& f_space, const Vec& f, const MapSpace& g_space, const Vec& g,
                   const MapSpace& target, const ModP& F) {
    Vec r(target.size(), 0);
    for (auto& [xy, i] : f_space.index) {
        if (f[i] == 0) continue;
        for (auto it = g_space.index.lower_bound({xy.second, 0});
             it != g_space.index.end() && it->first.first == xy.second; ++it) {
            if (g[it->second] == 0) continue;
            auto t = target.index.find({xy.first, it->first.second});
            if (t == target.index.end()) throw Error("InternalError", "composite outside target space");
            r[t->second] = F.add(r[t->second], F.mul(f[i], g[it->second]));
        }
    }
    return r;
}

inline Vec g_power_identity(const MapSpace& s, std::size_t n) {
    Vec r(s.size(), 0);
    for (std::size_t x = 0; x < n; ++x) r[s.index.at({x, x})] = 1;
    return r;
}

} // namespace oracle

// Is (q1, q2) in Lambda(C1, C2)? Both complexes over the same prime field.
inline bool brute_member(const FreeComplex& c1, const FreeComplex& c2, long long q1, long long q2,
                         const OracleCaps& caps = {}) {
    using namespace oracle;
    if (c1.ring().kind != RingTag::Kind::Fp || !(c1.ring() == c2.ring()))
        throw Error("BadRing", "the brute-force oracle needs one prime field");
    if (c1.size() + c2.size() > caps.generators)
        throw Error("CapExceeded", "generator count " + std::to_string(c1.size() + c2.size()));
    long long n = q1 + q2;
    if (n < 0) return false;
    ModP F{c1.ring().p};
    auto m1 = to_mod(c1, F.p), m2 = to_mod(c2, F.p);
    int d1 = static_cast<int>(-2 * q1), d2 = static_cast<int>(-2 * q2), dn = static_cast<int>(-2 * n);
    auto HF = hom_space(m1, m2, d1, F, caps.dimension);
    auto HG = hom_space(m2, m1, d2, F, caps.dimension);
    auto E1 = hom_space(m1, m1, dn, F, caps.dimension + c1.size() * c1.size());
    auto E2 = hom_space(m2, m2, dn, F, caps.dimension + c2.size() * c2.size());
    Vec id1 = g_power_identity(E1.maps, c1.size()), id2 = g_power_identity(E2.maps, c2.size());
    const std::size_t n1 = E1.maps.size(), n2 = E2.maps.size();
    Vec rhs(id1);
    rhs.insert(rhs.end(), id2.begin(), id2.end());
    std::vector<Vec> fixed_cols;
    for (auto& b : E1.boundaries) {
        Vec c(b);
        c.resize(n1 + n2, 0);
        fixed_cols.push_back(std::move(c));
    }
    for (auto& b : E2.boundaries) {
        Vec c(n1, 0);
        c.insert(c.end(), b.begin(), b.end());
        fixed_cols.push_back(std::move(c));
    }
    const std::size_t dF = HF.reps.size();
    // f runs over representatives up to a nonzero scalar (f = 0 included)
    std::vector<std::uint64_t> lam(dF, 0);
    auto try_f = [&](const std::vector<std::uint64_t>& coeffs) {
        Vec f(HF.maps.size(), 0);
        for (std::size_t i = 0; i < dF; ++i)
            for (std::size_t j = 0; j < f.size(); ++j) f[j] = F.add(f[j], F.mul(coeffs[i], HF.reps[i][j]));
        std::vector<Vec> cols = fixed_cols;
        for (auto& w : HG.reps) {
            Vec c = compose(HF.maps, f, HG.maps, w, E1.maps, F);
            Vec c2v = compose(HG.maps, w, HF.maps, f, E2.maps, F);
            c.insert(c.end(), c2v.begin(), c2v.end());
            cols.push_back(std::move(c));
        }
        return linalg::solvable(cols, rhs, F);
    };
    if (try_f(lam)) return true;
    for (std::size_t lead = 0; lead < dF; ++lead) {
        // coefficients before lead are 0, lead is 1, the rest run over F_p
        std::vector<std::uint64_t> c(dF, 0);
        c[lead] = 1;
        for (;;) {
            if (try_f(c)) return true;
            std::size_t k = lead + 1;
            while (k < dF && ++c[k] == F.p) c[k++] = 0;
            if (k >= dF) break;
        }
    }
    return false;
}

// Region by brute force. The search window comes from the s and torsion bounds,
// widened by `margin`; margin points must agree with those bounds.
inline Region lambda_region_brute(const FreeComplex& c1, const FreeComplex& c2, const OracleCaps& caps = {},
                                  long long margin = 2) {
    auto d1 = decompose(c1), d2 = decompose(c2);
    long long s12 = (d1.pawn.s - d2.pawn.s) / 2;
    long long kF = std::max(knot_umax(d1), knot_umax(d2));
    Region outer = Region::quadrant(s12, -s12);
    Region high = intersect(Region::half_plane(kF), outer);
    std::vector<Point> pts;
    for (long long n = 0; n < kF + margin; ++n)
        for (long long q1 = s12 - margin; q1 <= n + s12 + margin; ++q1) {
            long long q2 = n - q1;
            bool in = brute_member(c1, c2, q1, q2, caps);
            if (in && !outer.member(q1, q2))
                throw Error("OracleBoundViolation", "member outside the s-bound quadrant");
            if (!in && high.member(q1, q2)) throw Error("OracleBoundViolation", "non-member above the torsion bound");
            if (in) pts.push_back({q1, q2});
        }
    return region_union(Region(std::nullopt, pts), high);
}

// Dimension of homotopy classes of maps C1 -> C2 in q-degree qdeg over F_p.
inline std::size_t brute_hom_dimension(const FreeComplex& c1, const FreeComplex& c2, int qdeg, std::size_t cap = 64) {
    oracle::ModP F{c1.ring().p};
    return oracle::hom_space(oracle::to_mod(c1, F.p), oracle::to_mod(c2, F.p), qdeg, F, cap).reps.size();
}

} // namespace gordian
