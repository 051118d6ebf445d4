#pragma once
// Pawn/knight decompositions, torsion profiles and torus-knot complexes.

#include "gordian/complex.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace gordian {

struct Pawn {
    int s = 0;
    bool operator==(const Pawn&) const = default;
};

struct Knight {
    int k = 1;  // G-power
    int i = 0;  // homological degree of the source
    int q0 = 0; // quantum degree of the source
    auto operator<=>(const Knight&) const = default;
};

struct Decomposition {
    Pawn pawn;
    std::vector<Knight> knights; // kept sorted
    RingTag ring;
    bool operator==(const Decomposition&) const = default;
};

struct TorsionProfile {
    std::map<int, int> u; // homological degree -> max torsion order, only nonzero entries
    int umax = 0;
    int at(int i) const {
        auto it = u.find(i);
        return it == u.end() ? 0 : it->second;
    }
};

inline Decomposition decompose(const FreeComplex& input) {
    FreeComplex c = gaussian_eliminate(input);
    const std::size_t n = c.size();
    const RingTag r = c.ring();
    std::vector<std::map<std::size_t, Monomial>> out(n), in(n);
    for (std::size_t a = 0; a < n; ++a)
        for (auto& [b, m] : c.out(a)) {
            out[a][b] = m;
            in[b][a] = m;
        }
    std::vector<bool> alive(n, true);
    auto order = c.sorted_indices();
    std::vector<std::size_t> rank_of(n);
    for (std::size_t i = 0; i < n; ++i) rank_of[order[i]] = i;

    auto put = [&](std::size_t a, std::size_t b, const Monomial& m) {
        if (m.is_zero()) {
            out[a].erase(b);
            in[b].erase(a);
        } else {
            out[a][b] = m;
            in[b][a] = m;
        }
    };
    auto add = [&](std::size_t a, std::size_t b, const Monomial& m) {
        if (m.is_zero()) return;
        auto it = out[a].find(b);
        if (it == out[a].end()) {
            put(a, b, m);
            return;
        }
        if (it->second.gexp != m.gexp) throw Error("InternalError", "inhomogeneous update in decompose");
        put(a, b, Monomial(it->second.coeff + m.coeff, m.gexp));
    };

    // target change b <- b + mu d2, which turns the entry a->d2 into v - c*mu
    auto row_op = [&](std::size_t b, std::size_t d2, const Monomial& mu) {
        for (auto& [x, gamma] : std::map(in[b])) add(x, d2, -(gamma * mu));
        for (auto& [y, m] : std::map(out[d2])) add(b, y, mu * m);
    };
    // source change a2 <- a2 - lambda a
    auto col_op = [&](std::size_t a, std::size_t a2, const Monomial& lambda) {
        for (auto& [y, m] : std::map(out[a])) add(a2, y, -(lambda * m));
        for (auto& [x, alpha] : std::map(in[a2])) add(x, a, alpha * lambda);
    };
    auto quotient = [&](const Monomial& v, const Monomial& piv) {
        Scalar q = r.is_field() ? v.coeff * piv.coeff.inverse()
                                : Scalar(r, BigRat(BigInt(numerator(v.coeff.value()) / numerator(piv.coeff.value()))));
        return Monomial(q, q.is_zero() ? 0 : v.gexp - piv.gexp);
    };

    Decomposition d;
    d.ring = r;
    for (std::size_t steps = 0;; ++steps) {
        if (steps > 100000) throw Error("NotSplit", "Euclid reduction did not terminate");
        std::vector<std::tuple<int, BigInt, std::size_t, std::size_t>> entries;
        for (std::size_t a = 0; a < n; ++a)
            for (auto& [b, m] : out[a]) entries.emplace_back(m.gexp, abs(numerator(m.coeff.value())), rank_of[a], rank_of[b]);
        if (entries.empty()) break;
        std::sort(entries.begin(), entries.end());
        auto clearable = [&](std::size_t a, std::size_t b, int k) {
            for (auto& [x, m] : out[a])
                if (m.gexp < k) return false;
            for (auto& [x, m] : in[b])
                if (m.gexp < k) return false;
            return true;
        };
        std::size_t pa = n, pb = n, ca = n, cb = n;
        for (auto& [k, size, ra, rb] : entries) {
            std::size_t a = order[ra], b = order[rb];
            if (!clearable(a, b, k)) continue;
            if (ca == n) ca = a, cb = b;
            if (out[a][b].coeff.is_unit()) {
                pa = a;
                pb = b;
                break;
            }
        }
        if (pa == n) {
            // over Z: shrink the smallest clearable entry by Euclid steps along its row and column
            if (ca == n) throw Error("NotSplit", "no unit pivot with clearable row and column");
            const Monomial c = out[ca][cb];
            bool moved = false;
            for (auto [d2, v] : std::map(out[ca])) {
                Monomial mu = quotient(v, c);
                if (d2 == cb || mu.is_zero()) continue;
                if (!(v.coeff - mu.coeff * c.coeff).is_zero()) {
                    row_op(cb, d2, mu);
                    moved = true;
                    break;
                }
            }
            if (!moved)
                for (auto [a2, w] : std::map(in[cb])) {
                    Monomial lambda = quotient(w, c);
                    if (a2 == ca || lambda.is_zero()) continue;
                    if (!(w.coeff - lambda.coeff * c.coeff).is_zero()) {
                        col_op(ca, a2, lambda);
                        moved = true;
                        break;
                    }
                }
            if (!moved) throw Error("NotSplit", "entry " + c.to_string() + " divides its row and column but is not a unit");
            continue;
        }
        const Monomial piv = out[pa][pb];
        for (auto [a2, w] : std::map(in[pb]))
            if (a2 != pa) col_op(pa, a2, quotient(w, piv));
        for (auto [d2, v] : std::map(out[pa]))
            if (d2 != pb) row_op(pb, d2, quotient(v, piv));
        if (out[pa].size() != 1 || in[pb].size() != 1 || !in[pa].empty() || !out[pb].empty())
            throw Error("NotSplit", "pivot did not split off");
        if (piv.gexp > 0) d.knights.push_back({piv.gexp, c.gen(pa).t, c.gen(pa).q}); // gexp 0 is contractible
        put(pa, pb, Monomial::zero(r));
        alive[pa] = alive[pb] = false;
    }
    std::vector<std::size_t> free;
    for (std::size_t a = 0; a < n; ++a)
        if (alive[a]) free.push_back(a);
    if (free.size() > 1) throw Error("MultiplePawns", std::to_string(free.size()) + " free generators");
    if (free.empty() || c.gen(free[0]).t != 0) throw Error("NoPawn", "no free generator in degree 0");
    d.pawn.s = c.gen(free[0]).q;
    std::sort(d.knights.begin(), d.knights.end());
    return d;
}

inline FreeComplex reassemble(const Decomposition& d) {
    FreeComplex c(d.ring);
    c.add_generator("pawn", 0, d.pawn.s);
    for (std::size_t j = 0; j < d.knights.size(); ++j) {
        auto& kn = d.knights[j];
        auto a = c.add_generator("k" + std::to_string(j) + "a", kn.i, kn.q0);
        auto b = c.add_generator("k" + std::to_string(j) + "b", kn.i + 1, kn.q0 + 2 * kn.k);
        c.set_entry(a, b, Monomial::unit(d.ring, kn.k));
    }
    return c;
}

inline TorsionProfile torsion_profile(const Decomposition& d) {
    TorsionProfile p;
    for (auto& kn : d.knights) {
        int& v = p.u[kn.i + 1];
        v = std::max(v, kn.k);
        p.umax = std::max(p.umax, kn.k);
    }
    return p;
}

inline Decomposition torus_decomposition_2(int m, RingTag r) {
    if (m < 0) throw Error("BadParams", "m must be >= 0");
    Decomposition d{{2 * m}, {}, r};
    for (int k = 0; k < m; ++k) d.knights.push_back({1, 2 * k + 2, 2 * m + 4 * k + 4});
    std::sort(d.knights.begin(), d.knights.end());
    return d;
}

inline Decomposition torus_decomposition_3(int n, int i, RingTag r, bool conjectural) {
    if (n < 1 || (i != 1 && i != 2)) throw Error("BadParams", "need n >= 1 and i in {1,2}");
    bool proven = r == RingTag::Q() || r == RingTag::F(2);
    if (!proven && !conjectural)
        throw Error("ConjecturalRing", "3-strand closed form over " + r.name() + " is conjectural; pass the flag");
    Decomposition d{{6 * n + 2 * (i - 1)}, {}, r};
    for (int k = 0; k <= n + i - 2; ++k) d.knights.push_back({1, 4 * k + 2, 6 * (n + k) + 2 * i + 2});
    for (int h = 0; h <= n - 1; ++h) d.knights.push_back({2, 4 * h + 4, 6 * (n + h) + 2 * i + 4});
    std::sort(d.knights.begin(), d.knights.end());
    return d;
}

// strands 2: a = m; strands 3: a = n, b = i
inline FreeComplex torus_complex(int strands, int a, int b, RingTag r, bool conjectural = false) {
    if (strands == 2) return reassemble(torus_decomposition_2(a, r));
    if (strands == 3) return reassemble(torus_decomposition_3(a, b, r, conjectural));
    throw Error("BadParams", "only 2- and 3-strand torus knots have closed forms");
}

// T(p, q) for the families with closed forms (either order, positive parameters)
inline FreeComplex torus_knot(int p, int q, RingTag r, bool conjectural = false) {
    if (p > q) std::swap(p, q);
    if (p <= 0) throw Error("BadParams", "torus parameters must be positive");
    if (p == 1) return torus_complex(2, 0, 0, r);
    if (p == 2) {
        if (q % 2 == 0) throw Error("BadParams", "T(2,even) is a link");
        return torus_complex(2, (q - 1) / 2, 0, r);
    }
    if (p == 3) {
        if (q % 3 == 0) throw Error("BadParams", "T(3,3n) is a link");
        if (q == 2) return torus_complex(2, 1, 0, r);
        return torus_complex(3, q / 3, q % 3, r, conjectural);
    }
    throw Error("BadParams", "no closed form for T(" + std::to_string(p) + "," + std::to_string(q) + "); import a complex file");
}

inline Decomposition dualize(const Decomposition& d) {
    Decomposition r{{-d.pawn.s}, {}, d.ring};
    for (auto& kn : d.knights) r.knights.push_back({kn.k, -kn.i - 1, -kn.q0 - 2 * kn.k});
    std::sort(r.knights.begin(), r.knights.end());
    return r;
}

} // namespace gordian
