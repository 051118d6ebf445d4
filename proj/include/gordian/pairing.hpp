#pragma once
// Internal hom of zigzag complexes over B, and 0-closures of rational tangles.

#include "gordian/complex.hpp"
#include "gordian/rational.hpp"

#include <string>

namespace gordian {

// Mor(X, Y) over Z[G]. Generators are (object of X, object of Y, basis path).
inline FreeComplex mor_complex(const ZigzagComplex& X, const ZigzagComplex& Y) {
    if (!X.graded() || !Y.graded()) throw Error("Ungraded", "mor_complex needs graded complexes");
    const RingTag Z = RingTag::Z();
    FreeComplex c(Z);
    // first generator index of the block (i, j)
    std::vector<std::vector<std::size_t>> block(X.objects.size(), std::vector<std::size_t>(Y.objects.size()));
    for (std::size_t i = 0; i < X.objects.size(); ++i)
        for (std::size_t j = 0; j < Y.objects.size(); ++j) {
            auto &x = X.objects[i], &y = Y.objects[j];
            auto basis = hom_module_basis(x.v, y.v);
            block[i][j] = c.size();
            for (auto& b : basis)
                c.add_generator(std::to_string(i) + ":" + std::to_string(j) + ":" + b.to_string(), *y.t - *x.t,
                                *y.q - *x.q + b.qdeg());
        }
    auto add_matrix = [&](std::size_t src_block, std::size_t tgt_block, const MonomialMatrix& m, int sign) {
        for (std::size_t r = 0; r < m.size(); ++r)
            for (std::size_t col = 0; col < m[r].size(); ++col) {
                const Monomial& e = m[r][col];
                if (e.is_zero()) continue;
                c.add_to_entry(src_block + col, tgt_block + r, sign > 0 ? e : -e);
            }
    };
    for (std::size_t i = 0; i < X.objects.size(); ++i)
        for (std::size_t j = 0; j < Y.objects.size(); ++j) {
            Vertex vx = X.objects[i].v, vy = Y.objects[j].v;
            int k = *Y.objects[j].t - *X.objects[i].t;
            // post-compose with arrows of Y leaving j
            for (auto& a : Y.arrows) {
                if (a.from != j) continue;
                auto m = left_mul_matrix(label_element(a.label), vx, vy, Y.objects[a.to].v);
                add_matrix(block[i][j], block[i][a.to], m, 1);
            }
            // pre-compose with arrows of X entering i, sign (-1)^(k+1)
            int sign = (k + 1) % 2 == 0 ? 1 : -1;
            for (auto& a : X.arrows) {
                if (a.to != i) continue;
                auto m = right_mul_matrix(label_element(a.label), X.objects[a.from].v, vx, vy);
                add_matrix(block[i][j], block[a.from][j], m, sign);
            }
        }
    c.validate();
    return c;
}

inline ZigzagComplex single_object(Vertex v, int t = 0, int q = 0) {
    ZigzagComplex z;
    z.objects.push_back({v, t, q});
    return z;
}

// Reduced Bar-Natan complex of the 0-closure Q_{p/q}(0) over Z[G], reduced by elimination.
inline FreeComplex zero_closure(const ZigzagComplex& z, const Slope& s) {
    if (connectivity(s) != Connectivity::X)
        throw Error("NotAKnotClosure", "0-closure of " + s.to_string() + " is a link");
    return gaussian_eliminate(shift(mor_complex(single_object(Vertex::Bullet), z), 0, 1));
}

inline FreeComplex zero_closure(const Slope& s) { return zero_closure(graded_zz(s), s); }

} // namespace gordian
