#pragma once
// The quiver algebra B on vertices o (Circ) and * (Bullet).
// Paths compose right to left: a*b means "first b, then a".

#include "gordian/gring.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gordian {

enum class Vertex { Circ, Bullet };

inline Vertex other(Vertex v) { return v == Vertex::Circ ? Vertex::Bullet : Vertex::Circ; }
inline std::string vertex_name(Vertex v) { return v == Vertex::Circ ? "o" : "*"; }

struct BPath {
    enum class Shape { Idem, DPower, SWord };
    Vertex src = Vertex::Circ;
    Vertex tgt = Vertex::Circ;
    Shape shape = Shape::Idem;
    int n = 0; // power of D or length of the S-word

    static BPath idem(Vertex x) { return {x, x, Shape::Idem, 0}; }
    static BPath dpow(Vertex x, int k) { return {x, x, Shape::DPower, k}; }
    static BPath sword(Vertex src, int len) { return {src, len % 2 ? other(src) : src, Shape::SWord, len}; }

    int qdeg() const {
        switch (shape) {
        case Shape::Idem: return 0;
        case Shape::DPower: return -2 * n;
        default: return -n;
        }
    }
    auto operator<=>(const BPath&) const = default;

    std::string to_string() const {
        std::string x = vertex_name(src);
        switch (shape) {
        case Shape::Idem: return "i" + x;
        case Shape::DPower: return "D" + x + (n > 1 ? "^" + std::to_string(n) : "");
        default: return "S" + std::to_string(n) + "[" + x + "]";
        }
    }
};

// a*b on basis paths
inline std::optional<BPath> path_mul(const BPath& a, const BPath& b) {
    using S = BPath::Shape;
    if (b.tgt != a.src) return std::nullopt;
    if (a.shape == S::Idem) return b;
    if (b.shape == S::Idem) return a;
    if (a.shape == S::DPower && b.shape == S::DPower) return BPath::dpow(a.src, a.n + b.n);
    if (a.shape == S::SWord && b.shape == S::SWord) return BPath::sword(b.src, a.n + b.n);
    return std::nullopt; // D after S or S after D
}

struct BElement {
    std::map<BPath, BigInt> terms;

    BElement() = default;
    BElement(const BPath& p, BigInt c = 1) { add(p, std::move(c)); }

    void add(const BPath& p, const BigInt& c) {
        if (c == 0) return;
        auto& v = terms[p];
        v += c;
        if (v == 0) terms.erase(p);
    }
    bool is_zero() const { return terms.empty(); }
    bool operator==(const BElement&) const = default;

    friend BElement operator+(BElement a, const BElement& b) {
        for (auto& [p, c] : b.terms) a.add(p, c);
        return a;
    }
    friend BElement operator-(BElement a, const BElement& b) {
        for (auto& [p, c] : b.terms) a.add(p, -c);
        return a;
    }
    friend BElement operator*(const BElement& a, const BElement& b) {
        BElement r;
        for (auto& [pa, ca] : a.terms)
            for (auto& [pb, cb] : b.terms)
                if (auto p = path_mul(pa, pb)) r.add(*p, ca * cb);
        return r;
    }
    friend BElement operator*(const BigInt& k, BElement a) {
        BElement r;
        for (auto& [p, c] : a.terms) r.add(p, k * c);
        return r;
    }

    // q-degree and endpoints when homogeneous
    bool homogeneous() const {
        if (terms.empty()) return true;
        auto& f = terms.begin()->first;
        for (auto& [p, c] : terms)
            if (p.qdeg() != f.qdeg() || p.src != f.src || p.tgt != f.tgt) return false;
        return true;
    }
    int qdeg() const { return terms.empty() ? 0 : terms.begin()->first.qdeg(); }

    std::string to_string() const {
        if (terms.empty()) return "0";
        std::string s;
        for (auto& [p, c] : terms) {
            if (!s.empty()) s += c < 0 ? " - " : " + ";
            else if (c < 0) s += "-";
            BigInt a = abs(c);
            if (a != 1) s += a.str() + "*";
            s += p.to_string();
        }
        return s;
    }
};

inline BElement b_mul(const BElement& a, const BElement& b) { return a * b; }

enum class CenterName { Dcirc, Dbullet, S, G };

inline BElement center_element(CenterName name) {
    using V = Vertex;
    switch (name) {
    case CenterName::Dcirc: return BElement(BPath::dpow(V::Circ, 1));
    case CenterName::Dbullet: return BElement(BPath::dpow(V::Bullet, 1));
    case CenterName::S: return BElement(BPath::sword(V::Circ, 1)) + BElement(BPath::sword(V::Bullet, 1));
    default: {
        BElement s2 = BElement(BPath::sword(V::Circ, 2)) + BElement(BPath::sword(V::Bullet, 2));
        BElement d = BElement(BPath::dpow(V::Circ, 1)) + BElement(BPath::dpow(V::Bullet, 1));
        return s2 - d;
    }
    }
}

inline BElement unit_element() { return BElement(BPath::idem(Vertex::Circ)) + BElement(BPath::idem(Vertex::Bullet)); }

// Free Z[G]-basis of the paths from x to y.
inline std::vector<BPath> hom_module_basis(Vertex x, Vertex y) {
    if (x == y) return {BPath::idem(x), BPath::dpow(x, 1)};
    return {BPath::sword(x, 1)};
}

inline std::vector<int> hom_module_qdegs(Vertex x, Vertex y) {
    std::vector<int> q;
    for (auto& p : hom_module_basis(x, y)) q.push_back(p.qdeg());
    return q;
}

// Coordinates of a homogeneous element of (paths x -> y) in hom_module_basis(x, y).
inline std::vector<Monomial> to_basis(const BElement& e, Vertex x, Vertex y) {
    if (!e.homogeneous()) throw Error("NotHomogeneous", e.to_string());
    const RingTag Z = RingTag::Z();
    auto basis = hom_module_basis(x, y);
    std::vector<BigInt> coef(basis.size(), 0);
    std::vector<int> gexp(basis.size(), -1);
    auto put = [&](std::size_t i, const BigInt& c, int k) {
        if (gexp[i] >= 0 && gexp[i] != k) throw Error("NotHomogeneous", e.to_string());
        gexp[i] = k;
        coef[i] += c;
    };
    using S = BPath::Shape;
    for (auto& [p, c] : e.terms) {
        if (p.src != x || p.tgt != y) throw Error("NotHomogeneous", "path " + p.to_string() + " has wrong endpoints");
        if (x != y) {
            put(0, c, (p.n - 1) / 2); // S-word of odd length 2j+1 is G^j S_x
            continue;
        }
        if (p.shape == S::Idem) put(0, c, 0);
        else if (p.shape == S::DPower) put(1, (p.n % 2 ? c : BigInt(-c)), p.n - 1); // D^j = (-1)^(j-1) G^(j-1) D
        else {
            int j = p.n / 2; // S-word of length 2j is G^j + G^(j-1) D
            put(0, c, j);
            put(1, c, j - 1);
        }
    }
    std::vector<Monomial> out;
    for (std::size_t i = 0; i < basis.size(); ++i)
        out.push_back(Monomial(Scalar(Z, BigRat(coef[i])), coef[i] == 0 ? 0 : gexp[i]));
    return out;
}

// Expand basis path b times G^k back into B.
inline BElement from_basis(const BPath& b, int k) {
    BElement g = center_element(CenterName::G), r(b);
    for (int i = 0; i < k; ++i) r = g * r;
    return r;
}

using MonomialMatrix = std::vector<std::vector<Monomial>>; // [row = target basis][col = source basis]

// f -> e*f as a map (paths x->y) -> (paths x->z), e a path element y -> z.
inline MonomialMatrix left_mul_matrix(const BElement& e, Vertex x, Vertex y, Vertex z) {
    if (!e.homogeneous()) throw Error("NotHomogeneous", e.to_string());
    auto src = hom_module_basis(x, y);
    std::size_t rows = hom_module_basis(x, z).size();
    MonomialMatrix m(rows, std::vector<Monomial>(src.size(), Monomial::zero(RingTag::Z())));
    for (std::size_t j = 0; j < src.size(); ++j) {
        auto col = to_basis(e * BElement(src[j]), x, z);
        for (std::size_t i = 0; i < rows; ++i) m[i][j] = col[i];
    }
    return m;
}

// f -> f*e as a map (paths x->y) -> (paths w->y), e a path element w -> x.
inline MonomialMatrix right_mul_matrix(const BElement& e, Vertex w, Vertex x, Vertex y) {
    if (!e.homogeneous()) throw Error("NotHomogeneous", e.to_string());
    auto src = hom_module_basis(x, y);
    std::size_t rows = hom_module_basis(w, y).size();
    MonomialMatrix m(rows, std::vector<Monomial>(src.size(), Monomial::zero(RingTag::Z())));
    for (std::size_t j = 0; j < src.size(); ++j) {
        auto col = to_basis(BElement(src[j]) * e, w, y);
        for (std::size_t i = 0; i < rows; ++i) m[i][j] = col[i];
    }
    return m;
}

} // namespace gordian
