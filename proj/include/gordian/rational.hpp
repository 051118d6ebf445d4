#pragma once
// Rational tangles: slopes, connectivity, the zigzag complexes zz(p/q),
// two-bridge signatures and absolute gradings for odd/odd slopes.

#include "gordian/quiver.hpp"

#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace gordian {

struct Slope {
    long long p = 1;
    long long q = 1;

    Slope() = default;
    Slope(long long p_, long long q_) : p(p_), q(q_) {
        if (q < 0) {
            p = -p;
            q = -q;
        }
        if (q == 0) {
            if (p == 0) throw Error("InvalidSlope", "0/0");
            p = 1;
        }
        if (std::gcd(p < 0 ? -p : p, q) != 1) throw Error("InvalidSlope", "slope not reduced");
    }
    static Slope parse(const std::string& s) {
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return Slope(std::stoll(s), 1);
            return Slope(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
        } catch (const std::logic_error&) {
            throw Error("InvalidSlope", "cannot parse slope '" + s + "'");
        }
    }
    bool odd_odd() const { return (p % 2 != 0) && (q % 2 != 0); }
    bool operator==(const Slope&) const = default;
    std::string to_string() const { return std::to_string(p) + "/" + std::to_string(q); }
};

enum class Connectivity { NI, X, NO };

inline Connectivity connectivity(const Slope& s) {
    if (s.p % 2 == 0) return Connectivity::NO;
    if (s.q % 2 == 0) return Connectivity::NI;
    return Connectivity::X;
}

inline std::string connectivity_name(Connectivity c) {
    return c == Connectivity::X ? "X" : c == Connectivity::NO ? "NO" : "NI";
}

enum class Label { Scirc, Sbul, ScircSbul, SbulScirc, Dcirc, Dbul };
enum class Parity { Odd, Even };

inline BElement label_element(Label l) {
    using V = Vertex;
    switch (l) {
    case Label::Scirc: return BElement(BPath::sword(V::Circ, 1));
    case Label::Sbul: return BElement(BPath::sword(V::Bullet, 1));
    case Label::ScircSbul: return BElement(BPath::sword(V::Bullet, 2));
    case Label::SbulScirc: return BElement(BPath::sword(V::Circ, 2));
    case Label::Dcirc: return BElement(BPath::dpow(V::Circ, 1));
    default: return BElement(BPath::dpow(V::Bullet, 1));
    }
}

inline std::string label_name(Label l) {
    static const char* n[] = {"So", "S*", "SoS*", "S*So", "Do", "D*"};
    return n[static_cast<int>(l)];
}

inline Parity label_parity(Label l) { return (l == Label::Dcirc || l == Label::Dbul) ? Parity::Even : Parity::Odd; }

struct ZObject {
    Vertex v;
    std::optional<int> t;
    std::optional<int> q;
};

struct ZArrow {
    std::size_t from;
    std::size_t to;
    Label label;
    Parity parity;
};

// Arrow i joins objects i and i+1, in either direction.
struct ZigzagComplex {
    std::vector<ZObject> objects;
    std::vector<ZArrow> arrows;

    bool graded() const {
        for (auto& o : objects)
            if (!o.t || !o.q) return false;
        return true;
    }
    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < objects.size(); ++i) {
            s += vertex_name(objects[i].v);
            if (objects[i].t) s += "(" + std::to_string(*objects[i].t) + "," + std::to_string(*objects[i].q) + ")";
            if (i < arrows.size()) {
                auto& a = arrows[i];
                s += a.from == i ? " -" + label_name(a.label) + "-> " : " <-" + label_name(a.label) + "- ";
            }
        }
        return s;
    }
};

namespace detail {

struct Shape {
    std::vector<Vertex> v;
    std::vector<bool> fwd; // arrow i points from i to i+1
    std::vector<Parity> par;
};

inline void assign_parity(Shape& z) {
    std::size_t n = z.fwd.size();
    std::optional<std::size_t> anchor;
    for (std::size_t i = 0; i < n && !anchor; ++i) {
        Vertex a = z.fwd[i] ? z.v[i] : z.v[i + 1], b = z.fwd[i] ? z.v[i + 1] : z.v[i];
        if (a == Vertex::Circ && b == Vertex::Bullet) anchor = i;
    }
    if (!anchor) throw Error("InternalError", "zigzag without an So arrow");
    z.par.assign(n, Parity::Odd);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t d = i > *anchor ? i - *anchor : *anchor - i;
        z.par[i] = d % 2 ? Parity::Even : Parity::Odd;
    }
    for (std::size_t i = 0; i < n; ++i) {
        Vertex a = z.fwd[i] ? z.v[i] : z.v[i + 1], b = z.fwd[i] ? z.v[i + 1] : z.v[i];
        if (a == Vertex::Circ && b == Vertex::Bullet && z.par[i] != Parity::Odd)
            throw Error("InternalError", "So arrow with even parity");
    }
}

inline Shape invert(const Shape& z) {
    Shape r;
    for (auto v : z.v) r.v.push_back(other(v));
    for (bool f : z.fwd) r.fwd.push_back(!f);
    assign_parity(r);
    return r;
}

// r -> r+1, arrow by arrow
inline Shape plus_one(const Shape& z) {
    const std::size_t last = z.v.size() - 1;
    Shape r;
    for (std::size_t i = 0; i < z.fwd.size(); ++i) {
        std::size_t A = z.fwd[i] ? i : i + 1, B = z.fwd[i] ? i + 1 : i;
        Vertex va = z.v[A], vb = z.v[B];
        bool a_end = A == 0 || A == last, b_end = B == 0 || B == last;
        // chain from A towards B (and possibly past B); cf[j]: arrow chain[j] -> chain[j+1]
        std::vector<Vertex> cv;
        std::vector<bool> cf;
        using V = Vertex;
        if (va == V::Bullet && vb == V::Bullet && z.par[i] == Parity::Odd) {
            cv = {V::Bullet, V::Circ, V::Circ, V::Bullet};
            cf = {false, true, true};
        } else if (va == V::Bullet && vb == V::Bullet) {
            if (a_end && !b_end) throw Error("InternalError", "even arrow leaving a bullet end");
            if (b_end && !a_end) {
                cv = {V::Bullet, V::Bullet, V::Circ};
                cf = {true, false};
            } else {
                cv = {V::Bullet, V::Bullet};
                cf = {true};
            }
        } else if (va == V::Circ && vb == V::Bullet) {
            cv = {V::Circ, V::Circ, V::Bullet};
            cf = {true, true};
        } else if (va == V::Circ && vb == V::Circ) {
            cv = {V::Circ, V::Circ};
            cf = {true};
        } else {
            throw Error("InternalError", "bullet-to-circle arrow in zz(r), r > 0");
        }
        if (!z.fwd[i]) {
            std::reverse(cv.begin(), cv.end());
            std::reverse(cf.begin(), cf.end());
            for (std::size_t j = 0; j < cf.size(); ++j) cf[j] = !cf[j];
        }
        std::size_t start = r.v.empty() ? 0 : 1;
        for (std::size_t j = start; j < cv.size(); ++j) r.v.push_back(cv[j]);
        for (bool f : cf) r.fwd.push_back(f);
    }
    assign_parity(r);
    return r;
}

inline Label label_for(Vertex a, Vertex b, Parity p) {
    using V = Vertex;
    if (a == V::Circ && b == V::Bullet) return Label::Scirc;
    if (a == V::Bullet && b == V::Circ) return Label::Sbul;
    if (a == V::Circ) return p == Parity::Odd ? Label::SbulScirc : Label::Dcirc;
    return p == Parity::Odd ? Label::ScircSbul : Label::Dbul;
}

inline ZigzagComplex to_zigzag(const Shape& s) {
    ZigzagComplex z;
    for (auto v : s.v) z.objects.push_back({v, std::nullopt, std::nullopt});
    for (std::size_t i = 0; i < s.fwd.size(); ++i) {
        std::size_t a = s.fwd[i] ? i : i + 1, b = s.fwd[i] ? i + 1 : i;
        z.arrows.push_back({a, b, label_for(s.v[a], s.v[b], s.par[i]), s.par[i]});
    }
    return z;
}

} // namespace detail

// zz(p/q) for p/q > 0
inline ZigzagComplex zz(const Slope& s) {
    if (s.p <= 0 || s.q <= 0) throw Error("InvalidSlope", "zz needs p/q > 0, got " + s.to_string());
    long long p = s.p, q = s.q;
    std::vector<bool> plus; // moves from p/q down to 1
    while (!(p == 1 && q == 1)) {
        if (p > q) {
            p -= q;
            plus.push_back(true);
        } else {
            std::swap(p, q);
            plus.push_back(false);
        }
    }
    detail::Shape z{{Vertex::Circ, Vertex::Bullet}, {true}, {}};
    detail::assign_parity(z);
    for (auto it = plus.rbegin(); it != plus.rend(); ++it) z = *it ? detail::plus_one(z) : detail::invert(z);
    return detail::to_zigzag(z);
}

// Checks the structural invariants; requires at least one So arrow unless allow_dual.
inline void validate_zigzag(const ZigzagComplex& z, bool allow_dual = false) {
    if (z.arrows.size() + 1 != z.objects.size() && !(z.objects.empty() && z.arrows.empty()))
        throw Error("BadZigzag", "arrow count");
    bool has_s = false;
    for (std::size_t i = 0; i < z.arrows.size(); ++i) {
        auto& a = z.arrows[i];
        if (!((a.from == i && a.to == i + 1) || (a.from == i + 1 && a.to == i)))
            throw Error("BadZigzag", "arrow does not join consecutive objects");
        if (label_parity(a.label) != a.parity) throw Error("BadZigzag", "label parity");
        if (i > 0 && z.arrows[i - 1].parity == a.parity) throw Error("BadZigzag", "parities do not alternate");
        auto e = label_element(a.label);
        auto& path = e.terms.begin()->first;
        if (path.src != z.objects[a.from].v || path.tgt != z.objects[a.to].v) throw Error("BadZigzag", "label endpoints");
        if (a.label == Label::Scirc || (allow_dual && a.label == Label::Sbul)) has_s = true;
        if (z.graded()) {
            auto &f = z.objects[a.from], &t = z.objects[a.to];
            if (*t.t != *f.t + 1 || *t.q != *f.q - e.qdeg()) throw Error("BadZigzag", "arrow not of bidegree (1,0)");
        }
    }
    if (!z.arrows.empty() && !has_s) throw Error("BadZigzag", "no S arrow");
    // every maximal run of same-direction arrows carries exactly one single S
    std::size_t i = 0;
    while (i < z.arrows.size()) {
        std::size_t j = i;
        bool dir = z.arrows[i].from == i;
        int count = 0;
        while (j < z.arrows.size() && (z.arrows[j].from == j) == dir) {
            auto l = z.arrows[j].label;
            if (l == Label::Scirc || l == Label::Sbul) ++count;
            ++j;
        }
        if (count != 1) throw Error("BadZigzag", "segment without exactly one S");
        i = j;
    }
}

inline long long two_bridge_signature(const Slope& s) {
    if (!s.odd_odd()) throw Error("BadParity", s.to_string());
    if (s.p < 0) return -two_bridge_signature(Slope(-s.p, s.q));
    long long sigma = 0;
    for (long long i = 1; i < s.p; ++i) {
        long long f = (i * s.q) / s.p; // both positive
        sigma += f % 2 ? -1 : 1;
    }
    return sigma;
}

// s of the 0-closure over every field
inline long long two_bridge_s(const Slope& s) { return -two_bridge_signature(s); }

// Fills in gradings from object `anchor` placed at (t, q).
inline void propagate_grading(ZigzagComplex& z, std::size_t anchor, int t, int q) {
    for (auto& o : z.objects) o.t = o.q = std::nullopt;
    z.objects[anchor].t = t;
    z.objects[anchor].q = q;
    for (std::size_t i = anchor; i + 1 < z.objects.size(); ++i) {
        auto& a = z.arrows[i];
        int d = label_element(a.label).qdeg();
        int sign = a.from == i ? 1 : -1;
        z.objects[i + 1].t = *z.objects[i].t + sign;
        z.objects[i + 1].q = *z.objects[i].q - sign * d;
    }
    for (std::size_t i = anchor; i > 0; --i) {
        auto& a = z.arrows[i - 1];
        int d = label_element(a.label).qdeg();
        int sign = a.from == i - 1 ? 1 : -1;
        z.objects[i - 1].t = *z.objects[i].t - sign;
        z.objects[i - 1].q = *z.objects[i].q + sign * d;
    }
}

inline ZigzagComplex dualize_zigzag(const ZigzagComplex& z) {
    ZigzagComplex r = z;
    for (auto& o : r.objects) {
        if (o.t) o.t = -*o.t;
        if (o.q) o.q = -*o.q;
    }
    for (auto& a : r.arrows) {
        std::swap(a.from, a.to);
        if (a.label == Label::Scirc) a.label = Label::Sbul;
        else if (a.label == Label::Sbul) a.label = Label::Scirc;
    }
    return r;
}

inline std::size_t bullet_end(const ZigzagComplex& z) {
    if (z.objects.back().v == Vertex::Bullet) return z.objects.size() - 1;
    if (z.objects.front().v == Vertex::Bullet) return 0;
    throw Error("InternalError", "no bullet end");
}

inline ZigzagComplex graded_zz(const Slope& s) {
    if (!s.odd_odd()) throw Error("BadParity", s.to_string());
    if (s.p < 0) return dualize_zigzag(graded_zz(Slope(-s.p, s.q)));
    ZigzagComplex z = zz(s);
    propagate_grading(z, bullet_end(z), 0, static_cast<int>(two_bridge_s(s)) - 1);
    return z;
}

enum class EndCase { GreaterThanOne, One, HalfToOne, ZeroToHalf, NotApplicable };

inline std::string end_case_name(EndCase c) {
    switch (c) {
    case EndCase::GreaterThanOne: return "p/q>1";
    case EndCase::One: return "p/q=1";
    case EndCase::HalfToOne: return "1/2<p/q<1";
    case EndCase::ZeroToHalf: return "0<p/q<1/2";
    default: return "n/a";
    }
}

struct TangleEndInfo {
    Vertex end;
    Parity parity;
    EndCase shape;
};

inline std::pair<TangleEndInfo, TangleEndInfo> end_info(const ZigzagComplex& z, const Slope& s) {
    EndCase c = EndCase::NotApplicable;
    if (s.odd_odd() && s.p > 0) {
        if (s.p > s.q) c = EndCase::GreaterThanOne;
        else if (s.p == s.q) c = EndCase::One;
        else if (2 * s.p > s.q) c = EndCase::HalfToOne;
        else c = EndCase::ZeroToHalf;
    }
    TangleEndInfo first{z.objects.front().v, z.arrows.front().parity, c};
    TangleEndInfo last{z.objects.back().v, z.arrows.back().parity, c};
    return {first, last};
}

} // namespace gordian
