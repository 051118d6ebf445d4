#pragma once
// Bigraded complexes of free R[G]-modules with monomial differentials.

#include "gordian/gring.hpp"
#include "gordian/linalg.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

namespace gordian {

struct HomologySlice {
    int t = 0;
    int q = 0;
    bool over_field = false;
    std::size_t rank = 0;              // free rank over Z, dimension over a field
    std::vector<BigInt> torsion;       // orders > 1, empty over a field
    bool operator==(const HomologySlice&) const = default;
};

class FreeComplex {
public:
    using Row = std::map<std::size_t, Monomial>;

    FreeComplex() = default;
    explicit FreeComplex(RingTag r) : ring_(r) {}

    const RingTag& ring() const { return ring_; }
    const std::vector<Generator>& generators() const { return gens_; }
    const Generator& gen(std::size_t i) const { return gens_[i]; }
    std::size_t size() const { return gens_.size(); }
    const Row& out(std::size_t i) const { return diff_[i]; }

    std::size_t add_generator(std::string id, int t, int q) {
        if (index_.count(id)) throw Error("SchemaError", "duplicate generator id '" + id + "'");
        index_[id] = gens_.size();
        gens_.push_back({std::move(id), t, q});
        diff_.emplace_back();
        return gens_.size() - 1;
    }
    bool has_id(const std::string& id) const { return index_.count(id) != 0; }
    std::size_t index_of(const std::string& id) const {
        auto it = index_.find(id);
        if (it == index_.end()) throw Error("SchemaError", "unknown generator '" + id + "'");
        return it->second;
    }

    // Sets src->tgt; checks the grading so every entry is a homogeneous monomial.
    void set_entry(std::size_t src, std::size_t tgt, const Monomial& m) {
        if (!(m.coeff.ring() == ring_)) throw Error("MixedRings", "entry ring differs from complex ring");
        if (m.is_zero()) {
            diff_[src].erase(tgt);
            return;
        }
        const auto &a = gens_[src], &b = gens_[tgt];
        if (b.t != a.t + 1 || b.q != a.q + 2 * m.gexp)
            throw Error("GradingViolation", a.id + "->" + b.id);
        diff_[src][tgt] = m;
    }
    void add_to_entry(std::size_t src, std::size_t tgt, const Monomial& m) {
        if (m.is_zero()) return;
        auto it = diff_[src].find(tgt);
        if (it == diff_[src].end()) {
            set_entry(src, tgt, m);
            return;
        }
        if (it->second.gexp != m.gexp) throw Error("GradingViolation", gens_[src].id + "->" + gens_[tgt].id);
        set_entry(src, tgt, Monomial(it->second.coeff + m.coeff, m.gexp));
    }
    Monomial entry(std::size_t src, std::size_t tgt) const {
        auto it = diff_[src].find(tgt);
        return it == diff_[src].end() ? Monomial::zero(ring_) : it->second;
    }
    std::size_t entry_count() const {
        std::size_t n = 0;
        for (auto& r : diff_) n += r.size();
        return n;
    }

    void validate() const {
        for (std::size_t a = 0; a < size(); ++a)
            for (auto& [b, m] : diff_[a]) {
                if (gens_[b].t != gens_[a].t + 1 || gens_[b].q != gens_[a].q + 2 * m.gexp)
                    throw Error("GradingViolation", gens_[a].id + "->" + gens_[b].id);
            }
        for (std::size_t a = 0; a < size(); ++a) {
            std::map<std::size_t, Monomial> sq;
            for (auto& [b, m] : diff_[a])
                for (auto& [c, n] : diff_[b]) {
                    Monomial p = m * n;
                    auto it = sq.find(c);
                    if (it == sq.end()) sq.emplace(c, p);
                    else it->second = Monomial(it->second.coeff + p.coeff, p.gexp);
                }
            for (auto& [c, m] : sq)
                if (!m.is_zero()) throw Error("NotAComplex", gens_[a].id + "->" + gens_[c].id);
        }
    }

    bool operator==(const FreeComplex& o) const {
        return ring_ == o.ring_ && gens_ == o.gens_ && diff_ == o.diff_;
    }

    // generator indices sorted by (t, q, insertion index)
    std::vector<std::size_t> sorted_indices() const {
        std::vector<std::size_t> idx(size());
        std::iota(idx.begin(), idx.end(), 0);
        std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
            return std::pair(gens_[a].t, gens_[a].q) < std::pair(gens_[b].t, gens_[b].q);
        });
        return idx;
    }

private:
    RingTag ring_{};
    std::vector<Generator> gens_;
    std::vector<Row> diff_;
    std::unordered_map<std::string, std::size_t> index_;
};

inline void validate(const FreeComplex& c) { c.validate(); }

inline FreeComplex gaussian_eliminate(const FreeComplex& c) {
    const std::size_t n = c.size();
    const RingTag r = c.ring();
    std::vector<std::map<std::size_t, Monomial>> out(n), in(n);
    for (std::size_t a = 0; a < n; ++a)
        for (auto& [b, m] : c.out(a)) {
            out[a][b] = m;
            in[b][a] = m;
        }
    std::vector<bool> alive(n, true);
    std::vector<std::size_t> rank_of(n);
    auto order = c.sorted_indices();
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

    for (;;) {
        std::size_t bsel = n, csel = n;
        for (std::size_t a : order) {
            if (!alive[a]) continue;
            std::size_t best = n;
            for (auto& [b, m] : out[a])
                if (m.gexp == 0 && m.coeff.is_unit() && (best == n || rank_of[b] < rank_of[best])) best = b;
            if (best != n) {
                bsel = a;
                csel = best;
                break;
            }
        }
        if (bsel == n) break;
        Scalar uinv = out[bsel][csel].coeff.inverse();
        std::vector<std::pair<std::size_t, Monomial>> xs(in[csel].begin(), in[csel].end());
        std::vector<std::pair<std::size_t, Monomial>> ys(out[bsel].begin(), out[bsel].end());
        for (auto& [a, x] : xs) {
            if (a == bsel) continue;
            for (auto& [d, y] : ys) {
                if (d == csel) continue;
                Monomial corr = x * Monomial(uinv, 0) * y;
                auto it = out[a].find(d);
                Monomial cur = it == out[a].end() ? Monomial::zero(r) : it->second;
                if (!cur.is_zero() && cur.gexp != corr.gexp) throw Error("GradingViolation", "elimination");
                put(a, d, Monomial(cur.coeff - corr.coeff, corr.gexp));
            }
        }
        for (std::size_t v : {bsel, csel}) {
            for (auto& [b, m] : std::map(out[v])) put(v, b, Monomial::zero(r));
            for (auto& [a, m] : std::map(in[v])) put(a, v, Monomial::zero(r));
            alive[v] = false;
        }
    }

    FreeComplex res(r);
    std::vector<std::size_t> newidx(n, n);
    for (std::size_t a = 0; a < n; ++a)
        if (alive[a]) newidx[a] = res.add_generator(c.gen(a).id, c.gen(a).t, c.gen(a).q);
    for (std::size_t a = 0; a < n; ++a)
        if (alive[a])
            for (auto& [b, m] : out[a]) res.set_entry(newidx[a], newidx[b], m);
    return res;
}

inline FreeComplex dualize(const FreeComplex& c) {
    FreeComplex res(c.ring());
    for (auto& g : c.generators()) res.add_generator(g.id, -g.t, -g.q);
    for (std::size_t a = 0; a < c.size(); ++a)
        for (auto& [b, m] : c.out(a)) res.set_entry(b, a, m);
    return res;
}

inline FreeComplex shift(const FreeComplex& c, int dt, int dq) {
    FreeComplex res(c.ring());
    for (auto& g : c.generators()) res.add_generator(g.id, g.t + dt, g.q + dq);
    for (std::size_t a = 0; a < c.size(); ++a)
        for (auto& [b, m] : c.out(a)) res.set_entry(a, b, m);
    return res;
}

inline FreeComplex direct_sum(const FreeComplex& a, const FreeComplex& b) {
    if (!(a.ring() == b.ring())) throw Error("MixedRings", "direct_sum");
    FreeComplex res(a.ring());
    for (auto& g : a.generators()) res.add_generator(g.id, g.t, g.q);
    for (auto& g : b.generators()) {
        std::string id = g.id;
        while (res.has_id(id)) id += "'";
        res.add_generator(id, g.t, g.q);
    }
    for (std::size_t i = 0; i < a.size(); ++i)
        for (auto& [j, m] : a.out(i)) res.set_entry(i, j, m);
    for (std::size_t i = 0; i < b.size(); ++i)
        for (auto& [j, m] : b.out(i)) res.set_entry(a.size() + i, a.size() + j, m);
    return res;
}

// Reduce integer coefficients into another ring (Z -> Z is the identity).
inline FreeComplex base_change(const FreeComplex& c, RingTag target) {
    if (c.ring() == target) return c;
    if (c.ring().kind != RingTag::Kind::Z) throw Error("BadRing", "base_change expects a complex over Z");
    FreeComplex res(target);
    for (auto& g : c.generators()) res.add_generator(g.id, g.t, g.q);
    for (std::size_t a = 0; a < c.size(); ++a)
        for (auto& [b, m] : c.out(a)) res.set_entry(a, b, Monomial(Scalar(target, m.coeff.value()), m.gexp));
    return res;
}

namespace detail {
// slice basis in homological degree t and quantum degree q: generators with
// q(gen) >= q and q(gen) - q even, standing for G^m gen
inline std::vector<std::size_t> slice_basis(const FreeComplex& c, int t, int q) {
    std::vector<std::size_t> v;
    for (std::size_t i = 0; i < c.size(); ++i) {
        auto& g = c.gen(i);
        if (g.t == t && g.q >= q && (g.q - q) % 2 == 0) v.push_back(i);
    }
    return v;
}
} // namespace detail

inline HomologySlice homology_slice(const FreeComplex& c, int t, int q) {
    auto prev = detail::slice_basis(c, t - 1, q);
    auto cur = detail::slice_basis(c, t, q);
    auto next = detail::slice_basis(c, t + 1, q);
    HomologySlice h{t, q, c.ring().is_field(), 0, {}};
    auto build = [&](const std::vector<std::size_t>& src, const std::vector<std::size_t>& tgt) {
        linalg::ScalarMatrix m(tgt.size(), std::vector<Scalar>(src.size(), Scalar(c.ring(), 0)));
        for (std::size_t j = 0; j < src.size(); ++j)
            for (std::size_t i = 0; i < tgt.size(); ++i) m[i][j] = c.entry(src[j], tgt[i]).coeff;
        return m;
    };
    auto din = build(prev, cur), dout = build(cur, next);
    if (c.ring().is_field()) {
        h.rank = cur.size() - linalg::rank(dout) - linalg::rank(din);
        return h;
    }
    auto to_int = [](const linalg::ScalarMatrix& m) {
        linalg::IntMatrix r(m.size());
        for (std::size_t i = 0; i < m.size(); ++i)
            for (auto& s : m[i]) r[i].push_back(numerator(s.value()));
        return r;
    };
    auto inv_in = linalg::smith_invariants(to_int(din));
    auto inv_out = linalg::smith_invariants(to_int(dout));
    h.rank = cur.size() - inv_out.size() - inv_in.size();
    for (auto& d : inv_in)
        if (d > 1) h.torsion.push_back(d);
    return h;
}

// every (t, q) slice where the complex can have homology
inline std::vector<std::pair<int, int>> support_window(const FreeComplex& c) {
    std::set<std::pair<int, int>> pts;
    if (c.size() == 0) return {};
    int qmin = c.gen(0).q, qmax = c.gen(0).q;
    for (auto& g : c.generators()) {
        qmin = std::min(qmin, g.q);
        qmax = std::max(qmax, g.q);
    }
    for (auto& g : c.generators())
        for (int q = qmin - 2; q <= qmax; ++q) pts.insert({g.t, q});
    return {pts.begin(), pts.end()};
}

} // namespace gordian
