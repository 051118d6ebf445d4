#pragma once
// Upward-closed subsets of Z^2: an optional half-plane V_N united with
// finitely many quadrants V(a, b).

#include <algorithm>
#include <climits>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace gordian {

using Point = std::pair<long long, long long>;

class Region {
public:
    Region() = default;
    Region(std::optional<long long> diagonal, std::vector<Point> corners)
        : diag_(diagonal), corners_(corners.begin(), corners.end()) {
        canonicalize();
    }
    static Region empty() { return {}; }
    static Region half_plane(long long n) { return Region(n, {}); }  // V_n
    static Region quadrant(long long a, long long b) { return Region(std::nullopt, {{a, b}}); } // V(a,b)

    const std::optional<long long>& diagonal() const { return diag_; }
    std::vector<Point> corners() const { return {corners_.begin(), corners_.end()}; }
    bool is_empty() const { return !diag_ && corners_.empty(); }

    bool member(long long x, long long y) const {
        if (diag_ && x + y >= *diag_) return true;
        for (auto& [a, b] : corners_)
            if (x >= a && y >= b) return true;
        return false;
    }
    bool member(const Point& p) const { return member(p.first, p.second); }

    friend bool operator==(const Region&, const Region&) = default;

    friend Region region_union(const Region& r, const Region& s) {
        std::optional<long long> d = r.diag_;
        if (s.diag_) d = d ? std::min(*d, *s.diag_) : *s.diag_;
        std::vector<Point> c(r.corners_.begin(), r.corners_.end());
        c.insert(c.end(), s.corners_.begin(), s.corners_.end());
        return Region(d, c);
    }

    friend Region intersect(const Region& r, const Region& s) {
        std::optional<long long> d;
        if (r.diag_ && s.diag_) d = std::max(*r.diag_, *s.diag_);
        std::vector<Point> c;
        for (auto& [a, b] : r.corners_)
            for (auto& [e, f] : s.corners_) c.push_back({std::max(a, e), std::max(b, f)});
        auto cut = [&](long long n, const std::set<Point>& cs) {
            for (auto& [a, b] : cs) {
                if (a + b >= n) {
                    c.push_back({a, b});
                    continue;
                }
                for (long long j = 0; j <= n - a - b; ++j) c.push_back({a + j, n - a - j});
            }
        };
        if (r.diag_) cut(*r.diag_, s.corners_);
        if (s.diag_) cut(*s.diag_, r.corners_);
        return Region(d, c);
    }

    friend Region transpose(const Region& r) {
        std::vector<Point> c;
        for (auto& [a, b] : r.corners_) c.push_back({b, a});
        return Region(r.diag_, c);
    }

    friend Region minkowski_add(const Region& r, const Region& s) {
        if (r.is_empty() || s.is_empty()) return empty();
        std::optional<long long> d;
        auto low = [](const Region& x) {
            long long m = x.diag_ ? *x.diag_ : LLONG_MAX;
            for (auto& [a, b] : x.corners_) m = std::min(m, a + b);
            return m;
        };
        if (r.diag_ || s.diag_) {
            // V_N + anything nonempty is V_{N + min sum of the other}
            long long best = LLONG_MAX;
            if (r.diag_) best = std::min(best, *r.diag_ + low(s));
            if (s.diag_) best = std::min(best, *s.diag_ + low(r));
            d = best;
        }
        std::vector<Point> c;
        for (auto& [a, b] : r.corners_)
            for (auto& [e, f] : s.corners_) c.push_back({a + e, b + f});
        return Region(d, c);
    }

    // minimum of x + y over the region (nullopt = infinity)
    std::optional<long long> min_sum() const {
        std::optional<long long> m = diag_;
        for (auto& [a, b] : corners_) m = m ? std::min(*m, a + b) : a + b;
        return m;
    }

    std::string to_string() const {
        std::string s = "{diagonal: " + (diag_ ? std::to_string(*diag_) : std::string("none")) + ", corners: [";
        bool first = true;
        for (auto& [a, b] : corners_) {
            s += (first ? "(" : ", (") + std::to_string(a) + "," + std::to_string(b) + ")";
            first = false;
        }
        return s + "]}";
    }

    // Staircase picture; rows are q2 from top to bottom, columns q1.
    std::string render(long long lo1, long long hi1, long long lo2, long long hi2) const {
        std::string out;
        for (long long y = hi2; y >= lo2; --y) {
            std::string row = (y >= 0 ? " " : "") + std::to_string(y);
            while (row.size() < 4) row = " " + row;
            out += row + " |";
            for (long long x = lo1; x <= hi1; ++x) out += member(x, y) ? "  #" : "  .";
            out += "\n";
        }
        out += "     +";
        for (long long x = lo1; x <= hi1; ++x) out += "---";
        out += "\n      ";
        for (long long x = lo1; x <= hi1; ++x) {
            std::string c = std::to_string(x);
            out += std::string(c.size() < 3 ? 3 - c.size() : 0, ' ') + c;
        }
        return out + "\n";
    }

private:
    void canonicalize() {
        std::set<Point> keep;
        for (auto& c : corners_) {
            if (diag_ && c.first + c.second >= *diag_) continue;
            bool dominated = false;
            for (auto& o : corners_)
                if (o != c && o.first <= c.first && o.second <= c.second) dominated = true;
            if (!dominated) keep.insert(c);
        }
        corners_ = std::move(keep);
    }

    std::optional<long long> diag_;
    std::set<Point> corners_;
};

inline Region canonicalize(const Region& r) { return r; } // construction already canonicalizes

} // namespace gordian
