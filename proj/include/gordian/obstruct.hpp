#pragma once
// Obstructions to rational tangle replacements Q_{-1} ~> Q_{p/q}.

#include "gordian/lambda.hpp"
#include "gordian/rational.hpp"

namespace gordian {

namespace detail {
inline void check_replacement_slope(const Slope& s) {
    if (!s.odd_odd()) throw Error("BadParity", s.to_string() + " is not a proper replacement slope");
}
} // namespace detail

inline long long alpha(const Slope& s) {
    detail::check_replacement_slope(s);
    if (s.p == -1 && s.q == 1) throw Error("ExcludedSlope", "-1");
    long long a = two_bridge_s(s) / 2;
    if (s.p < 0 && -s.p < s.q) a += 1; // -1 < p/q < 0
    return a;
}

inline long long beta(const Slope& s) {
    detail::check_replacement_slope(s);
    if (s.p == 1 && s.q == 1) throw Error("ExcludedSlope", "1");
    long long b = -two_bridge_s(s) / 2;
    if (s.p > 0 && s.p < s.q) b += 1; // 0 < p/q < 1
    return b;
}

inline Region replacement_region(const Slope& s) {
    long long a = alpha(s);
    return Region::quadrant(1 - a, a);
}

inline bool admissible(const Region& lam, const Slope& s) {
    long long a = alpha(s);
    return lam.member(1 - a, a);
}

inline bool is_u0_move(const Slope& s) {
    long long a = alpha(s);
    return a == 0 || a == 1;
}

// Largest homological degree whose torsion order is at least 2, or 0.
inline int positive_crossing_bound(const TorsionProfile& p) {
    int best = 0;
    for (auto& [d, u] : p.u)
        if (u >= 2) best = std::max(best, d);
    return best;
}

inline const char* orientation_warning() {
    return "valid only for the orientation of the single-crossing tangle; reversing one strand voids the obstruction";
}

} // namespace gordian
