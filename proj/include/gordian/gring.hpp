#pragma once
// Exact coefficient rings Z, Q, F_p and monomials c*G^k over them.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gordian {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

struct Error : std::runtime_error {
    std::string kind;
    Error(std::string k, const std::string& msg) : std::runtime_error(k + ": " + msg), kind(std::move(k)) {}
};

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

struct RingTag {
    enum class Kind { Z, Q, Fp };
    Kind kind = Kind::Z;
    std::uint64_t p = 0;

    static RingTag Z() { return {Kind::Z, 0}; }
    static RingTag Q() { return {Kind::Q, 0}; }
    static RingTag F(std::uint64_t p) {
        if (!is_prime(p)) throw Error("BadRing", "F" + std::to_string(p) + " is not a prime field");
        return {Kind::Fp, p};
    }
    bool is_field() const { return kind != Kind::Z; }
    bool operator==(const RingTag&) const = default;

    std::string name() const {
        switch (kind) {
        case Kind::Z: return "Z";
        case Kind::Q: return "Q";
        default: return "F" + std::to_string(p);
        }
    }
    static RingTag parse(const std::string& s) {
        if (s == "Z") return Z();
        if (s == "Q") return Q();
        if (s.size() >= 2 && s[0] == 'F') {
            std::uint64_t p = 0;
            for (std::size_t i = 1; i < s.size(); ++i) {
                if (s[i] < '0' || s[i] > '9') throw Error("BadRing", "cannot parse ring '" + s + "'");
                p = p * 10 + std::uint64_t(s[i] - '0');
                if (p > (std::uint64_t(1) << 62)) throw Error("BadRing", "prime too large");
            }
            return F(p);
        }
        throw Error("BadRing", "cannot parse ring '" + s + "'");
    }
};

class Scalar {
public:
    Scalar() = default;
    Scalar(RingTag r, BigRat v) : ring_(r), v_(std::move(v)) { normalize(); }
    Scalar(RingTag r, long long v) : Scalar(r, BigRat(v)) {}

    const RingTag& ring() const { return ring_; }
    const BigRat& value() const { return v_; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    bool is_unit() const {
        if (ring_.kind == RingTag::Kind::Z) return v_ == 1 || v_ == -1;
        return v_ != 0;
    }

    Scalar inverse() const {
        if (!is_unit()) throw Error("NotAUnit", to_string() + " is not a unit in " + ring_.name());
        if (ring_.kind == RingTag::Kind::Fp) {
            // Fermat: a^(p-2)
            BigInt a = numerator(v_), m = BigInt(ring_.p);
            BigInt e = m - 2;
            BigInt r = boost::multiprecision::powm(a, e, m);
            return Scalar(ring_, BigRat(r));
        }
        return Scalar(ring_, BigRat(1) / v_);
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b) { check(a, b); return Scalar(a.ring_, a.v_ + b.v_); }
    friend Scalar operator-(const Scalar& a, const Scalar& b) { check(a, b); return Scalar(a.ring_, a.v_ - b.v_); }
    friend Scalar operator*(const Scalar& a, const Scalar& b) { check(a, b); return Scalar(a.ring_, a.v_ * b.v_); }
    Scalar operator-() const { return Scalar(ring_, -v_); }
    friend bool operator==(const Scalar& a, const Scalar& b) { return a.ring_ == b.ring_ && a.v_ == b.v_; }

    std::string to_string() const {
        if (denominator(v_) == 1) return numerator(v_).str();
        return numerator(v_).str() + "/" + denominator(v_).str();
    }

private:
    static void check(const Scalar& a, const Scalar& b) {
        if (!(a.ring_ == b.ring_)) throw Error("MixedRings", a.ring_.name() + " vs " + b.ring_.name());
    }
    void normalize() {
        switch (ring_.kind) {
        case RingTag::Kind::Z:
            if (denominator(v_) != 1) throw Error("NotInRing", "non-integer value over Z");
            break;
        case RingTag::Kind::Q: break;
        case RingTag::Kind::Fp: {
            BigInt m(ring_.p);
            BigInt n = numerator(v_) % m, d = denominator(v_) % m;
            if (d == 0) throw Error("NotInRing", "denominator divisible by " + m.str());
            if (n < 0) n += m;
            if (d != 1) {
                if (d < 0) d += m;
                BigInt e = m - 2;
                BigInt inv = boost::multiprecision::powm(d, e, m);
                n = BigInt(n * inv) % m;
            }
            v_ = BigRat(n);
            break;
        }
        }
    }

    RingTag ring_{};
    BigRat v_{0};
};

// c * G^gexp; the canonical zero has coeff 0 and gexp 0
struct Monomial {
    Scalar coeff;
    int gexp = 0;

    Monomial() = default;
    Monomial(Scalar c, int k) : coeff(std::move(c)), gexp(k) {
        if (gexp < 0) throw Error("BadMonomial", "negative G exponent");
        if (coeff.is_zero()) gexp = 0;
    }
    static Monomial zero(RingTag r) { return Monomial(Scalar(r, 0), 0); }
    static Monomial unit(RingTag r, int k = 0) { return Monomial(Scalar(r, 1), k); }

    bool is_zero() const { return coeff.is_zero(); }
    int qdeg() const { return -2 * gexp; }
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.coeff == b.coeff && a.gexp == b.gexp; }
    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Scalar c = a.coeff * b.coeff;
        return Monomial(c, c.is_zero() ? 0 : a.gexp + b.gexp);
    }
    Monomial operator-() const { return Monomial(-coeff, gexp); }

    std::string to_string() const {
        if (gexp == 0) return coeff.to_string();
        std::string g = gexp == 1 ? "G" : "G^" + std::to_string(gexp);
        if (coeff.is_one()) return g;
        if ((-coeff).is_one()) return "-" + g;
        return coeff.to_string() + "*" + g;
    }
};

inline Monomial monomial_mul(const Monomial& a, const Monomial& b) { return a * b; }

struct Generator {
    std::string id;
    int t = 0;
    int q = 0;
    bool operator==(const Generator&) const = default;
};

struct GradedFreeModule {
    std::vector<Generator> generators;
};

} // namespace gordian
