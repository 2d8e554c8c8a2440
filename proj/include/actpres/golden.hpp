#pragma once

#include <actpres/error.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

namespace actpres {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// a + b*sqrt(5) with exact rational a, b.
struct GoldenNum {
    Rational a{0};
    Rational b{0};

    GoldenNum() = default;
    GoldenNum(Rational a_, Rational b_ = 0) : a(std::move(a_)), b(std::move(b_)) {}
    GoldenNum(int a_) : a(a_), b(0) {}

    static GoldenNum sqrt5() { return {0, 1}; }
    static GoldenNum phi() { return {Rational(1, 2), Rational(1, 2)}; }
    static GoldenNum phi_inv() { return {Rational(-1, 2), Rational(1, 2)}; } // phi - 1

    bool is_zero() const { return a == 0 && b == 0; }
    GoldenNum conjugate() const { return {a, -b}; }
    Rational field_norm() const { return a * a - 5 * b * b; }

    friend GoldenNum operator+(const GoldenNum& x, const GoldenNum& y) { return {x.a + y.a, x.b + y.b}; }
    friend GoldenNum operator-(const GoldenNum& x, const GoldenNum& y) { return {x.a - y.a, x.b - y.b}; }
    friend GoldenNum operator-(const GoldenNum& x) { return {-x.a, -x.b}; }
    friend GoldenNum operator*(const GoldenNum& x, const GoldenNum& y) {
        return {x.a * y.a + 5 * x.b * y.b, x.a * y.b + x.b * y.a};
    }
    friend GoldenNum operator/(const GoldenNum& x, const GoldenNum& y) {
        Rational n = y.field_norm();
        if (n == 0) throw InputError("GoldenNum: division by zero");
        GoldenNum p = x * y.conjugate();
        return {p.a / n, p.b / n};
    }
    GoldenNum& operator+=(const GoldenNum& y) { return *this = *this + y; }
    GoldenNum& operator-=(const GoldenNum& y) { return *this = *this - y; }
    GoldenNum& operator*=(const GoldenNum& y) { return *this = *this * y; }

    friend bool operator==(const GoldenNum& x, const GoldenNum& y) { return x.a == y.a && x.b == y.b; }

    // Sign of the real number a + b*sqrt5.
    int sign() const {
        int sa = a.sign(), sb = b.sign();
        if (sa == 0) return sb;
        if (sb == 0 || sa == sb) return sa;
        // opposite signs: compare a^2 with 5 b^2
        Rational d = a * a - 5 * b * b;
        return d.sign() * sa;
    }
    friend bool operator<(const GoldenNum& x, const GoldenNum& y) { return (y - x).sign() > 0; }

    std::string str() const {
        std::ostringstream os;
        os << a;
        if (b != 0) os << (b.sign() < 0 ? " - " : " + ") << abs(b) << "*sqrt5";
        return os.str();
    }
    friend std::ostream& operator<<(std::ostream& os, const GoldenNum& x) { return os << x.str(); }
};

namespace detail {
inline std::optional<Rational> rational_sqrt(const Rational& q) {
    if (q.sign() < 0) return std::nullopt;
    BigInt n = numerator(q), d = denominator(q);
    BigInt rn = boost::multiprecision::sqrt(n), rd = boost::multiprecision::sqrt(d);
    if (rn * rn != n || rd * rd != d) return std::nullopt;
    return Rational(rn, rd);
}
} // namespace detail

/// Non-negative square root inside Q(sqrt5), if it exists there.
inline std::optional<GoldenNum> golden_sqrt(const GoldenNum& q) {
    if (q.sign() < 0) return std::nullopt;
    if (q.is_zero()) return GoldenNum{};
    // (x + y sqrt5)^2 = q  =>  x^2 = (a +- sqrt(a^2 - 5b^2)) / 2
    auto disc = detail::rational_sqrt(q.field_norm());
    if (!disc) return std::nullopt;
    for (int s : {1, -1}) {
        Rational x2 = (q.a + s * *disc) / 2;
        auto x = detail::rational_sqrt(x2);
        if (!x) continue;
        GoldenNum cand;
        if (*x != 0) {
            cand = {*x, q.b / (2 * *x)};
        } else {
            auto y = detail::rational_sqrt(q.a / 5);
            if (!y) continue;
            cand = {0, *y};
        }
        if (cand.sign() < 0) cand = -cand;
        if (cand * cand == q) return cand;
    }
    return std::nullopt;
}

using GoldenVec3 = std::array<GoldenNum, 3>;

inline GoldenNum dot(const GoldenVec3& u, const GoldenVec3& v) {
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
}

/// Quaternion w + xi + yj + zk over Q(sqrt5).
struct GoldenQuat {
    GoldenNum w, x, y, z;

    static GoldenQuat one() { return {1, 0, 0, 0}; }
    static GoldenQuat minus_one() { return {-1, 0, 0, 0}; }
    static GoldenQuat pure(const GoldenVec3& v) { return {0, v[0], v[1], v[2]}; }

    GoldenQuat conj() const { return {w, -x, -y, -z}; }
    GoldenNum norm() const { return w * w + x * x + y * y + z * z; }
    GoldenVec3 vec() const { return {x, y, z}; }
    GoldenQuat operator-() const { return {-w, -x, -y, -z}; }

    friend bool operator==(const GoldenQuat&, const GoldenQuat&) = default;

    std::string str() const {
        return "(" + w.str() + ", " + x.str() + ", " + y.str() + ", " + z.str() + ")";
    }
};

/// Hamilton product.
inline GoldenQuat quat_mul(const GoldenQuat& p, const GoldenQuat& q) {
    return {p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
            p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
            p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
            p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w};
}
inline GoldenQuat operator*(const GoldenQuat& p, const GoldenQuat& q) { return quat_mul(p, q); }

/// cos(t/2) + sin(t/2) * axis, where the caller folds 1/|axis| into half_sin.
inline GoldenQuat quat_from_rotation(const GoldenVec3& axis, const GoldenNum& half_cos, const GoldenNum& half_sin) {
    if (half_cos * half_cos + half_sin * half_sin * dot(axis, axis) != GoldenNum(1))
        throw InputError("quat_from_rotation: data does not give a unit quaternion");
    return {half_cos, half_sin * axis[0], half_sin * axis[1], half_sin * axis[2]};
}

/// Rotation by angle t about `axis` (right-hand rule), given cos(t/2) and the
/// sign of sin(t/2). Needs |axis| * sin(t/2) to stay inside Q(sqrt5).
inline GoldenQuat rotation_quat(const GoldenVec3& axis, const GoldenNum& half_cos, int sin_sign) {
    GoldenNum len2 = dot(axis, axis);
    if (len2.is_zero()) throw InputError("rotation_quat: zero axis");
    auto s = golden_sqrt((GoldenNum(1) - half_cos * half_cos) / len2);
    if (!s) throw InputError("rotation_quat: sin(t/2)/|axis| leaves Q(sqrt5)");
    return quat_from_rotation(axis, half_cos, sin_sign < 0 ? -*s : *s);
}

/// q p q^-1 for a unit quaternion q.
inline GoldenVec3 quat_rotate(const GoldenQuat& q, const GoldenVec3& p) {
    return (q * GoldenQuat::pure(p) * q.conj()).vec();
}

} // namespace actpres
