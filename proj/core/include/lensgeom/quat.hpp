#pragma once

#include <algorithm>
#include <cmath>
#include <complex>

namespace lensgeom::s3 {

/// Unit quaternion w + xi + yj + zk, identified with a point of the round
/// three-sphere. Viewed as a pair of complex numbers (z0, z1) = (w + xi, y + zi)
/// it is the point (z0, z1) of the unit sphere in C^2.
struct Quat {
    double w = 1.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Quat() = default;
    constexpr Quat(double w_, double x_, double y_, double z_) : w(w_), x(x_), y(y_), z(z_) {}

    static Quat from_complex(std::complex<double> z0, std::complex<double> z1) {
        return {z0.real(), z0.imag(), z1.real(), z1.imag()};
    }
    std::complex<double> z0() const { return {w, x}; }
    std::complex<double> z1() const { return {y, z}; }

    constexpr Quat conjugate() const { return {w, -x, -y, -z}; }
    double norm() const { return std::sqrt(w * w + x * x + y * y + z * z); }
    double norm_sq() const { return w * w + x * x + y * y + z * z; }

    Quat normalized() const {
        double n = norm();
        return {w / n, x / n, y / n, z / n};
    }

    friend constexpr Quat operator+(const Quat& a, const Quat& b) {
        return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
    }
    friend constexpr Quat operator-(const Quat& a, const Quat& b) {
        return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
    }
    friend constexpr Quat operator*(double s, const Quat& a) {
        return {s * a.w, s * a.x, s * a.y, s * a.z};
    }
    /// Hamilton product.
    friend constexpr Quat operator*(const Quat& a, const Quat& b) {
        return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
                a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
                a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
                a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
    }
};

constexpr double dot(const Quat& a, const Quat& b) {
    return a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z;
}

/// Unit vector on the two-sphere, identified with the pure-imaginary unit
/// quaternion xi + yj + zk.
struct PointS2 {
    double x = 1.0;
    double y = 0.0;
    double z = 0.0;

    constexpr PointS2() = default;
    constexpr PointS2(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

    constexpr Quat as_quat() const { return {0.0, x, y, z}; }
    double norm() const { return std::sqrt(x * x + y * y + z * z); }
    PointS2 normalized() const {
        double n = norm();
        return {x / n, y / n, z / n};
    }
    constexpr PointS2 operator-() const { return {-x, -y, -z}; }
};

constexpr double dot(const PointS2& a, const PointS2& b) {
    return a.x * b.x + a.y * b.y + a.z * b.z;
}

constexpr PointS2 cross(const PointS2& a, const PointS2& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

/// Spherical distance, acos of the clamped inner product.
inline double dist(const PointS2& a, const PointS2& b) {
    return std::acos(std::clamp(dot(a, b), -1.0, 1.0));
}

inline PointS2 vector_part(const Quat& q) { return {q.x, q.y, q.z}; }

/// Some unit quaternion q with q i q^{-1} = target. The choice of q is not
/// unique (any right factor e^{i s} works); callers must not depend on it.
inline Quat rotor_from_i(const PointS2& target) {
    // q = normalize(1 - target * i); degenerate only at target = -i, where any
    // pure unit orthogonal to i serves (conjugation by it rotates i by pi).
    Quat q{1.0 + target.x, 0.0, -target.z, target.y};
    double n = q.norm();
    if (n < 1e-8) return {0.0, 0.0, 1.0, 0.0}; // target == -i: use j
    return {q.w / n, q.x / n, q.y / n, q.z / n};
}

} // namespace lensgeom::s3
