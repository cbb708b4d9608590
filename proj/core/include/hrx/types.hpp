#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace hrx {

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    double& operator[](int i) { return (&x)[i]; }
    double operator[](int i) const { return (&x)[i]; }

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
    Vec3 operator-() const { return {-x, -y, -z}; }
    Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
    Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm2(const Vec3& v) { return dot(v, v); }
inline double norm(const Vec3& v) { return std::sqrt(norm2(v)); }

struct Vec4 {
    double a = 0.0, b = 0.0, c = 0.0, d = 0.0;

    double& operator[](int i) { return (&a)[i]; }
    double operator[](int i) const { return (&a)[i]; }

    Vec4 operator+(const Vec4& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
    Vec4 operator-(const Vec4& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }
    Vec4 operator*(double s) const { return {a * s, b * s, c * s, d * s}; }
};

inline double dot(const Vec4& p, const Vec4& q) { return p.a * q.a + p.b * q.b + p.c * q.c + p.d * q.d; }
inline double norm(const Vec4& p) { return std::sqrt(dot(p, p)); }

}  // namespace hrx
