#pragma once

#include "orthokit/scalar.hpp"

namespace ortho {

/// Euclidean plane vector; doubles as a finite point.
template <class F>
struct Vec2 {
    F x{};
    F y{};

    Vec2() = default;
    Vec2(F x_, F y_) : x(std::move(x_)), y(std::move(y_)) {}

    Vec2 operator-() const { return {F(-x), F(-y)}; }

    friend Vec2 operator+(const Vec2& u, const Vec2& v) { return {F(u.x + v.x), F(u.y + v.y)}; }
    friend Vec2 operator-(const Vec2& u, const Vec2& v) { return {F(u.x - v.x), F(u.y - v.y)}; }
    friend Vec2 operator*(const F& s, const Vec2& v) { return {F(s * v.x), F(s * v.y)}; }
    friend Vec2 operator*(const Vec2& v, const F& s) { return s * v; }
    friend Vec2 operator/(const Vec2& v, const F& s) { return {F(v.x / s), F(v.y / s)}; }

    friend bool operator==(const Vec2& u, const Vec2& v) { return u.x == v.x && u.y == v.y; }
    friend bool operator!=(const Vec2& u, const Vec2& v) { return !(u == v); }
};

template <class F>
F dot(const Vec2<F>& u, const Vec2<F>& v) {
    return F(u.x * v.x + u.y * v.y);
}

template <class F>
F cross(const Vec2<F>& u, const Vec2<F>& v) {
    return F(u.x * v.y - u.y * v.x);
}

/// Rotation by +90 degrees; perp(v) . v = 0 and perp(perp(v)) = -v.
template <class F>
Vec2<F> perp(const Vec2<F>& v) {
    return {F(-v.y), v.x};
}

template <class F>
bool is_zero_vec(const Vec2<F>& v) {
    return is_zero(v.x) && is_zero(v.y);
}

template <class F>
bool parallel(const Vec2<F>& u, const Vec2<F>& v) {
    return is_zero(cross(u, v));
}

template <class F>
F norm2(const Vec2<F>& v) {
    return dot(v, v);
}

template <class F>
F dist2(const Vec2<F>& p, const Vec2<F>& q) {
    return norm2(q - p);
}

// Complex-number view of the plane: (x, y) <-> x + iy.  Spiral similarities
// are multiplications, so their fixed points stay inside the field.
template <class F>
Vec2<F> cmul(const Vec2<F>& u, const Vec2<F>& v) {
    return {F(u.x * v.x - u.y * v.y), F(u.x * v.y + u.y * v.x)};
}

template <class F>
Vec2<F> cdiv(const Vec2<F>& u, const Vec2<F>& v) {
    F n = norm2(v);
    return {F((u.x * v.x + u.y * v.y) / n), F((u.y * v.x - u.x * v.y) / n)};
}

}  // namespace ortho
