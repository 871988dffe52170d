#pragma once

// Quadratic extension F(sqrt(d)) over a base field.  Values are a + b*sqrt(d)
// with d fixed per value; mixing two different irrational radicands is a
// logic error.  Keeps degenerate parameters, eigenvalues and the geometry
// evaluated at them exact when the discriminant is not a perfect square.

#include "orthokit/error.hpp"
#include "orthokit/scalar.hpp"

namespace ortho {

template <class F>
struct Ext {
    F a{};  // rational part
    F b{};  // coefficient of sqrt(d)
    F d{};  // radicand; meaningful only when b != 0

    Ext() = default;
    Ext(int n) : a(n) {}
    explicit Ext(const F& rational) : a(rational) {}
    Ext(const F& a_, const F& b_, const F& d_) : a(a_), b(b_), d(d_) {
        if (is_zero(b)) { b = F(0); d = F(0); }
    }

    bool rational() const { return is_zero(b); }

    Ext operator-() const { return Ext(-a, -b, d); }
};

namespace detail {
// Common radicand of two values; throws if both carry distinct radicands.
template <class F>
F join_radicand(const Ext<F>& x, const Ext<F>& y) {
    if (x.rational()) return y.d;
    if (y.rational()) return x.d;
    if (x.d == y.d) return x.d;
    fail(errc::incompatible_extension, "mixed quadratic extensions");
}
}  // namespace detail

template <class F>
Ext<F> operator+(const Ext<F>& x, const Ext<F>& y) {
    F d = detail::join_radicand(x, y);
    return Ext<F>(F(x.a + y.a), F(x.b + y.b), d);
}

template <class F>
Ext<F> operator-(const Ext<F>& x, const Ext<F>& y) {
    F d = detail::join_radicand(x, y);
    return Ext<F>(F(x.a - y.a), F(x.b - y.b), d);
}

template <class F>
Ext<F> operator*(const Ext<F>& x, const Ext<F>& y) {
    F d = detail::join_radicand(x, y);
    return Ext<F>(F(x.a * y.a + x.b * y.b * d), F(x.a * y.b + x.b * y.a), d);
}

template <class F>
Ext<F> inverse(const Ext<F>& x) {
    // 1 / (a + b sqrt(d)) = (a - b sqrt(d)) / (a^2 - b^2 d)
    F n = F(x.a * x.a - x.b * x.b * x.d);
    return Ext<F>(F(x.a / n), F(-x.b / n), x.d);
}

template <class F>
Ext<F> operator/(const Ext<F>& x, const Ext<F>& y) {
    return x * inverse(y);
}

template <class F>
Ext<F>& operator+=(Ext<F>& x, const Ext<F>& y) { return x = x + y; }
template <class F>
Ext<F>& operator-=(Ext<F>& x, const Ext<F>& y) { return x = x - y; }
template <class F>
Ext<F>& operator*=(Ext<F>& x, const Ext<F>& y) { return x = x * y; }
template <class F>
Ext<F>& operator/=(Ext<F>& x, const Ext<F>& y) { return x = x / y; }

template <class F>
Ext<F> conj(const Ext<F>& x) {
    return Ext<F>(x.a, F(-x.b), x.d);
}

template <class F>
int sign_of(const Ext<F>& x) {
    int sa = sign_of(x.a), sb = sign_of(x.b);
    if (sb == 0) return sa;
    if (sa == 0) return sb;  // d > 0 whenever b != 0
    if (sa == sb) return sa;
    // opposite signs: compare a^2 against b^2 d
    return sa * sign_of(F(x.a * x.a - x.b * x.b * x.d));
}

template <class F>
bool is_zero(const Ext<F>& x) {
    return is_zero(x.a) && is_zero(x.b);
}

template <class F>
bool operator==(const Ext<F>& x, const Ext<F>& y) {
    return is_zero(x - y);
}
template <class F>
bool operator!=(const Ext<F>& x, const Ext<F>& y) { return !(x == y); }
template <class F>
bool operator<(const Ext<F>& x, const Ext<F>& y) { return sign_of(x - y) < 0; }
template <class F>
bool operator>(const Ext<F>& x, const Ext<F>& y) { return sign_of(x - y) > 0; }

template <class F>
double to_double(const Ext<F>& x) {
    double r = to_double(x.a);
    if (!is_zero(x.b)) r += to_double(x.b) * std::sqrt(to_double(x.d));
    return r;
}

template <class F>
std::string to_string(const Ext<F>& x) {
    if (x.rational()) return to_string(x.a);
    return to_string(x.a) + " + " + to_string(x.b) + "*sqrt(" + to_string(x.d) + ")";
}

template <class F>
struct scalar_traits<Ext<F>> {
    static constexpr bool exact = scalar_traits<F>::exact;
    static const char* name() { return "extension"; }
};

}  // namespace ortho
