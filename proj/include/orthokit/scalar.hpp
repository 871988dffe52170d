#pragma once

// Field abstraction used by the whole kernel.  Two backends share one
// interface: an exact rational (GMP mpq) and a double with a single
// global relative tolerance.  Exact is the reference semantics; every
// predicate under it is a decision, never an approximation.

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>

namespace ortho {

// ---------------------------------------------------------------------------
// Exact rational backend
// ---------------------------------------------------------------------------

using Rat = mpq_class;

inline int sign_of(const Rat& x) { return sgn(x); }
inline bool is_zero(const Rat& x) { return sgn(x) == 0; }
inline double to_double(const Rat& x) { return x.get_d(); }

/// True iff x is the square of a rational (x >= 0, numerator and
/// denominator both perfect squares in lowest terms).
inline bool is_square(const Rat& x) {
    if (sgn(x) < 0) return false;
    return mpz_perfect_square_p(x.get_num_mpz_t()) != 0 &&
           mpz_perfect_square_p(x.get_den_mpz_t()) != 0;
}

/// Exact square root; pre: is_square(x).
inline Rat sqrt_exact(const Rat& x) {
    Rat r;
    mpz_sqrt(r.get_num_mpz_t(), x.get_num_mpz_t());
    mpz_sqrt(r.get_den_mpz_t(), x.get_den_mpz_t());
    return r;
}

inline std::string to_string(const Rat& x) { return x.get_str(); }

inline Rat abs_of(const Rat& x) { return abs(x); }

// ---------------------------------------------------------------------------
// Float backend
// ---------------------------------------------------------------------------

/// Double-precision scalar.  Equality is |a-b| <= tol * max(1, |a|, |b|)
/// with one configurable tolerance shared by every predicate.  Set the
/// tolerance before running anything concurrent.
struct Fl {
    double v = 0.0;

    static inline double tol = 1e-9;

    Fl() = default;
    Fl(double d) : v(d) {}
    Fl(int n) : v(static_cast<double>(n)) {}
    Fl(long n) : v(static_cast<double>(n)) {}

    Fl operator-() const { return Fl{-v}; }
    Fl& operator+=(const Fl& o) { v += o.v; return *this; }
    Fl& operator-=(const Fl& o) { v -= o.v; return *this; }
    Fl& operator*=(const Fl& o) { v *= o.v; return *this; }
    Fl& operator/=(const Fl& o) { v /= o.v; return *this; }

    friend Fl operator+(Fl a, const Fl& b) { return a += b; }
    friend Fl operator-(Fl a, const Fl& b) { return a -= b; }
    friend Fl operator*(Fl a, const Fl& b) { return a *= b; }
    friend Fl operator/(Fl a, const Fl& b) { return a /= b; }

    friend bool operator==(const Fl& a, const Fl& b) {
        double scale = std::max(1.0, std::max(std::fabs(a.v), std::fabs(b.v)));
        return std::fabs(a.v - b.v) <= tol * scale;
    }
    friend bool operator!=(const Fl& a, const Fl& b) { return !(a == b); }
    friend bool operator<(const Fl& a, const Fl& b) { return a.v < b.v && a != b; }
    friend bool operator>(const Fl& a, const Fl& b) { return b < a; }
};

inline int sign_of(const Fl& x) {
    if (std::fabs(x.v) <= Fl::tol) return 0;
    return x.v > 0 ? 1 : -1;
}
inline bool is_zero(const Fl& x) { return sign_of(x) == 0; }
inline double to_double(const Fl& x) { return x.v; }
inline bool is_square(const Fl& x) { return x.v >= 0.0; }
inline Fl sqrt_exact(const Fl& x) { return Fl{std::sqrt(x.v)}; }
inline Fl abs_of(const Fl& x) { return Fl{std::fabs(x.v)}; }

inline std::string to_string(const Fl& x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x.v);
    return buf;
}

// ---------------------------------------------------------------------------
// Traits
// ---------------------------------------------------------------------------

template <class F>
struct scalar_traits;

template <>
struct scalar_traits<Rat> {
    static constexpr bool exact = true;
    static const char* name() { return "exact"; }
};

template <>
struct scalar_traits<Fl> {
    static constexpr bool exact = false;
    static const char* name() { return "float"; }
};

template <class F>
inline constexpr bool is_exact_v = scalar_traits<F>::exact;

/// Build a scalar from an integer fraction; den must be nonzero.
template <class F>
F fraction(long num, long den = 1) {
    return F(num) / F(den);
}

template <>
inline Rat fraction<Rat>(long num, long den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

}  // namespace ortho
