#pragma once

#include <cmath>
#include <type_traits>

#include "riesz/interval.hpp"

namespace riesz {

// Generic numeric entry points. Templates over the numeric mode call these
// unqualified so the right overload is found for double, Interval and Dual.
inline double cos_(double x) { return std::cos(x); }
inline double sin_(double x) { return std::sin(x); }
inline double tan_(double x) { return std::tan(x); }
inline double log_(double x) { return std::log(x); }
inline double exp_(double x) { return std::exp(x); }
inline double sqrt_(double x) { return std::sqrt(x); }
inline double pow_(double x, double q) { return std::pow(x, q); }
inline double sqr_(double x) { return x * x; }

inline Interval cos_(const Interval& x) { return cos(x); }
inline Interval sin_(const Interval& x) { return sin(x); }
inline Interval tan_(const Interval& x) { return tan(x); }
inline Interval log_(const Interval& x) { return log(x); }
inline Interval exp_(const Interval& x) { return exp(x); }
inline Interval sqrt_(const Interval& x) { return sqrt(x); }
inline Interval pow_(const Interval& x, const Interval& q) { return pow(x, q); }
inline Interval sqr_(const Interval& x) { return sqr(x); }

/**
 * Forward-mode first-order jet: value and directional derivative.
 *
 * T is double or Interval for first derivatives; Dual<Dual<...>> nests for
 * second derivatives. Arithmetic follows the usual sum/product/chain rules
 * with coefficients in T.
 */
template <class T>
struct Dual {
    T val{};
    T der{};

    Dual() = default;
    Dual(T v, T d) : val(std::move(v)), der(std::move(d)) {}
    explicit Dual(double c) : val(T(c)), der(T(0.0)) {}
};

using DualInterval = Dual<Interval>;
using Dual2Interval = Dual<Dual<Interval>>;

template <class T>
Dual<T> operator+(const Dual<T>& a, const Dual<T>& b) {
    return {a.val + b.val, a.der + b.der};
}
template <class T>
Dual<T> operator-(const Dual<T>& a, const Dual<T>& b) {
    return {a.val - b.val, a.der - b.der};
}
template <class T>
Dual<T> operator-(const Dual<T>& a) {
    return {-a.val, -a.der};
}
template <class T>
Dual<T> operator*(const Dual<T>& a, const Dual<T>& b) {
    return {a.val * b.val, a.der * b.val + a.val * b.der};
}
template <class T>
Dual<T> operator/(const Dual<T>& a, const Dual<T>& b) {
    T q = a.val / b.val;
    return {q, (a.der - q * b.der) / b.val};
}

template <class T> Dual<T> operator+(const Dual<T>& a, double c) { return a + Dual<T>(c); }
template <class T> Dual<T> operator+(double c, const Dual<T>& a) { return Dual<T>(c) + a; }
template <class T> Dual<T> operator-(const Dual<T>& a, double c) { return a - Dual<T>(c); }
template <class T> Dual<T> operator-(double c, const Dual<T>& a) { return Dual<T>(c) - a; }
template <class T> Dual<T> operator*(const Dual<T>& a, double c) { return a * Dual<T>(c); }
template <class T> Dual<T> operator*(double c, const Dual<T>& a) { return Dual<T>(c) * a; }
template <class T> Dual<T> operator/(const Dual<T>& a, double c) { return a / Dual<T>(c); }
template <class T> Dual<T> operator/(double c, const Dual<T>& a) { return Dual<T>(c) / a; }

template <class T>
Dual<T> cos_(const Dual<T>& a) {
    return {cos_(a.val), -sin_(a.val) * a.der};
}
template <class T>
Dual<T> sin_(const Dual<T>& a) {
    return {sin_(a.val), cos_(a.val) * a.der};
}
template <class T>
Dual<T> tan_(const Dual<T>& a) {
    T t = tan_(a.val);
    return {t, (T(1.0) + t * t) * a.der};
}
template <class T>
Dual<T> log_(const Dual<T>& a) {
    return {log_(a.val), a.der / a.val};
}
template <class T>
Dual<T> exp_(const Dual<T>& a) {
    T e = exp_(a.val);
    return {e, e * a.der};
}
template <class T>
Dual<T> sqrt_(const Dual<T>& a) {
    T r = sqrt_(a.val);
    return {r, a.der / (T(2.0) * r)};
}
template <class T>
Dual<T> sqr_(const Dual<T>& a) {
    return {sqr_(a.val), T(2.0) * a.val * a.der};
}
// General power via exp(q log x): valid for x > 0, which is where dual
// evaluation is attempted; boxes touching 0 fall back to plain intervals.
template <class T>
Dual<T> pow_(const Dual<T>& a, const Dual<T>& q) {
    return exp_(q * log_(a));
}

// -- seeding helpers ---------------------------------------------------------

/// Jet of the independent variable (derivative one).
inline DualInterval dual_var(const Interval& x) { return {x, Interval(1.0)}; }
/// Jet of a constant (derivative zero).
inline DualInterval dual_const(const Interval& x) { return {x, Interval(0.0)}; }

/// Second-order seed of the independent variable for f'' extraction.
inline Dual2Interval dual2_var(const Interval& x) {
    return {{x, Interval(1.0)}, {Interval(1.0), Interval(0.0)}};
}
inline Dual2Interval dual2_const(const Interval& x) {
    return {{x, Interval(0.0)}, {Interval(0.0), Interval(0.0)}};
}

/// f''(x) enclosure from a second-order jet.
inline Interval second_derivative(const Dual2Interval& y) { return y.der.der; }

namespace detail {
template <class T> struct scalar_of { using type = T; };
template <class T> struct scalar_of<Dual<T>> { using type = typename scalar_of<T>::type; };
}  // namespace detail

/// Underlying scalar mode (double or Interval) of a possibly nested jet type.
template <class T>
using scalar_of_t = typename detail::scalar_of<T>::type;

}  // namespace riesz
