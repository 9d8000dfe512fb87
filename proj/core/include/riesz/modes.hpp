#pragma once

#include <numbers>

#include "riesz/dual.hpp"
#include "riesz/interval.hpp"

namespace riesz {

/**
 * Lifting of literals and pi into a numeric mode (double, Interval, or a
 * nested Dual jet). Catalog functions are written once against these.
 */
template <class T>
struct mode {
    static T constant(double c) { return T(c); }
};

template <>
struct mode<double> {
    static double constant(double c) { return c; }
    static double pi() { return std::numbers::pi_v<double>; }
};

template <>
struct mode<Interval> {
    static Interval constant(double c) { return Interval(c); }
    static Interval pi() { return pi_interval(); }
};

template <class T>
struct mode<Dual<T>> {
    static Dual<T> constant(double c) { return {mode<T>::constant(c), mode<T>::constant(0.0)}; }
    static Dual<T> pi() { return {mode<T>::pi(), mode<T>::constant(0.0)}; }
};

template <class T>
T num(double c) {
    return mode<T>::constant(c);
}

template <class T>
T pi_of() {
    return mode<T>::pi();
}

}  // namespace riesz
