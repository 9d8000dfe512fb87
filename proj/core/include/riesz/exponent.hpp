#pragma once

#include <cmath>

#include "riesz/interval.hpp"
#include "riesz/modes.hpp"

namespace riesz {

/// Hoelder conjugate p/(p-1); involution on (1, inf). Throws for p <= 1.
double conjugate_exponent(double p);

/**
 * Exponent pair (p, s). p is the Lebesgue index, s the mixing index.
 * `conjugate` records that s was derived as p/(p-1), which certification in
 * interval mode exploits by enclosing the exact conjugate.
 */
struct ExponentPair {
    double p;
    double s;
    bool conjugate = false;

    static ExponentPair with_s(double p, double s);
    static ExponentPair conjugate_of(double p);

    bool is_conjugate(double tol = 1e-12) const {
        return p > 1.0 && std::abs(s - p / (p - 1.0)) <= tol;
    }
    /// Theorem hypothesis for the forward estimate: p in (4/3, 2), 0 < s <= p/(p-1).
    bool forward_range() const {
        return p > 4.0 / 3.0 && p < 2.0 && s > 0.0 && s <= p / (p - 1.0) + 1e-12;
    }
    /// Theorem hypothesis for the reverse estimate: p in (2, 4), s >= p/(p-1).
    bool reverse_range() const {
        return p > 2.0 && p < 4.0 && s >= p / (p - 1.0) - 1e-12;
    }
};

/// 2^(1/s) / (2 cos(pi/2p)); requires p in (1, 2].
double sharp_constant_forward(const ExponentPair& pair);

/// 2^(1-1/s) cos(pi/2p); requires p in [2, 4).
double sharp_constant_reverse(const ExponentPair& pair);

/// max(sec^2(pi/2p), csc^2(pi/2p)); requires p > 1.
double s_threshold(double p);

/// The pair lifted into a numeric mode. In interval-backed modes a conjugate
/// pair's s becomes the rigorous enclosure of p/(p-1).
template <class T>
struct LiftedPair {
    T p;
    T s;
};

template <class T>
LiftedPair<T> lift_pair(const ExponentPair& pair) {
    T p = num<T>(pair.p);
    if (pair.conjugate) {
        T s = p / (p - num<T>(1.0));
        return {p, s};
    }
    return {p, num<T>(pair.s)};
}

}  // namespace riesz
