#pragma once

#include <cmath>
#include <complex>
#include <type_traits>

#include "riesz/dual.hpp"
#include "riesz/exponent.hpp"
#include "riesz/interval.hpp"
#include "riesz/modes.hpp"

namespace riesz::fns {

/**
 * Power-difference quotient q(r, sigma) = (1 - r^sigma) / (1 - r) on
 * r in [0,1], sigma > 0, extended by continuity with q(1, sigma) = sigma.
 *
 * The quotient is the singular core of the case functions and of the
 * stationary equation; interval mode avoids the 0/0 at r = 1 entirely by a
 * corner-evaluation scheme based on monotonicity:
 *   - increasing in sigma (d/dsigma = -r^sigma log r / (1-r) >= 0),
 *   - monotone in r for fixed sigma (increasing for sigma >= 1, decreasing
 *     for sigma <= 1; the derivative numerator 1 - sigma r^(sigma-1)
 *     + (sigma-1) r^sigma is one-signed on [0,1]).
 * Bounds are taken over all four (r, sigma) corners, so soundness does not
 * depend on picking the right monotonicity branch.
 */
template <class T>
T one_minus_pow_quot(const T& r, const T& sigma);

namespace detail {

inline Interval quot_point(double r, double sigma) {
    if (r == 1.0) return Interval(sigma);
    Interval rr(r);
    Interval numer = Interval(1.0) - pow(rr, sigma);
    Interval denom = Interval(1.0) - rr;
    return numer / denom;
}

}  // namespace detail

template <>
inline double one_minus_pow_quot<double>(const double& r, const double& sigma) {
    if (r == 1.0) return sigma;
    if (r == 0.0) return 1.0;
    if (r > 0.5)  // cancellation-stable path
        return std::expm1(sigma * std::log(r)) / std::expm1(std::log(r));
    return (1.0 - std::pow(r, sigma)) / (1.0 - r);
}

template <>
inline Interval one_minus_pow_quot<Interval>(const Interval& r, const Interval& sigma) {
    if (r.lo < 0.0 || r.hi > 1.0) throw domain_error("pow quotient requires r in [0,1]");
    if (!(sigma.lo > 0.0)) throw domain_error("pow quotient requires sigma > 0");
    Interval a = detail::quot_point(r.lo, sigma.lo);
    Interval b = detail::quot_point(r.hi, sigma.lo);
    Interval c = detail::quot_point(r.lo, sigma.hi);
    Interval d = detail::quot_point(r.hi, sigma.hi);
    return Interval(std::min(a.lo, b.lo), std::max(c.hi, d.hi));
}

template <class T>
T one_minus_pow_quot(const T& r, const T& sigma) {
    // jet types: raw quotient; callers keep boxes away from r = 1
    return (num<T>(1.0) - pow_(r, sigma)) / (num<T>(1.0) - r);
}

// -- scalar catalog ----------------------------------------------------------
// Every function is written once over the abstract numeric operations and is
// instantiated with double, Interval and Dual jets.

/// Phi(r, t): the two-variable reduction of the forward minorant inequality.
template <class T>
T phi(const T& r, const T& t, const LiftedPair<T>& e) {
    T half = num<T>(0.5);
    T one = num<T>(1.0);
    T pi = pi_of<T>();
    T cos_half = cos_(pi / (num<T>(2.0) * e.p));
    // 1 + r^2 + 2 r cos t written as (1-r)^2 + 2r(1+cos t): both summands are
    // nonnegative, so interval mode cannot produce a spuriously negative base
    T base = sqr_(one - r) + num<T>(2.0) * r * (one + cos_(t));
    T mean = pow_((one + pow_(r, e.s)) * half, e.p / e.s);
    T mid = pow_(base, e.p * half) / pow_(num<T>(2.0) * cos_half, e.p);
    T last = pow_(r, e.p * half) * tan_(pi / (num<T>(2.0) * e.p)) * cos_(t * e.p * half);
    return -mean + mid - last;
}

/// F(r) = Phi(r, 0) / (1+r)^p: the t = 0 slice whose sign closes Theorem 1.1.
template <class T>
T big_F(const T& r, const LiftedPair<T>& e) {
    T half = num<T>(0.5);
    T one = num<T>(1.0);
    T pi = pi_of<T>();
    T cos_half = cos_(pi / (num<T>(2.0) * e.p));
    T mean = pow_((one + pow_(r, e.s)) * half, e.p / e.s) / pow_(one + r, e.p);
    T mid = one / pow_(num<T>(2.0) * cos_half, e.p);
    T last = pow_(r, e.p * half) / pow_(one + r, e.p) * tan_(pi / (num<T>(2.0) * e.p));
    return -mean + mid - last;
}

/// Closed-form derivative of F; valid on r in (0,1).
template <class T>
T big_F_prime(const T& r, const LiftedPair<T>& e) {
    T half = num<T>(0.5);
    T one = num<T>(1.0);
    T pi = pi_of<T>();
    T quot = one_minus_pow_quot(r, e.s - one);
    T inner = quot * pow_((one + pow_(r, e.s)) * half, e.p / e.s - one) -
              pow_(r, e.p * half - one) * tan_(pi / (num<T>(2.0) * e.p));
    return e.p * half * (one - r) / pow_(one + r, e.p + one) * inner;
}

/// LHS - tan(pi/2p) of the stationary equation; roots locate F'(r) = 0.
template <class T>
T stationary_residual(const T& r, const LiftedPair<T>& e) {
    T half = num<T>(0.5);
    T one = num<T>(1.0);
    T pi = pi_of<T>();
    T lhs = one_minus_pow_quot(r, e.s - one) *
            pow_((one + pow_(r, e.s)) * half, e.p / e.s - one) * pow_(r, one - e.p * half);
    return lhs - tan_(pi / (num<T>(2.0) * e.p));
}

/// The Lemma 2.1 expression; the p-derivative of the case-function numerators.
template <class T>
T lemma_poly(const T& r, const T& p, const T& s) {
    T one = num<T>(1.0);
    T two = num<T>(2.0);
    T rs = pow_(r, s);
    return p * (one - r) * (rs - one) * (rs - r) +
           two * s * r * (pow_(r, s - one) - pow_(r, s + one)) +
           two * r * (pow_(r, two * s) - one);
}

/// lemma_poly at p = 2 factors as -2 r^2 * lemma_phi_p2.
template <class T>
T lemma_phi_p2(const T& r, const T& s) {
    T one = num<T>(1.0);
    T two = num<T>(2.0);
    return (one - pow_(r, two * s - two)) + (one - s) * (pow_(r, s - two) - pow_(r, s));
}

/// Inner monotonicity function of lemma_phi_p2: psi = -2 r^s + s r^2 - s + 2.
template <class T>
T lemma_psi_p2(const T& r, const T& s) {
    return -num<T>(2.0) * pow_(r, s) + s * sqr_(r) - s + num<T>(2.0);
}

/// (1 - r^s)(1 - r^(s-1)): d(lemma_poly)/dp divided by r(1-r).
template <class T>
T lemma_dp_cofactor(const T& r, const T& s) {
    T one = num<T>(1.0);
    return (one - pow_(r, s)) * (one - pow_(r, s - one));
}

/// 1 - r^(s-2) (sign of d(psi)/dr for s >= 2).
template <class T>
T psi_p2_rmono_a(const T& r, const T& s) {
    return num<T>(1.0) - pow_(r, s - num<T>(2.0));
}

/// 1 - r^(2-s) (reciprocal form of the same sign for s <= 2).
template <class T>
T psi_p2_rmono_b(const T& r, const T& s) {
    return num<T>(1.0) - pow_(r, num<T>(2.0) - s);
}

/// First case function (stationary replacement for r <= 1/2).
template <class T>
T case_F1(const T& r, const LiftedPair<T>& e) {
    T half = num<T>(0.5);
    T one = num<T>(1.0);
    T pi = pi_of<T>();
    T cos_half = cos_(pi / (num<T>(2.0) * e.p));
    return one / pow_(num<T>(2.0) * cos_half, e.p) -
           pow_((one + pow_(r, e.s)) * half, e.p / e.s - one) / pow_(one + r, e.p - one) *
               one_minus_pow_quot(r, e.s) * half;
}

/// Second case function (stationary replacement for r >= 1/2).
template <class T>
T case_F2(const T& r, const LiftedPair<T>& e) {
    T half = num<T>(0.5);
    T one = num<T>(1.0);
    T pi = pi_of<T>();
    T cos_half = cos_(pi / (num<T>(2.0) * e.p));
    T quot = one_minus_pow_quot(r, e.s) / one_minus_pow_quot(r, e.s - one);
    return one / pow_(num<T>(2.0) * cos_half, e.p) -
           tan_(pi / (num<T>(2.0) * e.p)) * pow_(r, e.p * half - one) /
               pow_(one + r, e.p - one) * quot * half;
}

/// The key form phi_1(s); >= 0 on [2,4], <= 0 on [4/3,2], zero exactly at s=2.
template <class T>
T varphi1(const T& s) {
    T one = num<T>(1.0);
    T two = num<T>(2.0);
    T pi = pi_of<T>();
    T t = pow_(two, s);
    return -(s - one) * log_(t - one) + (s - two) * log_(t + one) -
           s * log_(two * sin_(pi / (two * s))) + log_(num<T>(6.0));
}

/// Closed-form second derivative of varphi1.
template <class T>
T varphi1_second(const T& s) {
    T one = num<T>(1.0);
    T two = num<T>(2.0);
    T four = num<T>(4.0);
    T pi = pi_of<T>();
    T l2 = log_(two);
    T t2 = pow_(two, s);
    T t4 = sqr_(t2);
    T csc = one / sin_(pi / (two * s));
    T first = sqr_(pi) * sqr_(csc) / (four * s * sqr_(s));
    T big = -four * t4 + two * t2 * l2 + s * (two * t4 * l2 + two * l2) - t4 * num<T>(3.0) * l2 +
            four - num<T>(3.0) * l2;
    return first + t2 * l2 * big / sqr_(t4 - one);
}

/// Lemma 2.2 display: negative and decreasing on [2,4].
template <class T>
T aux_lemma(const T& s) {
    T pi = pi_of<T>();
    T four = num<T>(4.0);
    T two = num<T>(2.0);
    T sn = sin_(pi / s);
    T csc = pi / sn;
    T cot = cos_(pi / s) / sn;
    return csc * (s * (csc - four) - pi * (s - two) * cot) / s;
}

/// (9p/14 + 3/14) - (2^s - 1)/(2^s - 2) at s = p/(p-1); secant-line slack.
template <class T>
T secant_gap(const T& p) {
    T one = num<T>(1.0);
    T two = num<T>(2.0);
    T s = p / (p - one);
    T t = pow_(two, s);
    return num<T>(9.0) * p / num<T>(14.0) + num<T>(3.0) / num<T>(14.0) - (t - one) / (t - two);
}

/// Log form of F2(1/2) >= 0 (also the reverse phi_2 <= 0 form on [4/3,2]).
template <class T>
T varphi2(const T& s) {
    T one = num<T>(1.0);
    T two = num<T>(2.0);
    T pi = pi_of<T>();
    T half_angle = pi / (two * s);
    T t = pow_(two, s);
    return -s * log_(two) + log_(num<T>(2.25)) - two * s * log_(sin_(half_angle)) -
           two * (s - one) * log_(cos_(half_angle) / sin_(half_angle)) -
           two * (s - one) * log_((t - one) / (t - two));
}

/// Sharper sub-inequality of F2(1/2) >= 0 via the secant bound, s in [5/2,4].
template <class T>
T varphi_sharp(const T& s) {
    T one = num<T>(1.0);
    T two = num<T>(2.0);
    T pi = pi_of<T>();
    T half_angle = pi / (two * s);
    return -s * log_(two) + log_(num<T>(2.25)) - two * s * log_(sin_(half_angle)) -
           two * (s - one) * log_(cos_(half_angle) / sin_(half_angle)) -
           two * (s - one) *
               log_((num<T>(12.0) * s - num<T>(3.0)) / (num<T>(14.0) * (s - one)));
}

/// omega_1: the manifestly positive part of s(2^s+1) varphi1''.
template <class T>
T omega1(const T& s) {
    T two = num<T>(2.0);
    T pi = pi_of<T>();
    T csc = num<T>(1.0) / sin_(pi / (two * s));
    return sqr_(pi) / (num<T>(4.0) * sqr_(s)) * (pow_(two, s) + num<T>(1.0)) * sqr_(csc);
}

/// omega_2 := s(2^s+1) varphi1'' - omega_1, exactly by construction.
template <class T>
T omega2(const T& s) {
    return s * (pow_(num<T>(2.0), s) + num<T>(1.0)) * varphi1_second(s) - omega1(s);
}

/// Lemma 3.3 quotient g(t) on [5/2, 4].
template <class T>
T g33(const T& t) {
    T one = num<T>(1.0);
    T two = num<T>(2.0);
    T l8 = log_(num<T>(8.0));
    return (sqr_(t) * (num<T>(4.0) + l8) - two * sqr_(t) * log_(t) +
            log_(num<T>(8.0) / sqr_(t)) - t * log_(num<T>(4.0)) - num<T>(4.0)) /
           (t - one);
}

/// Numerator of g'(t) (times (t-1)^2 t); >= 0 iff g is increasing.
template <class T>
T g33_incr_num(const T& t) {
    T two = num<T>(2.0);
    return t * (log_(sqr_(t) / two) - two * (t - two) * t * log_(t)) +
           t * (two * (t - num<T>(3.0)) * t + (t - two) * t * log_(num<T>(8.0)) + two) +
           num<T>(2.0);
}

/// g33_incr_num - (t-1)^2 t; <= 0 iff g'(t) <= 1.
template <class T>
T g33_slope_gap(const T& t) {
    return g33_incr_num(t) - sqr_(t - num<T>(1.0)) * t;
}

/// Lemma 3.4 target: concave combination of the trigonometric logs.
template <class T>
T conc34(const T& s) {
    T one = num<T>(1.0);
    T two = num<T>(2.0);
    T pi = pi_of<T>();
    T half_angle = pi / (two * s);
    return -two * s * log_(two * sin_(half_angle)) -
           two * (s - one) * log_(cos_(half_angle) / sin_(half_angle));
}

/// Lemma 3.5 target: -2(s-1) log((2^s-1)/(2^s-2)), convex on [4/3,2].
template <class T>
T ratio_log35(const T& s) {
    T one = num<T>(1.0);
    T two = num<T>(2.0);
    T t = pow_(two, s);
    return -two * (s - one) * log_((t - one) / (t - two));
}

/// Lemma 3.5 auxiliary psi(t) on [2^(4/3), 4].
template <class T>
T psi35(const T& t) {
    T two = num<T>(2.0);
    return sqr_(t) * log_(t / two) - two * t * (t - num<T>(3.0)) - two * log_(t) -
           num<T>(4.0) + log_(num<T>(4.0));
}

/// Section 2.1 auxiliary psi(t) on [4, 16] (convexity of the key form).
template <class T>
T psi21(const T& t) {
    T l4 = log_(num<T>(4.0));
    T l8 = log_(num<T>(8.0));
    return -num<T>(2.0) * sqr_(sqr_(t)) + sqr_(t) * t * l4 - num<T>(4.0) * sqr_(t) * l8 +
           num<T>(8.0) * sqr_(t) * log_(t) + t * l4 + num<T>(2.0);
}

/// Lemma 2.2 innermost function omega(t) on [1/4, 1/2].
template <class T>
T omega22(const T& t) {
    T pi = pi_of<T>();
    T two = num<T>(2.0);
    return -two * pi * t + sin_(two * pi * t) - pi * cos_(pi * t) + pi;
}

/// Tangent-line slack of ratio_log35 at s = 2 (Section 2.2.1 estimate).
template <class T>
T tangent_gap_221(const T& s) {
    T two = num<T>(2.0);
    double slope = std::log(8.0 * std::cbrt(2.0) / 9.0);
    return ratio_log35(s) - (-log_(num<T>(2.25)) + num<T>(slope) * (s - two));
}

/// Secant-line slack of the concave trig part on [2, 5/2] (Section 2.2.1).
/// Zero at both endpoints, nonnegative between them.
template <class T>
T secant_gap_221(const T& s) {
    T two = num<T>(2.0);
    double slope = std::log(16.0 / 5.0 * (7.0 - 3.0 * std::sqrt(5.0)));
    // -s log 2 + log(9/4) - 2s log(sin) - 2(s-1) log(cot) == conc34(s) + s log 2 + log(9/4)
    return conc34(s) + s * log_(two) - num<T>(slope) * (s - two);
}

/// The reverse scalar inequality (Theorem 1.2 reduction), <= 0 on [0,1].
template <class T>
T reverse_main(const T& r, const LiftedPair<T>& e) {
    T half = num<T>(0.5);
    T one = num<T>(1.0);
    T pi = pi_of<T>();
    T cos_half = cos_(pi / (num<T>(2.0) * e.p));
    return pow_(one + r, e.p) / pow_(num<T>(2.0) * cos_half, e.p) -
           pow_((one + pow_(r, e.s)) * half, e.p / e.s) -
           pow_(r, e.p * half) * tan_(pi / (num<T>(2.0) * e.p));
}

/// Smoke-test function x^2.
template <class T>
T square_fn(const T& x) {
    return sqr_(x);
}

/// Complex minorant whose reduction is phi; plain floating point only
/// (complex intervals are out of scope).
double main_minorant(std::complex<double> z, std::complex<double> w, const ExponentPair& pair);

}  // namespace riesz::fns
