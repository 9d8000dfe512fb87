#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace riesz {

class invalid_interval_error : public std::runtime_error {
public:
    explicit invalid_interval_error(const std::string& what) : std::runtime_error(what) {}
};

class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

class division_by_zero_error : public domain_error {
public:
    explicit division_by_zero_error(const std::string& what) : domain_error(what) {}
};

/// Endpoint inflation applied after every elementary operation, in ulps.
///
/// The host libm is assumed accurate to <= 1 ulp for the functions used here
/// (cos, sin, tan, exp, log, sqrt, pow on glibc); two ulps of outward slack
/// per operation keeps every enclosure sound without directed rounding.
inline constexpr int kOutwardUlps = 2;

inline double step_down(double x) {
    for (int i = 0; i < kOutwardUlps; ++i)
        x = std::nextafter(x, -std::numeric_limits<double>::infinity());
    return x;
}

inline double step_up(double x) {
    for (int i = 0; i < kOutwardUlps; ++i)
        x = std::nextafter(x, std::numeric_limits<double>::infinity());
    return x;
}

/**
 * Closed real interval [lo, hi] with outward-rounded endpoints.
 *
 * Invariants: lo <= hi and neither endpoint is NaN. Construction from NaN or
 * an inverted pair throws invalid_interval_error, so invalid values can never
 * propagate silently. Infinite endpoints are permitted and denote an
 * explicitly unbounded interval.
 */
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    Interval() = default;

    explicit Interval(double point) : Interval(point, point) {}

    Interval(double lo_, double hi_) : lo(lo_), hi(hi_) {
        if (std::isnan(lo) || std::isnan(hi))
            throw invalid_interval_error("interval endpoint is NaN");
        if (lo > hi)
            throw invalid_interval_error("interval endpoints inverted");
    }

    double width() const { return hi - lo; }
    double mid() const {
        // midpoint clamped into the interval (guards against rounding out)
        double m = 0.5 * (lo + hi);
        if (!std::isfinite(m)) m = 0.5 * lo + 0.5 * hi;
        if (m < lo) m = lo;
        if (m > hi) m = hi;
        return m;
    }

    bool contains(double x) const { return lo <= x && x <= hi; }
    bool contains(const Interval& other) const { return lo <= other.lo && other.hi <= hi; }
    bool contains_zero() const { return lo <= 0.0 && 0.0 <= hi; }
    bool is_point() const { return lo == hi; }
};

/// Enclosure of pi: [lo, hi] are adjacent doubles with lo < pi < hi.
Interval pi_interval();

/// Enclosure of 2*pi.
Interval two_pi_interval();

// -- arithmetic ------------------------------------------------------------

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);
Interval operator*(const Interval& a, const Interval& b);
Interval operator/(const Interval& a, const Interval& b);  // throws division_by_zero_error if 0 in b

inline Interval operator+(const Interval& a, double b) { return a + Interval(b); }
inline Interval operator+(double a, const Interval& b) { return Interval(a) + b; }
inline Interval operator-(const Interval& a, double b) { return a - Interval(b); }
inline Interval operator-(double a, const Interval& b) { return Interval(a) - b; }
inline Interval operator*(const Interval& a, double b) { return a * Interval(b); }
inline Interval operator*(double a, const Interval& b) { return Interval(a) * b; }
inline Interval operator/(const Interval& a, double b) { return a / Interval(b); }
inline Interval operator/(double a, const Interval& b) { return Interval(a) / b; }

/// x^2, exact monotonicity handling (result lo is 0 when 0 in x).
Interval sqr(const Interval& a);

// -- elementary enclosures ---------------------------------------------------

Interval cos(const Interval& a);
Interval sin(const Interval& a);
Interval tan(const Interval& a);   // throws domain_error when a may straddle a pole
Interval log(const Interval& a);   // requires a.lo > 0
Interval exp(const Interval& a);
Interval sqrt(const Interval& a);  // requires a.lo >= 0

/**
 * Enclosure of {x^q : x in a} for real exponent q; requires a.lo >= 0.
 *
 * 0^q = 0 for q > 0; q = 0 gives [1,1]; a containing 0 with q < 0 throws.
 * When both base and exponent lie on one side of 1 resp. 0 the result is
 * intersected with the a-priori range ([0,1] or [1,inf)), which keeps
 * enclosures of expressions like 1 - r^(s-2) sign-definite on boxes touching
 * r = 1.
 */
Interval pow(const Interval& a, double q);

/// Enclosure of {x^q : x in a, q in e}; requires a.lo >= 0 (and a.lo > 0 unless e.lo > 0).
Interval pow(const Interval& a, const Interval& e);

// -- set operations ----------------------------------------------------------

Interval hull(const Interval& a, const Interval& b);
/// Intersection; throws invalid_interval_error when empty.
Interval intersect(const Interval& a, const Interval& b);
bool disjoint(const Interval& a, const Interval& b);

}  // namespace riesz
