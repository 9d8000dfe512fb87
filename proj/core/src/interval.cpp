#include "riesz/interval.hpp"

#include <algorithm>
#include <cmath>

namespace riesz {

namespace {

const double kPiLo = 3.14159265358979311599796346854418516159057617187500;  // largest double < pi
const double kPiHi = std::nextafter(kPiLo, 4.0);

// Endpoint product with 0 * inf resolved to 0 (correct for endpoint candidates
// of a set product where one factor set is {0}).
double ep_mul(double a, double b) {
    if (a == 0.0 || b == 0.0) return 0.0;
    return a * b;
}

// Outward rounding of an IEEE-exact arithmetic result. A value of +0.0 is a
// valid lower bound (round-to-nearest preserves the sign of a nonzero exact
// result, so +0.0 means the exact value is >= 0); symmetrically -0.0 is a
// valid upper bound. Keeping zero endpoints exact is what lets enclosures of
// expressions like (1 - r^s)(1 - r^(s-1)) stay sign-definite.
double round_lo(double c) {
    if (c == 0.0 && !std::signbit(c)) return 0.0;
    return step_down(c);
}

double round_hi(double c) {
    if (c == 0.0 && std::signbit(c)) return 0.0;
    return step_up(c);
}

}  // namespace

Interval pi_interval() { return Interval(kPiLo, kPiHi); }
Interval two_pi_interval() { return Interval(step_down(2.0 * kPiLo), step_up(2.0 * kPiHi)); }

Interval operator+(const Interval& a, const Interval& b) {
    return Interval(round_lo(a.lo + b.lo), round_hi(a.hi + b.hi));
}

Interval operator-(const Interval& a, const Interval& b) {
    return Interval(round_lo(a.lo - b.hi), round_hi(a.hi - b.lo));
}

Interval operator-(const Interval& a) { return Interval(-a.hi, -a.lo); }

Interval operator*(const Interval& a, const Interval& b) {
    double c1 = ep_mul(a.lo, b.lo);
    double c2 = ep_mul(a.lo, b.hi);
    double c3 = ep_mul(a.hi, b.lo);
    double c4 = ep_mul(a.hi, b.hi);
    double lo = std::min(std::min(c1, c2), std::min(c3, c4));
    double hi = std::max(std::max(c1, c2), std::max(c3, c4));
    return Interval(round_lo(lo), round_hi(hi));
}

Interval operator/(const Interval& a, const Interval& b) {
    if (b.contains_zero())
        throw division_by_zero_error("interval division by interval containing zero");
    double c1 = a.lo / b.lo, c2 = a.lo / b.hi, c3 = a.hi / b.lo, c4 = a.hi / b.hi;
    double lo = std::min(std::min(c1, c2), std::min(c3, c4));
    double hi = std::max(std::max(c1, c2), std::max(c3, c4));
    return Interval(round_lo(lo), round_hi(hi));
}

Interval sqr(const Interval& a) {
    double l = std::abs(a.lo), h = std::abs(a.hi);
    double big = std::max(l, h);
    if (a.contains_zero()) return Interval(0.0, round_hi(big * big));
    double small = std::min(l, h);
    return Interval(std::max(0.0, round_lo(small * small)), round_hi(big * big));
}

namespace {

// Does some point k*period + offset (k integer) possibly intersect a?
// Conservative: uses the interval enclosure of pi, may answer yes for points
// just outside, never no for points inside.
bool may_contain_multiple(const Interval& a, const Interval& period, const Interval& offset) {
    if (std::abs(a.lo) > 1e15 || std::abs(a.hi) > 1e15) return true;
    double approx = period.mid(), off = offset.mid();
    long k_lo = static_cast<long>(std::floor((a.lo - off) / approx)) - 2;
    long k_hi = static_cast<long>(std::ceil((a.hi - off) / approx)) + 2;
    for (long k = k_lo; k <= k_hi; ++k) {
        Interval point = Interval(static_cast<double>(k)) * period + offset;
        if (!disjoint(point, a)) return true;
    }
    return false;
}

Interval clamp_unit(double lo, double hi) {
    return Interval(std::max(-1.0, lo), std::min(1.0, hi));
}

}  // namespace

Interval cos(const Interval& a) {
    Interval twopi = two_pi_interval();
    if (a.width() >= twopi.lo) return Interval(-1.0, 1.0);
    double c_lo = std::cos(a.lo), c_hi = std::cos(a.hi);
    double lo = step_down(std::min(c_lo, c_hi));
    double hi = step_up(std::max(c_lo, c_hi));
    // interior extrema: cos = 1 at 2k*pi, cos = -1 at (2k+1)*pi
    if (may_contain_multiple(a, twopi, Interval(0.0)))
        hi = 1.0;
    if (may_contain_multiple(a, twopi, pi_interval()))
        lo = -1.0;
    return clamp_unit(lo, hi);
}

Interval sin(const Interval& a) {
    Interval twopi = two_pi_interval();
    if (a.width() >= twopi.lo) return Interval(-1.0, 1.0);
    double s_lo = std::sin(a.lo), s_hi = std::sin(a.hi);
    double lo = step_down(std::min(s_lo, s_hi));
    double hi = step_up(std::max(s_lo, s_hi));
    Interval half_pi = pi_interval() * Interval(0.5);
    if (may_contain_multiple(a, twopi, half_pi))
        hi = 1.0;
    if (may_contain_multiple(a, twopi, -half_pi))
        lo = -1.0;
    return clamp_unit(lo, hi);
}

Interval tan(const Interval& a) {
    // poles at pi/2 + k*pi
    Interval half_pi = pi_interval() * Interval(0.5);
    if (a.width() >= pi_interval().lo ||
        may_contain_multiple(a, pi_interval(), half_pi))
        throw domain_error("tan over an interval that may straddle a pole");
    return Interval(step_down(std::tan(a.lo)), step_up(std::tan(a.hi)));
}

Interval log(const Interval& a) {
    if (a.lo <= 0.0) throw domain_error("log of interval with nonpositive lower endpoint");
    return Interval(step_down(std::log(a.lo)), step_up(std::log(a.hi)));
}

Interval exp(const Interval& a) {
    return Interval(std::max(0.0, step_down(std::exp(a.lo))), step_up(std::exp(a.hi)));
}

Interval sqrt(const Interval& a) {
    if (a.lo < 0.0) throw domain_error("sqrt of interval with negative lower endpoint");
    return Interval(std::max(0.0, step_down(std::sqrt(a.lo))), step_up(std::sqrt(a.hi)));
}

namespace {

// A-priori range refinements for x^q with x >= 0: a base on one side of 1
// with an exponent of known sign keeps the image on a known side of 1.
Interval pow_clamp(const Interval& a, double q_lo, double q_hi, Interval r) {
    double inf = std::numeric_limits<double>::infinity();
    if (a.hi <= 1.0 && q_lo >= 0.0) r = intersect(r, Interval(0.0, 1.0));
    if (a.lo >= 1.0 && q_lo >= 0.0) r = intersect(r, Interval(1.0, inf));
    if (a.hi <= 1.0 && q_hi <= 0.0 && a.lo > 0.0) r = intersect(r, Interval(1.0, inf));
    if (a.lo >= 1.0 && q_hi <= 0.0) r = intersect(r, Interval(0.0, 1.0));
    return r;
}

}  // namespace

Interval pow(const Interval& a, double q) {
    if (a.lo < 0.0) throw domain_error("pow of interval with negative lower endpoint");
    if (q == 0.0) return Interval(1.0);
    if (a.lo == 0.0) {
        if (q < 0.0) throw domain_error("pow with negative exponent on interval containing zero");
        // x^q increasing in x, 0^q = 0
        double hi = (a.hi == 0.0) ? 0.0 : step_up(std::pow(a.hi, q));
        return pow_clamp(a, q, q, Interval(0.0, std::max(0.0, hi)));
    }
    // monotone in x for fixed q
    double p_lo = std::pow(a.lo, q), p_hi = std::pow(a.hi, q);
    double lo = std::min(p_lo, p_hi), hi = std::max(p_lo, p_hi);
    return pow_clamp(a, q, q, Interval(std::max(0.0, step_down(lo)), step_up(hi)));
    // (values are strictly positive here, so the max(0, .) clamp is sound)
}

Interval pow(const Interval& a, const Interval& e) {
    if (e.is_point()) return pow(a, e.lo);
    if (a.lo < 0.0) throw domain_error("pow of interval with negative lower endpoint");
    if (a.lo == 0.0) {
        if (e.lo < 0.0)
            throw domain_error("pow with negative exponent on interval containing zero");
        if (a.hi == 0.0) return Interval(0.0, e.lo == 0.0 ? 1.0 : 0.0);
        // inf 0 (at x -> 0, q > 0); sup over corners, monotone in x for fixed
        // q >= 0; q = 0 contributes the value 1 = x^0 at the x = a.hi corner
        double c1 = std::pow(a.hi, e.lo), c2 = std::pow(a.hi, e.hi);
        double hi = step_up(std::max(c1, c2));
        return pow_clamp(a, e.lo, e.hi, Interval(0.0, std::max(0.0, hi)));
    }
    Interval r = exp(e * log(a));
    return pow_clamp(a, e.lo, e.hi, r);
}

Interval hull(const Interval& a, const Interval& b) {
    return Interval(std::min(a.lo, b.lo), std::max(a.hi, b.hi));
}

Interval intersect(const Interval& a, const Interval& b) {
    double lo = std::max(a.lo, b.lo), hi = std::min(a.hi, b.hi);
    if (lo > hi) throw invalid_interval_error("empty interval intersection");
    return Interval(lo, hi);
}

bool disjoint(const Interval& a, const Interval& b) {
    return a.hi < b.lo || b.hi < a.lo;
}

}  // namespace riesz
