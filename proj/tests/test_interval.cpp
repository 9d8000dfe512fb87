#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <functional>
#include <random>

#include <riesz/interval.hpp>

using namespace riesz;

namespace {

std::mt19937_64 rng(20240817);

double uniform(double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
}

Interval random_interval(double lo, double hi, double max_width) {
    double a = uniform(lo, hi);
    double w = uniform(0.0, max_width);
    return Interval(a, std::min(a + w, hi));
}

}  // namespace

TEST_CASE("arithmetic encloses endpoint results") {
    Interval a(1, 2), b(3, 4);
    Interval sum = a + b;
    CHECK(sum.lo <= 4.0);
    CHECK(sum.hi >= 6.0);

    Interval prod = Interval(-1, 2) * Interval(-3, 1);
    CHECK(prod.lo <= -6.0);
    CHECK(prod.hi >= 3.0);

    Interval third = Interval(1) / Interval(3);
    CHECK(third.lo < 1.0 / 3.0);
    CHECK(third.hi > 1.0 / 3.0);
    CHECK(third.contains(1.0 / 3.0));
}

TEST_CASE("division by interval containing zero throws") {
    CHECK_THROWS_AS(Interval(1, 2) / Interval(-1, 1), division_by_zero_error);
    CHECK_THROWS_AS(Interval(1, 2) / Interval(0, 1), division_by_zero_error);
}

TEST_CASE("construction rejects NaN and inverted endpoints") {
    double nan = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(Interval(nan, 1.0), invalid_interval_error);
    CHECK_THROWS_AS(Interval(0.0, nan), invalid_interval_error);
    CHECK_THROWS_AS(Interval(2.0, 1.0), invalid_interval_error);
}

TEST_CASE("cos handles monotone branches and interior extrema") {
    double half_pi = pi_interval().hi / 2.0;
    Interval c = cos(Interval(0.0, half_pi));
    CHECK(c.lo <= 0.0);
    CHECK(c.hi >= 1.0);

    Interval s = sin(Interval(0.0, pi_interval().hi));
    CHECK(s.hi >= 1.0);  // interior maximum at pi/2 detected
    CHECK(s.lo <= 0.0);

    Interval l = log(Interval(1.0));
    CHECK(l.contains(0.0));
    CHECK(l.width() < 1e-300);
}

TEST_CASE("tan refuses intervals that may straddle a pole") {
    CHECK_THROWS_AS(tan(Interval(1.0, 2.0)), domain_error);  // pi/2 inside
    Interval t = tan(Interval(0.0, 1.0));
    CHECK(t.lo <= 0.0);
    CHECK(t.hi >= std::tan(1.0));
}

TEST_CASE("log and sqrt domain checks") {
    CHECK_THROWS_AS(log(Interval(0.0, 1.0)), domain_error);
    CHECK_THROWS_AS(log(Interval(-1.0, 1.0)), domain_error);
    CHECK_THROWS_AS(sqrt(Interval(-0.5, 1.0)), domain_error);
    CHECK(sqrt(Interval(0.0, 4.0)).contains(2.0));
}

TEST_CASE("pow examples") {
    Interval r = pow(Interval(0.25, 0.5), 0.75);
    CHECK(r.lo <= 0.35355339059327376);  // 0.25^0.75
    CHECK(r.hi >= 0.59460355750136051);  // 0.5^0.75

    Interval unit = pow(Interval(0.0, 1.0), 0.75);
    CHECK(unit.lo == 0.0);
    CHECK(unit.hi >= 1.0);

    for (double q : {-1.3, -0.5, 0.7, 2.0}) {
        Interval one = pow(Interval(1.0), q);
        CHECK(one.contains(1.0));
        CHECK(one.width() < 1e-14);
    }
    CHECK_THROWS_AS(pow(Interval(-0.1, 1.0), 2.0), domain_error);
    CHECK_THROWS_AS(pow(Interval(0.0, 1.0), -1.0), domain_error);
}

TEST_CASE("pow keeps a-priori sign bounds on [0,1] bases") {
    // these exact bounds are what the certifier's clamp-instant claims rely on
    Interval r = pow(Interval(0.0, 1.0), Interval(0.0, 2.0));
    CHECK(r.lo == 0.0);
    CHECK(r.hi == 1.0);
    Interval d = Interval(1.0) - r;
    CHECK(d.lo == 0.0);

    Interval e = pow(Interval(0.5, 1.0), Interval(-2.0, -0.5));
    CHECK(e.lo >= 1.0);
}

TEST_CASE("soundness: scalar results lie inside interval enclosures") {
    // acceptance criterion: 1e4 random intervals per operation, 100 sample
    // points each, zero violations
    struct UnaryCase {
        const char* name;
        std::function<Interval(const Interval&)> op;
        std::function<double(double)> ref;
        double lo, hi;
    };
    std::vector<UnaryCase> cases = {
        {"cos", [](const Interval& x) { return cos(x); }, [](double x) { return std::cos(x); },
         -10.0, 17.0},
        {"sin", [](const Interval& x) { return sin(x); }, [](double x) { return std::sin(x); },
         -10.0, 17.0},
        {"tan", [](const Interval& x) { return tan(x); }, [](double x) { return std::tan(x); },
         -1.5, 1.5},
        {"log", [](const Interval& x) { return log(x); }, [](double x) { return std::log(x); },
         1e-3, 50.0},
        {"exp", [](const Interval& x) { return exp(x); }, [](double x) { return std::exp(x); },
         -30.0, 30.0},
        {"sqrt", [](const Interval& x) { return sqrt(x); },
         [](double x) { return std::sqrt(x); }, 0.0, 50.0},
        {"pow^1.7", [](const Interval& x) { return pow(x, 1.7); },
         [](double x) { return std::pow(x, 1.7); }, 0.0, 20.0},
        {"pow^-0.6", [](const Interval& x) { return pow(x, -0.6); },
         [](double x) { return std::pow(x, -0.6); }, 1e-3, 20.0},
        {"sqr", [](const Interval& x) { return sqr(x); }, [](double x) { return x * x; }, -20.0,
         20.0},
    };
    for (const auto& c : cases) {
        long violations = 0;
        for (int trial = 0; trial < 10000; ++trial) {
            Interval x = random_interval(c.lo, c.hi, (c.hi - c.lo) / 16.0);
            Interval y;
            try {
                y = c.op(x);
            } catch (const domain_error&) {
                continue;  // op legitimately rejects (tan pole etc.)
            }
            for (int k = 0; k < 100; ++k) {
                double pt = uniform(x.lo, x.hi);
                double v = c.ref(pt);
                if (std::isfinite(v) && !y.contains(v)) ++violations;
            }
        }
        INFO(c.name);
        CHECK(violations == 0);
    }

    // binary ops
    long violations = 0;
    for (int trial = 0; trial < 10000; ++trial) {
        Interval a = random_interval(-50.0, 50.0, 10.0);
        Interval b = random_interval(-50.0, 50.0, 10.0);
        for (int which = 0; which < 4; ++which) {
            Interval y;
            try {
                switch (which) {
                    case 0: y = a + b; break;
                    case 1: y = a - b; break;
                    case 2: y = a * b; break;
                    default: y = a / b; break;
                }
            } catch (const division_by_zero_error&) {
                continue;
            }
            for (int k = 0; k < 25; ++k) {
                double xa = uniform(a.lo, a.hi), xb = uniform(b.lo, b.hi);
                double v = which == 0   ? xa + xb
                           : which == 1 ? xa - xb
                           : which == 2 ? xa * xb
                                        : xa / xb;
                if (std::isfinite(v) && !y.contains(v)) ++violations;
            }
        }
    }
    CHECK(violations == 0);
}

TEST_CASE("inclusion monotonicity of unary enclosures") {
    auto ops = std::vector<std::function<Interval(const Interval&)>>{
        [](const Interval& x) { return cos(x); },
        [](const Interval& x) { return sin(x); },
        [](const Interval& x) { return exp(x); },
        [](const Interval& x) { return sqr(x); },
        [](const Interval& x) { return log(x + Interval(20.0)); },
        [](const Interval& x) { return pow(x + Interval(20.0), 1.3); },
    };
    for (int trial = 0; trial < 4000; ++trial) {
        Interval outer = random_interval(-16.0, 16.0, 4.0);
        double m1 = uniform(outer.lo, outer.hi), m2 = uniform(outer.lo, outer.hi);
        Interval inner(std::min(m1, m2), std::max(m1, m2));
        for (const auto& op : ops) {
            Interval yo = op(outer), yi = op(inner);
            CHECK(yo.contains(yi));
        }
    }
}

TEST_CASE("pi enclosure brackets pi tightly") {
    Interval p = pi_interval();
    CHECK(p.lo < 3.14159265358979324);
    CHECK(p.hi > 3.14159265358979323);
    CHECK(p.width() < 1e-15);
}

TEST_CASE("hull, intersect, disjoint") {
    Interval a(0, 1), b(2, 3);
    CHECK(disjoint(a, b));
    CHECK(hull(a, b).lo == 0.0);
    CHECK(hull(a, b).hi == 3.0);
    CHECK_THROWS_AS(intersect(a, b), invalid_interval_error);
    Interval c = intersect(Interval(0, 2), Interval(1, 3));
    CHECK(c.lo == 1.0);
    CHECK(c.hi == 2.0);
}
