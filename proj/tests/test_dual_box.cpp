#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include <riesz/box.hpp>
#include <riesz/claims.hpp>
#include <riesz/dual.hpp>

using namespace riesz;

namespace {

std::mt19937_64 rng(91);

double uniform(double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
}

// 1-D catalog functions with safe interior domains for derivative sampling
struct Fn1d {
    FnId id;
    double lo, hi;
    const ExponentPair* pair;
};

const ExponentPair kFwd = ExponentPair::conjugate_of(1.5);

std::vector<Fn1d> catalog_1d() {
    return {
        {FnId::varphi1, 1.4, 3.9, nullptr},
        {FnId::varphi1_second, 1.4, 3.9, nullptr},
        {FnId::aux_lemma, 2.0, 4.0, nullptr},
        {FnId::secant_gap, 1.35, 1.99, nullptr},
        {FnId::varphi2, 1.4, 2.5, nullptr},
        {FnId::varphi_sharp, 2.5, 4.0, nullptr},
        {FnId::omega1, 1.34, 2.0, nullptr},
        {FnId::omega2, 1.34, 2.0, nullptr},
        {FnId::g33, 2.5, 4.0, nullptr},
        {FnId::conc34, 1.34, 2.0, nullptr},
        {FnId::ratio_log35, 1.34, 2.0, nullptr},
        {FnId::psi35, 2.6, 4.0, nullptr},
        {FnId::psi21, 4.0, 16.0, nullptr},
        {FnId::omega22, 0.25, 0.5, nullptr},
        {FnId::big_F, 0.05, 0.95, &kFwd},
        {FnId::stationary_residual, 0.05, 0.95, &kFwd},
        {FnId::case_F1, 0.02, 0.48, &kFwd},
        {FnId::case_F2, 0.52, 0.95, &kFwd},
        {FnId::reverse_main, 0.05, 0.95, &kFwd},
    };
}

double eval_scalar(const Fn1d& f, double x) {
    std::vector<double> xs{x};
    return eval_fn<double>(f.id, xs, f.pair);
}

}  // namespace

TEST_CASE("dual arithmetic implements the product and chain rules") {
    // d/dx [x^2 sin x] = 2x sin x + x^2 cos x at x = 1.3
    Dual<double> x{1.3, 1.0};
    Dual<double> y = sqr_(x) * sin_(x);
    double expect = 2 * 1.3 * std::sin(1.3) + 1.3 * 1.3 * std::cos(1.3);
    CHECK(y.der == doctest::Approx(expect).epsilon(1e-14));

    // second derivative via nesting: f = exp(2x), f'' = 4 exp(2x)
    Dual<Dual<double>> z{{0.7, 1.0}, {1.0, 0.0}};
    auto w = exp_(z * Dual<Dual<double>>(2.0));
    CHECK(w.der.der == doctest::Approx(4.0 * std::exp(1.4)).epsilon(1e-13));
}

TEST_CASE("derivative enclosures contain central-difference estimates") {
    // catalog-wide soundness: 1e3 random intervals, FD at the midpoint
    const double h = 1e-6;
    long trials = 0, violations = 0;
    auto fns = catalog_1d();
    while (trials < 1000) {
        const Fn1d& f = fns[rng() % fns.size()];
        double mid = uniform(f.lo + 2 * h, f.hi - 2 * h);
        double w = uniform(1e-4, 0.05);
        Interval x(std::max(f.lo, mid - w), std::min(f.hi, mid + w));
        mid = x.mid();

        std::vector<DualInterval> xs{dual_var(x)};
        Interval der;
        try {
            der = eval_fn<DualInterval>(f.id, xs, f.pair).der;
        } catch (const domain_error&) {
            continue;
        }
        double fd = (eval_scalar(f, mid + h) - eval_scalar(f, mid - h)) / (2 * h);
        ++trials;
        if (!der.contains(fd)) {
            // FD itself carries O(h^2 f''') error; tolerate it explicitly
            double slack = 1e-6 * std::max(1.0, std::abs(fd));
            if (fd < der.lo - slack || fd > der.hi + slack) ++violations;
        }
    }
    CHECK(violations == 0);
}

TEST_CASE("second-order jets match second differences") {
    const double h = 1e-4;
    for (int k = 0; k < 200; ++k) {
        double mid = uniform(1.45, 3.85);
        Interval x(mid - 1e-5, mid + 1e-5);
        std::vector<Dual2Interval> xs{dual2_var(x)};
        Interval d2 = second_derivative(eval_fn<Dual2Interval>(FnId::varphi1, xs, nullptr));
        auto f = [](double s) {
            std::vector<double> v{s};
            return eval_fn<double>(FnId::varphi1, v, nullptr);
        };
        double fd2 = (f(mid + h) + f(mid - h) - 2 * f(mid)) / (h * h);
        CHECK(d2.lo - 1e-5 <= fd2);
        CHECK(fd2 <= d2.hi + 1e-5);
    }
}

TEST_CASE("box midpoint, width and bisection") {
    Box b({Interval(0, 1), Interval(0, 2)}, {"x", "y"});
    CHECK(b.width() == 2.0);
    CHECK(b.midpoint()[0] == doctest::Approx(0.5));
    CHECK(b.midpoint()[1] == doctest::Approx(1.0));
    CHECK(b.widest_axis() == 1);

    auto [lo_child, hi_child] = b.bisect_widest();
    CHECK(lo_child.axes[1].lo == 0.0);
    CHECK(lo_child.axes[1].hi == hi_child.axes[1].lo);  // exact shared face
    CHECK(hi_child.axes[1].hi == 2.0);
    CHECK(lo_child.axes[0].lo == 0.0);
    CHECK(lo_child.axes[0].hi == 1.0);
}

TEST_CASE("bisection covers the parent exactly (property)") {
    for (int trial = 0; trial < 2000; ++trial) {
        std::size_t dim = 1 + rng() % 3;
        std::vector<Interval> axes;
        for (std::size_t i = 0; i < dim; ++i) {
            double a = uniform(-10, 10);
            axes.push_back(Interval(a, a + uniform(1e-12, 5.0)));
        }
        Box b(axes);
        auto [l, r] = b.bisect(rng() % dim);
        for (std::size_t i = 0; i < dim; ++i) {
            CHECK(l.axes[i].lo == doctest::Approx(b.axes[i].lo));
            CHECK(r.axes[i].hi == doctest::Approx(b.axes[i].hi));
        }
        // the split axis shares its midpoint endpoint exactly
        bool found = false;
        for (std::size_t i = 0; i < dim; ++i)
            if (l.axes[i].hi != b.axes[i].hi) {
                CHECK(l.axes[i].hi == r.axes[i].lo);
                found = true;
            }
        if (!found) {
            // degenerate axis split at an endpoint; children still cover parent
            CHECK(l.axes[0].contains(l.axes[0].mid()));
        }
    }
}

TEST_CASE("scaled widest-axis selection normalizes by domain length") {
    Box b({Interval(0, 0.2), Interval(0, 1.0)});
    // raw widths pick axis 1; with scales {0.2, 2.0} axis 0 is relatively wider
    CHECK(b.widest_axis() == 1);
    CHECK(b.widest_axis({0.2, 2.0}) == 0);
}
