#include "riesz/exponent.hpp"

#include <cmath>
#include <numbers>

namespace riesz {

namespace {
constexpr double kPi = std::numbers::pi_v<double>;
}

double conjugate_exponent(double p) {
    if (!(p > 1.0)) throw domain_error("conjugate exponent requires p > 1");
    return p / (p - 1.0);
}

ExponentPair ExponentPair::with_s(double p, double s) {
    if (!(p > 1.0)) throw domain_error("exponent pair requires p > 1");
    if (!(s > 0.0)) throw domain_error("exponent pair requires s > 0");
    return {p, s, false};
}

ExponentPair ExponentPair::conjugate_of(double p) {
    return {p, conjugate_exponent(p), true};
}

double sharp_constant_forward(const ExponentPair& pair) {
    if (!(pair.p > 1.0 && pair.p <= 2.0))
        throw domain_error("forward constant requires p in (1, 2]");
    return std::pow(2.0, 1.0 / pair.s) / (2.0 * std::cos(kPi / (2.0 * pair.p)));
}

double sharp_constant_reverse(const ExponentPair& pair) {
    if (!(pair.p >= 2.0 && pair.p < 4.0))
        throw domain_error("reverse constant requires p in [2, 4)");
    return std::pow(2.0, 1.0 - 1.0 / pair.s) * std::cos(kPi / (2.0 * pair.p));
}

double s_threshold(double p) {
    if (!(p > 1.0)) throw domain_error("s threshold requires p > 1");
    double c = std::cos(kPi / (2.0 * p));
    double s = std::sin(kPi / (2.0 * p));
    return std::max(1.0 / (c * c), 1.0 / (s * s));
}

}  // namespace riesz
