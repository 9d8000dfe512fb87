#include "riesz/functions.hpp"

#include <cmath>
#include <complex>
#include <numbers>

namespace riesz::fns {

double main_minorant(std::complex<double> z, std::complex<double> w, const ExponentPair& pair) {
    const double p = pair.p, s = pair.s;
    const double pi = std::numbers::pi_v<double>;
    double az = std::abs(z), aw = std::abs(w);
    double mean = std::pow((std::pow(az, s) + std::pow(aw, s)) / 2.0, p / s);
    double cos_half = std::cos(pi / (2.0 * p));
    double mid = std::pow(std::abs(z + std::conj(w)), p) / std::pow(2.0 * cos_half, p);
    // principal branch of (zw)^(p/2)
    std::complex<double> zw = z * w;
    double last = 0.0;
    if (zw != std::complex<double>(0.0, 0.0))
        last = std::tan(pi / (2.0 * p)) * std::real(std::pow(zw, p / 2.0));
    return -mean + mid - last;
}

}  // namespace riesz::fns
