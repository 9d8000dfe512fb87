#include "riesz/torus.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

namespace riesz {

namespace {
constexpr double kPi = std::numbers::pi_v<double>;
}

bool TorusFunction::is_zero(double tol) const {
    for (const auto& c : coeff_)
        if (std::abs(c) > tol) return false;
    return true;
}

TorusFunction::cplx TorusFunction::evaluate(double t) const {
    cplx acc(0.0);
    for (int n = -degree_; n <= degree_; ++n)
        acc += coeff(n) * std::polar(1.0, n * t);
    return acc;
}

double TorusFunction::coeff_l2_norm() const {
    long double acc = 0.0L;
    for (const auto& c : coeff_) acc += static_cast<long double>(std::norm(c));
    return static_cast<double>(std::sqrt(acc));
}

TorusFunction TorusFunction::operator+(const TorusFunction& other) const {
    TorusFunction out(std::max(degree_, other.degree_));
    for (int n = -out.degree(); n <= out.degree(); ++n)
        out.set_coeff(n, coeff(n) + other.coeff(n));
    return out;
}

TorusFunction project(const TorusFunction& f, Projection part) {
    TorusFunction out(f.degree());
    for (int n = -f.degree(); n <= f.degree(); ++n) {
        bool keep = part == Projection::plus ? n >= 0 : n < 0;
        if (keep) out.set_coeff(n, f.coeff(n));
    }
    return out;
}

void fft_radix2(std::vector<std::complex<double>>& data, int sign) {
    const std::size_t n = data.size();
    if (n == 0 || (n & (n - 1)) != 0)
        throw domain_error("fft size must be a power of two");
    // bit reversal
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(data[i], data[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        double ang = sign * 2.0 * kPi / static_cast<double>(len);
        std::complex<double> wlen(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                std::complex<double> u = data[i + k];
                std::complex<double> v = data[i + k + len / 2] * w;
                data[i + k] = u + v;
                data[i + k + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
}

std::size_t default_grid(int degree) {
    std::size_t m = std::max<std::size_t>(4096, 8 * static_cast<std::size_t>(std::max(1, degree)));
    return std::bit_ceil(m);
}

namespace {

std::size_t check_grid(const TorusFunction& f, std::size_t grid) {
    if (grid == 0) grid = default_grid(f.degree());
    if ((grid & (grid - 1)) != 0) throw domain_error("grid size must be a power of two");
    if (grid < 2 * static_cast<std::size_t>(f.degree()) + 2)
        throw domain_error("grid size must be at least 2N+2");
    return grid;
}

}  // namespace

std::vector<std::complex<double>> grid_values(const TorusFunction& f, std::size_t grid) {
    grid = check_grid(f, grid);
    std::vector<std::complex<double>> a(grid, std::complex<double>(0.0));
    for (int n = 0; n <= f.degree(); ++n) a[static_cast<std::size_t>(n)] = f.coeff(n);
    for (int n = 1; n <= f.degree(); ++n) a[grid - static_cast<std::size_t>(n)] = f.coeff(-n);
    fft_radix2(a, +1);  // values[j] = sum_k a[k] e^{+2 pi i jk/M}
    return a;
}

TorusFunction from_grid_values(const std::vector<std::complex<double>>& values, int degree) {
    std::vector<std::complex<double>> a = values;
    const std::size_t m = a.size();
    if (m < 2 * static_cast<std::size_t>(degree) + 1)
        throw domain_error("grid too small to recover the requested degree");
    fft_radix2(a, -1);
    TorusFunction f(degree);
    for (int n = 0; n <= degree; ++n)
        f.set_coeff(n, a[static_cast<std::size_t>(n)] / static_cast<double>(m));
    for (int n = 1; n <= degree; ++n)
        f.set_coeff(-n, a[m - static_cast<std::size_t>(n)] / static_cast<double>(m));
    return f;
}

double lp_norm(const TorusFunction& f, double p, std::size_t grid) {
    if (p < 1.0) throw domain_error("lp_norm requires p >= 1");
    grid = check_grid(f, grid);
    auto values = grid_values(f, grid);
    long double acc = 0.0L;
    for (const auto& v : values) acc += std::pow(static_cast<long double>(std::abs(v)), p);
    acc /= static_cast<long double>(grid);
    return static_cast<double>(std::pow(acc, 1.0L / p));
}

double mixed_norm(const TorusFunction& f, double s, double p, std::size_t grid) {
    if (p < 1.0) throw domain_error("mixed_norm requires p >= 1");
    if (s <= 0.0) throw domain_error("mixed_norm requires s > 0");
    grid = check_grid(f, grid);
    auto plus = grid_values(project(f, Projection::plus), grid);
    auto minus = grid_values(project(f, Projection::minus), grid);
    long double acc = 0.0L;
    for (std::size_t j = 0; j < grid; ++j) {
        long double ap = std::abs(plus[j]);
        long double am = std::abs(minus[j]);
        long double mixed = std::pow(std::pow(ap, s) + std::pow(am, s), 1.0L / s);
        acc += std::pow(mixed, p);
    }
    acc /= static_cast<long double>(grid);
    return static_cast<double>(std::pow(acc, 1.0L / p));
}

NormReport norm_report(const TorusFunction& f, const ExponentPair& pair, std::size_t grid) {
    if (f.is_zero()) throw zero_function_error("norm ratios undefined for the zero function");
    NormReport r;
    r.p = pair.p;
    r.s = pair.s;
    r.grid_size = check_grid(f, grid);
    r.lp_norm_f = lp_norm(f, pair.p, r.grid_size);
    r.mixed_norm = mixed_norm(f, pair.s, pair.p, r.grid_size);
    r.ratio_forward = r.mixed_norm / r.lp_norm_f;
    r.ratio_reverse = r.lp_norm_f / r.mixed_norm;
    return r;
}

double ratio_forward(const TorusFunction& f, const ExponentPair& pair, std::size_t grid) {
    return norm_report(f, pair, grid).ratio_forward;
}

double ratio_reverse(const TorusFunction& f, const ExponentPair& pair, std::size_t grid) {
    return norm_report(f, pair, grid).ratio_reverse;
}

TorusFunction random_polynomial(int degree, std::uint64_t seed) {
    if (degree < 0) throw domain_error("degree must be nonnegative");
    std::mt19937_64 rng(seed);
    auto uniform = [&rng] {
        return static_cast<double>(rng() >> 11) * 0x1.0p-53;  // [0, 1)
    };
    // polar Box-Muller; mt19937_64 output is fully specified by the standard,
    // so the sequence is reproducible across platforms
    auto gaussian_pair = [&]() -> std::complex<double> {
        while (true) {
            double u = 2.0 * uniform() - 1.0;
            double v = 2.0 * uniform() - 1.0;
            double q = u * u + v * v;
            if (q > 0.0 && q < 1.0) {
                double scale = std::sqrt(-2.0 * std::log(q) / q);
                return {u * scale, v * scale};
            }
        }
    };
    TorusFunction f(degree);
    for (int n = -degree; n <= degree; ++n) f.set_coeff(n, gaussian_pair());
    double norm = f.coeff_l2_norm();
    if (norm == 0.0) return f;
    TorusFunction out(degree);
    for (int n = -degree; n <= degree; ++n) out.set_coeff(n, f.coeff(n) / norm);
    return out;
}

std::string coefficients_json(const TorusFunction& f) {
    nlohmann::json j;
    j["degree"] = f.degree();
    nlohmann::json coeffs = nlohmann::json::array();
    for (int n = -f.degree(); n <= f.degree(); ++n) {
        auto c = f.coeff(n);
        if (c != std::complex<double>(0.0))
            coeffs.push_back({n, c.real(), c.imag()});
    }
    j["coefficients"] = coeffs;
    return j.dump(2);
}

TorusFunction coefficients_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    TorusFunction f(j.at("degree").get<int>());
    for (const auto& entry : j.at("coefficients")) {
        int n = entry.at(0).get<int>();
        double re = entry.at(1).get<double>();
        double im = entry.at(2).get<double>();
        f.set_coeff(n, {re, im});
    }
    return f;
}

std::string norm_report_csv_header() {
    return "seed,N,p,s,lp_norm,mixed_norm,ratio_forward,ratio_reverse,C_forward,C_reverse,margin";
}

std::string norm_report_csv_row(std::uint64_t seed, int degree, const NormReport& r,
                                const ExponentPair& pair) {
    std::ostringstream os;
    os.precision(17);
    os << seed << ',' << degree << ',' << r.p << ',' << r.s << ',' << r.lp_norm_f << ','
       << r.mixed_norm << ',' << r.ratio_forward << ',' << r.ratio_reverse << ',';
    bool fwd = pair.p <= 2.0, rev = pair.p >= 2.0;
    double margin = 0.0;
    if (fwd) {
        double c = sharp_constant_forward(pair);
        os << c;
        margin = c - r.ratio_forward;
    }
    os << ',';
    if (rev) {
        double c = sharp_constant_reverse(pair);
        os << c;
        margin = c - r.ratio_reverse;
    }
    os << ',' << margin;
    return os.str();
}

}  // namespace riesz
