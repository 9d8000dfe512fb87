#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "riesz/exponent.hpp"

namespace riesz {

class zero_function_error : public domain_error {
public:
    explicit zero_function_error(const std::string& what) : domain_error(what) {}
};

/**
 * Trigonometric polynomial on the unit circle, stored as the two-sided
 * coefficient sequence c[n], n in [-N, N]. Immutable in spirit: operations
 * return new values.
 */
class TorusFunction {
public:
    using cplx = std::complex<double>;

    TorusFunction() : degree_(0), coeff_(1, cplx(0.0)) {}
    explicit TorusFunction(int degree) : degree_(degree), coeff_(2 * degree + 1, cplx(0.0)) {}

    int degree() const { return degree_; }

    /// Coefficient of e^{int}; zero outside [-N, N].
    cplx coeff(int n) const {
        if (n < -degree_ || n > degree_) return cplx(0.0);
        return coeff_[static_cast<std::size_t>(n + degree_)];
    }
    void set_coeff(int n, cplx v) {
        if (n < -degree_ || n > degree_) throw domain_error("coefficient index out of range");
        coeff_[static_cast<std::size_t>(n + degree_)] = v;
    }

    bool is_zero(double tol = 0.0) const;

    /// Pointwise evaluation sum c_n e^{int}.
    cplx evaluate(double t) const;

    /// l2 norm of the coefficients (= L2 norm of the function, by Parseval).
    double coeff_l2_norm() const;

    TorusFunction operator+(const TorusFunction& other) const;

private:
    int degree_;
    std::vector<cplx> coeff_;  // index n + degree_
};

enum class Projection { plus, minus };

/// Riesz projections: `plus` keeps frequencies n >= 0, `minus` keeps n < 0.
TorusFunction project(const TorusFunction& f, Projection part);

/// In-place radix-2 FFT, sign = -1 forward / +1 inverse (unnormalized).
void fft_radix2(std::vector<std::complex<double>>& data, int sign);

/// Values of f at the M uniform grid points t_j = 2 pi j / M (M a power of two >= 2N+2).
std::vector<std::complex<double>> grid_values(const TorusFunction& f, std::size_t grid);

/// Coefficient recovery from exact grid samples (round-trip inverse of grid_values).
TorusFunction from_grid_values(const std::vector<std::complex<double>>& values, int degree);

/// Default quadrature grid: max(4096, 8N) rounded up to a power of two.
std::size_t default_grid(int degree);

/// L^p norm by uniform-grid quadrature: (mean over grid of |f|^p)^(1/p). p >= 1.
double lp_norm(const TorusFunction& f, double p, std::size_t grid = 0);

/// Mixed-quantity norm || (|P+f|^s + |P-f|^s)^(1/s) ||_p.
double mixed_norm(const TorusFunction& f, double s, double p, std::size_t grid = 0);

struct NormReport {
    double p = 0.0;
    double s = 0.0;
    double lp_norm_f = 0.0;
    double mixed_norm = 0.0;
    double ratio_forward = 0.0;
    double ratio_reverse = 0.0;
    std::size_t grid_size = 0;
};

NormReport norm_report(const TorusFunction& f, const ExponentPair& pair, std::size_t grid = 0);

double ratio_forward(const TorusFunction& f, const ExponentPair& pair, std::size_t grid = 0);
double ratio_reverse(const TorusFunction& f, const ExponentPair& pair, std::size_t grid = 0);

/**
 * Deterministic pseudo-random polynomial: coefficients are standard complex
 * Gaussians drawn from an xoshiro-seeded mt19937_64 via the polar Box-Muller
 * transform (documented, platform-independent), then normalized to l2 norm 1.
 */
TorusFunction random_polynomial(int degree, std::uint64_t seed);

/// Coefficient file format: JSON {"degree": N, "coefficients": [[n, re, im], ...]}.
std::string coefficients_json(const TorusFunction& f);
TorusFunction coefficients_from_json(const std::string& text);

/// CSV header and row for scan reports.
std::string norm_report_csv_header();
std::string norm_report_csv_row(std::uint64_t seed, int degree, const NormReport& report,
                                const ExponentPair& pair);

}  // namespace riesz
