#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "riesz/exponent.hpp"
#include "riesz/torus.hpp"

namespace riesz {

enum class Direction { forward, reverse };

/// Result of a ratio-maximization run. History is the nondecreasing record of
/// (evaluation index, best ratio so far); best_ratio equals its last entry.
struct SearchState {
    TorusFunction best;
    double best_ratio = 0.0;
    long iterations = 0;
    std::vector<std::pair<long, double>> history;
};

struct SearchConfig {
    int restarts = 8;
    std::size_t grid = 0;          // 0: default quadrature grid
    double ceiling_slack = 1e-9;   // evaluated ratios must stay below C + slack
};

/**
 * Derivative-free maximization of ratio_forward (or ratio_reverse) over the
 * real/imaginary coefficient space, by Nelder-Mead restarts. Deterministic
 * for fixed seed and budget; every evaluated candidate is checked against the
 * theorem constant (exceeding it by more than ceiling_slack throws, since it
 * would indicate a computation bug rather than a discovery).
 */
SearchState maximize_ratio(const ExponentPair& pair, int degree, Direction direction, long budget,
                           std::uint64_t seed, const SearchConfig& config = {},
                           const TorusFunction* init = nullptr);

struct SweepRow {
    double p = 0.0;
    double s = 0.0;
    double constant = 0.0;
    double best_ratio = 0.0;
    double fraction = 0.0;
    std::string error;  // nonempty if this row failed
};

/// One maximize_ratio run per p (conjugate s, direction from the range of p).
std::vector<SweepRow> sweep(const std::vector<double>& p_values, int degree, long budget,
                            std::uint64_t seed, const SearchConfig& config = {});

std::string sweep_csv(const std::vector<SweepRow>& rows);

}  // namespace riesz
