#include "riesz/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace riesz {

namespace {

TorusFunction decode(const std::vector<double>& x, int degree) {
    TorusFunction f(degree);
    std::size_t k = 0;
    for (int n = -degree; n <= degree; ++n) {
        f.set_coeff(n, {x[k], x[k + 1]});
        k += 2;
    }
    return f;
}

struct Objective {
    ExponentPair pair;
    int degree;
    Direction direction;
    std::size_t grid;
    double ceiling;
    double slack;
    long evals = 0;

    double operator()(const std::vector<double>& x) {
        ++evals;
        TorusFunction f = decode(x, degree);
        if (f.is_zero(1e-14)) return 0.0;
        NormReport r = norm_report(f, pair, grid);
        double ratio = direction == Direction::forward ? r.ratio_forward : r.ratio_reverse;
        if (ratio > ceiling + slack)
            throw std::logic_error("evaluated ratio exceeds the theorem constant: " +
                                   std::to_string(ratio) + " > " + std::to_string(ceiling));
        return ratio;
    }
};

/// One Nelder-Mead run from the given start point within an evaluation budget.
double nelder_mead(Objective& obj, std::vector<double> x0, long eval_budget, double init_step,
                   std::vector<double>& best_x, double& best_v, long& global_iter,
                   std::vector<std::pair<long, double>>& history) {
    const std::size_t d = x0.size();
    const double alpha = 1.0, gamma = 2.0, rho = 0.5, sigma = 0.5;

    auto record = [&](double v, const std::vector<double>& x) {
        ++global_iter;
        if (v > best_v) {
            best_v = v;
            best_x = x;
            history.emplace_back(global_iter, best_v);
        }
    };

    long used = 0;
    auto feval = [&](const std::vector<double>& x) {
        double v = obj(x);
        ++used;
        record(v, x);
        return v;
    };

    std::vector<std::vector<double>> simplex;
    std::vector<double> values;
    simplex.push_back(x0);
    values.push_back(feval(x0));
    for (std::size_t i = 0; i < d && used < eval_budget; ++i) {
        auto xi = x0;
        xi[i] += init_step;
        simplex.push_back(xi);
        values.push_back(feval(xi));
    }

    while (used + 4 < eval_budget) {
        // maximize: order points by descending value
        std::vector<std::size_t> idx(simplex.size());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(),
                  [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });

        std::size_t worst = idx.back();
        std::size_t second_worst = idx[idx.size() - 2];
        std::size_t best = idx.front();

        std::vector<double> centroid(d, 0.0);
        for (std::size_t i : idx)
            if (i != worst)
                for (std::size_t k = 0; k < d; ++k) centroid[k] += simplex[i][k];
        for (auto& c : centroid) c /= static_cast<double>(simplex.size() - 1);

        auto reflect = centroid;
        for (std::size_t k = 0; k < d; ++k)
            reflect[k] = centroid[k] + alpha * (centroid[k] - simplex[worst][k]);
        double v_r = feval(reflect);

        if (v_r > values[best]) {
            auto expand = centroid;
            for (std::size_t k = 0; k < d; ++k)
                expand[k] = centroid[k] + gamma * (reflect[k] - centroid[k]);
            double v_e = feval(expand);
            if (v_e > v_r) {
                simplex[worst] = expand;
                values[worst] = v_e;
            } else {
                simplex[worst] = reflect;
                values[worst] = v_r;
            }
        } else if (v_r > values[second_worst]) {
            simplex[worst] = reflect;
            values[worst] = v_r;
        } else {
            auto contract = centroid;
            for (std::size_t k = 0; k < d; ++k)
                contract[k] = centroid[k] + rho * (simplex[worst][k] - centroid[k]);
            double v_c = feval(contract);
            if (v_c > values[worst]) {
                simplex[worst] = contract;
                values[worst] = v_c;
            } else {
                // shrink toward the best vertex
                for (std::size_t i = 0; i < simplex.size() && used < eval_budget; ++i) {
                    if (i == best) continue;
                    for (std::size_t k = 0; k < d; ++k)
                        simplex[i][k] =
                            simplex[best][k] + sigma * (simplex[i][k] - simplex[best][k]);
                    values[i] = feval(simplex[i]);
                }
            }
        }
    }
    return best_v;
}

}  // namespace

SearchState maximize_ratio(const ExponentPair& pair, int degree, Direction direction, long budget,
                           std::uint64_t seed, const SearchConfig& config,
                           const TorusFunction* init) {
    if (direction == Direction::forward && !(pair.p > 1.0 && pair.p <= 2.0))
        throw domain_error("forward search requires p in (1, 2]");
    if (direction == Direction::reverse && !(pair.p >= 2.0 && pair.p < 4.0))
        throw domain_error("reverse search requires p in [2, 4)");

    Objective obj{pair,
                  degree,
                  direction,
                  config.grid == 0 ? default_grid(degree) : config.grid,
                  direction == Direction::forward ? sharp_constant_forward(pair)
                                                  : sharp_constant_reverse(pair),
                  config.ceiling_slack};

    const std::size_t d = 2 * (2 * static_cast<std::size_t>(degree) + 1);
    std::mt19937_64 rng(seed);
    auto uniform = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };

    SearchState state;
    state.best = TorusFunction(degree);
    std::vector<double> best_x(d, 0.0);
    double best_v = -1.0;
    long iter = 0;

    int restarts = std::max(1, config.restarts);
    long per_restart = std::max<long>(budget / restarts, static_cast<long>(d) + 2);
    for (int r = 0; r < restarts && obj.evals < budget; ++r) {
        std::vector<double> x0(d);
        if (r == 0 && init != nullptr) {
            TorusFunction padded(degree);
            for (int n = -degree; n <= degree; ++n) padded.set_coeff(n, init->coeff(n));
            std::size_t k = 0;
            for (int n = -degree; n <= degree; ++n) {
                x0[k] = padded.coeff(n).real();
                x0[k + 1] = padded.coeff(n).imag();
                k += 2;
            }
        } else {
            for (auto& v : x0) v = 2.0 * uniform() - 1.0;
        }
        long budget_left = std::min<long>(per_restart, budget - obj.evals);
        if (budget_left < static_cast<long>(d) + 2) break;
        nelder_mead(obj, std::move(x0), budget_left, 0.25, best_x, best_v, iter, state.history);
    }

    state.iterations = obj.evals;
    state.best_ratio = best_v;
    state.best = decode(best_x, degree);
    if (state.history.empty()) state.history.emplace_back(iter, best_v);
    return state;
}

std::vector<SweepRow> sweep(const std::vector<double>& p_values, int degree, long budget,
                            std::uint64_t seed, const SearchConfig& config) {
    if (p_values.empty()) throw std::invalid_argument("sweep requires a nonempty p list");
    std::vector<SweepRow> rows;
    std::uint64_t k = 0;
    for (double p : p_values) {
        SweepRow row;
        row.p = p;
        try {
            ExponentPair pair = ExponentPair::conjugate_of(p);
            row.s = pair.s;
            Direction dir = p <= 2.0 ? Direction::forward : Direction::reverse;
            row.constant = dir == Direction::forward ? sharp_constant_forward(pair)
                                                     : sharp_constant_reverse(pair);
            SearchState st = maximize_ratio(pair, degree, dir, budget, seed + k, config);
            row.best_ratio = st.best_ratio;
            row.fraction = st.best_ratio / row.constant;
        } catch (const std::exception& e) {
            row.error = e.what();
        }
        rows.push_back(row);
        ++k;
    }
    return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream os;
    os.precision(17);
    os << "p,s,C,best_ratio,fraction,error\n";
    for (const auto& r : rows) {
        os << r.p << ',' << r.s << ',' << r.constant << ',' << r.best_ratio << ',' << r.fraction
           << ',' << r.error << '\n';
    }
    return os.str();
}

}  // namespace riesz
