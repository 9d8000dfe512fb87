#include "riesz/certifier.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <thread>

#include <nlohmann/json.hpp>

#include "riesz/dual.hpp"
#include "riesz/version.hpp"

namespace riesz {

namespace {

using clock_type = std::chrono::steady_clock;

double ms_since(clock_type::time_point t0) {
    return std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
}

/**
 * The certified quantity: sign * d^order(fn)/dx_axis^order, normalized so the
 * assertion always reads quantity >= 0.
 */
struct Quantity {
    FnId fn;
    int order = 0;
    std::size_t axis = 0;
    double sign = 1.0;
    std::optional<ExponentPair> pair;

    const ExponentPair* pair_ptr() const { return pair ? &*pair : nullptr; }

    Interval eval_interval(const Box& b) const {
        if (order == 0) {
            std::vector<Interval> xs(b.axes.begin(), b.axes.end());
            return Interval(sign) * eval_fn<Interval>(fn, xs, pair_ptr());
        }
        if (order == 1) {
            std::vector<DualInterval> xs;
            xs.reserve(b.dim());
            for (std::size_t i = 0; i < b.dim(); ++i)
                xs.push_back(i == axis ? dual_var(b.axes[i]) : dual_const(b.axes[i]));
            return Interval(sign) * eval_fn<DualInterval>(fn, xs, pair_ptr()).der;
        }
        if (order == 2) {
            std::vector<Dual2Interval> xs;
            xs.reserve(b.dim());
            for (std::size_t i = 0; i < b.dim(); ++i)
                xs.push_back(i == axis ? dual2_var(b.axes[i]) : dual2_const(b.axes[i]));
            return Interval(sign) * second_derivative(eval_fn<Dual2Interval>(fn, xs, pair_ptr()));
        }
        throw std::logic_error("derivative order beyond 2 not supported");
    }

    /// Partial derivative enclosure of the quantity over the box, axis j.
    Interval eval_partial(const Box& b, std::size_t j) const {
        if (order == 0) {
            std::vector<DualInterval> xs;
            xs.reserve(b.dim());
            for (std::size_t i = 0; i < b.dim(); ++i)
                xs.push_back(i == j ? dual_var(b.axes[i]) : dual_const(b.axes[i]));
            return Interval(sign) * eval_fn<DualInterval>(fn, xs, pair_ptr()).der;
        }
        if (order == 1 && j == axis && b.dim() == 1) {
            std::vector<Dual2Interval> xs{dual2_var(b.axes[0])};
            return Interval(sign) * second_derivative(eval_fn<Dual2Interval>(fn, xs, pair_ptr()));
        }
        throw domain_error("centered form unavailable at this derivative order");
    }

    /// Centered (mean-value) form: q(mid) + sum_j dq/dx_j(box) (box_j - mid_j).
    Interval eval_mean_value(const Box& b) const {
        std::vector<double> mid = b.midpoint();
        Box mid_box = b;
        for (std::size_t i = 0; i < b.dim(); ++i) mid_box.axes[i] = Interval(mid[i]);
        Interval acc = eval_interval(mid_box);
        for (std::size_t j = 0; j < b.dim(); ++j) {
            if (b.axes[j].is_point()) continue;
            Interval slope = eval_partial(b, j);
            acc = acc + slope * Interval(b.axes[j].lo - mid[j], b.axes[j].hi - mid[j]);
        }
        return acc;
    }

    double eval_double(const std::vector<double>& x) const {
        if (order == 0) {
            return sign * eval_fn<double>(fn, x, pair_ptr());
        }
        if (order == 1) {
            std::vector<Dual<double>> xs;
            xs.reserve(x.size());
            for (std::size_t i = 0; i < x.size(); ++i)
                xs.push_back(i == axis ? Dual<double>{x[i], 1.0} : Dual<double>{x[i], 0.0});
            return sign * eval_fn<Dual<double>>(fn, xs, pair_ptr()).der;
        }
        std::vector<Dual<Dual<double>>> xs;
        xs.reserve(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (i == axis)
                xs.push_back({{x[i], 1.0}, {1.0, 0.0}});
            else
                xs.push_back({{x[i], 0.0}, {0.0, 0.0}});
        }
        return sign * eval_fn<Dual<Dual<double>>>(fn, xs, pair_ptr()).der.der;
    }
};

struct BnbStats {
    Verdict verdict = Verdict::proved;
    long boxes = 0;
    int max_depth = 0;
    long undecided = 0;
    std::optional<Witness> witness;
    // extremum bounds over the terminal cover (accepted + undecided boxes)
    double min_lo = std::numeric_limits<double>::infinity();
    double min_hi = std::numeric_limits<double>::infinity();
    bool any_eval = false;
    bool bound_complete = true;  // false if some terminal box had no enclosure
};

/// Deterministic pattern-search descent used to sharpen refutation witnesses.
Witness polish_witness(const Quantity& q, const Box& domain, Witness w) {
    std::vector<double> x = w.point;
    double best = w.value;
    std::vector<double> step;
    step.reserve(domain.dim());
    for (const auto& a : domain.axes) step.push_back(0.25 * std::max(a.width(), 1e-12));
    for (int round = 0; round < 60; ++round) {
        bool improved = false;
        for (std::size_t i = 0; i < x.size(); ++i) {
            for (double dir : {-1.0, 1.0}) {
                auto y = x;
                y[i] = std::clamp(y[i] + dir * step[i], domain.axes[i].lo, domain.axes[i].hi);
                double v;
                try {
                    v = q.eval_double(y);
                } catch (const domain_error&) {
                    continue;
                }
                if (std::isfinite(v) && v < best) {
                    best = v;
                    x = y;
                    improved = true;
                }
            }
        }
        if (!improved)
            for (auto& s : step) s *= 0.5;
    }
    return Witness{x, best};
}

/// Branch & bound proof of quantity >= margin over `domain`.
BnbStats bnb_sign(const Quantity& q, const Box& domain, const CertifierConfig& cfg) {
    BnbStats st;
    std::vector<double> scales;
    scales.reserve(domain.dim());
    for (const auto& a : domain.axes) scales.push_back(std::max(a.width(), 1e-300));

    std::vector<std::pair<Box, int>> stack;
    stack.emplace_back(domain, 0);

    auto note_terminal = [&st](const std::optional<Interval>& enc) {
        if (enc) {
            st.any_eval = true;
            st.min_lo = std::min(st.min_lo, enc->lo);
            st.min_hi = std::min(st.min_hi, enc->hi);
        } else {
            st.bound_complete = false;
        }
    };

    while (!stack.empty()) {
        auto [box, depth] = std::move(stack.back());
        stack.pop_back();
        ++st.boxes;
        st.max_depth = std::max(st.max_depth, depth);

        std::optional<Interval> enc;
        try {
            enc = q.eval_interval(box);
        } catch (const domain_error&) {
        }
        if (cfg.use_mean_value && q.order <= 1) {
            try {
                Interval mv = q.eval_mean_value(box);
                enc = enc ? intersect(*enc, mv) : mv;
            } catch (const domain_error&) {
            } catch (const invalid_interval_error&) {
                // intersection emptied by rounding at the boundary; keep naive
            }
        }

        if (enc) {
            if (enc->lo >= cfg.strictness_margin) {  // proved on this leaf
                note_terminal(enc);
                continue;
            }
            if (enc->hi < 0.0) {
                // entire box violates; confirm with a floating witness
                std::vector<double> mid = box.midpoint();
                double v = q.eval_double(mid);
                if (v < -cfg.refute_tolerance) {
                    st.verdict = Verdict::refuted;
                    st.witness = polish_witness(q, domain, Witness{mid, v});
                    note_terminal(enc);
                    return st;
                }
                ++st.undecided;
                note_terminal(enc);
                continue;
            }
        }

        // floating probes for a refutation witness
        for (int k = 0; k < std::max(1, cfg.midpoint_sampling); ++k) {
            std::vector<double> x = box.midpoint();
            if (k > 0) {
                // deterministic stratified offsets
                for (std::size_t i = 0; i < box.dim(); ++i) {
                    double f = std::fmod(0.6180339887498949 * (k + i + 1), 1.0);
                    x[i] = box.axes[i].lo + f * box.axes[i].width();
                }
            }
            double v;
            try {
                v = q.eval_double(x);
            } catch (const domain_error&) {
                continue;
            }
            if (std::isfinite(v) && v < -cfg.refute_tolerance) {
                st.verdict = Verdict::refuted;
                st.witness = polish_witness(q, domain, Witness{x, v});
                note_terminal(enc);
                return st;
            }
        }

        bool splittable = box.width() > 0.0;
        if (depth >= cfg.max_depth || st.boxes >= cfg.max_boxes || !splittable) {
            ++st.undecided;
            note_terminal(enc);
            continue;
        }
        auto [left, right] = box.bisect_widest(scales);
        stack.emplace_back(std::move(right), depth + 1);
        stack.emplace_back(std::move(left), depth + 1);
    }

    if (st.undecided > 0) st.verdict = Verdict::inconclusive;
    return st;
}

/// Sign required of d(quantity)/d(axis) on the sliver next to a declared zero.
double sliver_deriv_sign(bool at_upper) { return at_upper ? -1.0 : 1.0; }
// quantity >= 0 with an exact zero at the lower end needs quantity' >= 0 there
// (and <= 0 at the upper end); quantities are already normalized to >= 0.

/// Point-interval spot checks that the quantity vanishes at a declared anchor.
bool anchor_spot_check(const Quantity& q, const Box& domain, std::size_t axis, bool at_upper,
                       double tol, std::string& detail) {
    double endpoint = at_upper ? domain.axes[axis].hi : domain.axes[axis].lo;
    // sample the remaining axes at lo/mid/hi
    std::vector<std::vector<double>> samples{{}};
    for (std::size_t i = 0; i < domain.dim(); ++i) {
        std::vector<std::vector<double>> next;
        std::vector<double> choices;
        if (i == axis)
            choices = {endpoint};
        else
            choices = {domain.axes[i].lo, domain.axes[i].mid(), domain.axes[i].hi};
        for (const auto& base : samples)
            for (double c : choices) {
                auto v = base;
                v.push_back(c);
                next.push_back(std::move(v));
            }
        samples = std::move(next);
    }
    for (const auto& pt : samples) {
        Box point_box = domain;
        for (std::size_t i = 0; i < domain.dim(); ++i) point_box.axes[i] = Interval(pt[i]);
        Interval e;
        try {
            e = q.eval_interval(point_box);
        } catch (const domain_error& ex) {
            detail = std::string("anchor evaluation failed: ") + ex.what();
            return false;
        }
        if (!e.contains(0.0) || std::max(std::abs(e.lo), std::abs(e.hi)) > tol) {
            detail = "anchor enclosure [" + std::to_string(e.lo) + ", " + std::to_string(e.hi) +
                     "] not consistent with the declared exact zero";
            return false;
        }
    }
    return true;
}

Quantity make_quantity(const Claim& claim, const std::optional<ExponentPair>& pair) {
    Quantity q;
    q.fn = claim.fn;
    q.order = claim.deriv_order;
    q.axis = 0;
    q.pair = pair;
    switch (claim.assertion) {
        case Assertion::nonneg: q.sign = 1.0; break;
        case Assertion::nonpos: q.sign = -1.0; break;
        case Assertion::increasing:
            q.order += 1;
            q.sign = 1.0;
            break;
        case Assertion::decreasing:
            q.order += 1;
            q.sign = -1.0;
            break;
        case Assertion::convex:
            q.order += 2;
            q.sign = 1.0;
            break;
        case Assertion::concave:
            q.order += 2;
            q.sign = -1.0;
            break;
    }
    return q;
}

bool is_derived(Assertion a) {
    return a != Assertion::nonneg && a != Assertion::nonpos;
}

void fill_extremum_enclosure(Certificate& cert, const Claim& claim, const BnbStats& st) {
    if (!st.any_eval) return;
    if (!st.bound_complete) {
        cert.exceptions.push_back(
            "extremum enclosure omitted: some terminal boxes had no evaluable enclosure");
        return;
    }
    // stats are tracked for the normalized quantity g (asserted >= 0); report
    // in the orientation of the claim: inf f for >=0 claims, sup f for <=0.
    bool flipped = claim.assertion == Assertion::nonpos || claim.assertion == Assertion::decreasing ||
                   claim.assertion == Assertion::concave;
    if (flipped)
        cert.min_enclosure = Interval(-st.min_hi, -st.min_lo);
    else
        cert.min_enclosure = Interval(st.min_lo, st.min_hi);
}

Certificate certify_impl(const Claim& claim, const std::optional<ExponentPair>& pair,
                         const CertifierConfig& cfg);

/// bnb strategy with boundary-zero shrinks, sliver derivative checks and anchors.
Certificate certify_bnb(const Claim& claim, const std::optional<ExponentPair>& pair,
                        const CertifierConfig& cfg, Certificate cert) {
    Quantity q = make_quantity(claim, pair);
    Box work = claim.domain;

    // derived claims: shrink inward where the lowered quantity is singular
    if (is_derived(claim.assertion)) {
        for (std::size_t i = 0; i < work.dim(); ++i) {
            for (bool upper : {false, true}) {
                Box probe = work;
                double end = upper ? work.axes[i].hi : work.axes[i].lo;
                for (std::size_t k = 0; k < work.dim(); ++k)
                    probe.axes[k] = Interval(work.axes[k].mid());
                probe.axes[i] = Interval(end);
                try {
                    (void)q.eval_interval(probe);
                } catch (const domain_error&) {
                    double d = cfg.derived_shrink_delta;
                    if (upper)
                        work.axes[i] = Interval(work.axes[i].lo, work.axes[i].hi - d);
                    else
                        work.axes[i] = Interval(work.axes[i].lo + d, work.axes[i].hi);
                    cert.exceptions.push_back(
                        "derivative singular at an endpoint; domain shrunk inward by " +
                        std::to_string(d) + " on axis " + std::to_string(i));
                }
            }
        }
    }

    // declared boundary zeros: shrink, then certify the sliver by the
    // derivative sign anchored at the recorded exact zero
    for (const auto& bz : claim.boundary_zeros) {
        Interval ax = work.axes[bz.axis];
        if (bz.delta * 4.0 > ax.width())
            throw std::invalid_argument("boundary-zero sliver wider than the domain");
        Box sliver = work;
        if (bz.at_upper) {
            sliver.axes[bz.axis] = Interval(ax.hi - bz.delta, ax.hi);
            work.axes[bz.axis] = Interval(ax.lo, ax.hi - bz.delta);
        } else {
            sliver.axes[bz.axis] = Interval(ax.lo, ax.lo + bz.delta);
            work.axes[bz.axis] = Interval(ax.lo + bz.delta, ax.hi);
        }

        Quantity dq = q;
        dq.order += 1;
        dq.axis = bz.axis;
        dq.sign = q.sign * sliver_deriv_sign(bz.at_upper);
        BnbStats ds = bnb_sign(dq, sliver, cfg);
        cert.boxes_processed += ds.boxes;
        cert.max_depth_reached = std::max(cert.max_depth_reached, ds.max_depth);
        if (ds.verdict != Verdict::proved) {
            cert.verdict = Verdict::inconclusive;
            cert.exceptions.push_back("sliver derivative sign not certified near the declared "
                                      "zero (axis " + std::to_string(bz.axis) + ")");
            return cert;
        }

        std::string detail;
        if (!anchor_spot_check(q, claim.domain, bz.axis, bz.at_upper, cfg.anchor_tolerance,
                               detail)) {
            cert.verdict = Verdict::inconclusive;
            cert.exceptions.push_back(detail);
            return cert;
        }
        cert.exceptions.push_back("boundary zero at axis " + std::to_string(bz.axis) +
                                  (bz.at_upper ? " upper" : " lower") + " end: " + bz.note +
                                  "; sliver of width " + std::to_string(bz.delta) +
                                  " certified by the derivative sign");
    }

    BnbStats st = bnb_sign(q, work, cfg);
    cert.boxes_processed += st.boxes;
    cert.max_depth_reached = std::max(cert.max_depth_reached, st.max_depth);
    fill_extremum_enclosure(cert, claim, st);
    cert.verdict = st.verdict;
    if (st.witness) {
        Witness w = *st.witness;
        w.value *= q.sign;  // report the actual function value, not the normalized one
        cert.counterexample = w;
    }
    return cert;
}

Certificate certify_monotone_anchor(const Claim& claim, const std::optional<ExponentPair>& pair,
                                    const CertifierConfig& cfg, Certificate cert) {
    if (claim.sub_claims.size() != 1)
        throw std::invalid_argument("monotone_anchor claim needs exactly one derivative sub-claim");
    if (is_derived(claim.assertion))
        throw std::invalid_argument("monotone_anchor supports sign assertions only");

    // consistency of the lowering: a >= 0 claim anchored at the upper end
    // needs a nonpositive derivative, etc.
    double claim_sign = claim.assertion == Assertion::nonneg ? 1.0 : -1.0;
    double want = claim_sign * sliver_deriv_sign(claim.anchor_at_upper);
    const Claim& dsub = claim.sub_claims[0];
    double have = dsub.assertion == Assertion::nonneg ? 1.0 : -1.0;
    if (claim.deriv_sign_flipped) have = -have;
    if (want != have)
        throw std::invalid_argument("monotone_anchor derivative sub-claim sign mismatch for " +
                                    claim.id);

    Certificate child = certify_impl(dsub, pair, cfg);
    cert.boxes_processed += child.boxes_processed;
    cert.max_depth_reached = std::max(cert.max_depth_reached, child.max_depth_reached);
    bool child_ok = child.verdict == Verdict::proved;
    cert.sub_certificates.push_back(std::move(child));

    Quantity q = make_quantity(claim, pair);
    std::string detail;
    bool anchored = anchor_spot_check(q, claim.domain, claim.anchor_axis, claim.anchor_at_upper,
                                      cfg.anchor_tolerance, detail);
    if (!child_ok || !anchored) {
        cert.verdict = Verdict::inconclusive;
        if (!anchored) cert.exceptions.push_back(detail);
        return cert;
    }
    cert.verdict = Verdict::proved;
    cert.exceptions.push_back("monotone reduction: " + claim.manifest_note);
    for (const auto& n : claim.notes) cert.exceptions.push_back(n);
    return cert;
}

Certificate certify_by_sub_claims(const Claim& claim, const std::optional<ExponentPair>& pair,
                                  const CertifierConfig& cfg, Certificate cert) {
    bool all_proved = true;
    for (const auto& sub : claim.sub_claims) {
        // sub-claims of a parameterized reduction are parameter-free boxes
        Certificate child =
            certify_impl(sub, fn_info(sub.fn).uses_pair ? pair : std::optional<ExponentPair>{},
                         cfg);
        cert.boxes_processed += child.boxes_processed;
        cert.max_depth_reached = std::max(cert.max_depth_reached, child.max_depth_reached);
        all_proved = all_proved && child.verdict == Verdict::proved;
        cert.sub_certificates.push_back(std::move(child));
    }
    cert.verdict = all_proved ? Verdict::proved : Verdict::inconclusive;
    for (const auto& n : claim.notes) cert.exceptions.push_back("reduction: " + n);
    return cert;
}

Certificate certify_impl(const Claim& claim, const std::optional<ExponentPair>& pair,
                         const CertifierConfig& cfg) {
    auto t0 = clock_type::now();
    Certificate cert;
    cert.claim_id = claim.id;
    cert.pair = fn_info(claim.fn).uses_pair ? pair : std::optional<ExponentPair>{};
    cert.domain = claim.domain;
    cert.tolerance = cfg.refute_tolerance;

    switch (claim.strategy) {
        case Strategy::bnb:
            cert = certify_bnb(claim, pair, cfg, std::move(cert));
            break;
        case Strategy::monotone_anchor:
            cert = certify_monotone_anchor(claim, pair, cfg, std::move(cert));
            break;
        case Strategy::by_sub_claims:
            cert = certify_by_sub_claims(claim, pair, cfg, std::move(cert));
            break;
    }
    cert.elapsed_ms = ms_since(t0);
    return cert;
}

}  // namespace

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::proved: return "proved";
        case Verdict::refuted: return "refuted";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

Certificate certify_sign(const Claim& claim, const std::optional<ExponentPair>& pair,
                         const CertifierConfig& config) {
    if (is_derived(claim.assertion))
        throw std::invalid_argument("certify_sign expects a sign assertion");
    return certify_impl(claim, pair, config);
}

Certificate certify_derived(const Claim& claim, const std::optional<ExponentPair>& pair,
                            const CertifierConfig& config) {
    if (!is_derived(claim.assertion))
        throw std::invalid_argument("certify_derived expects a monotonicity/convexity assertion");
    return certify_impl(claim, pair, config);
}

Certificate certify(const Claim& claim, const std::optional<ExponentPair>& pair,
                    const CertifierConfig& config) {
    return certify_impl(claim, pair, config);
}

Interval bracket_root(FnId fn, const Interval& bracket, const ExponentPair& pair, double tol) {
    auto f = [&](double x) {
        std::vector<double> xs{x};
        return eval_fn<double>(fn, xs, &pair);
    };
    double a = bracket.lo, b = bracket.hi;
    double fa = f(a), fb = f(b);
    if (!(fa * fb < 0.0))
        throw no_sign_change_error("endpoint evaluations do not change sign");
    for (int i = 0; i < 200 && (b - a) > tol; ++i) {
        double m = 0.5 * (a + b);
        double fm = f(m);
        if (fm == 0.0) {
            a = std::nextafter(m, a);
            b = std::nextafter(m, b);
            break;
        }
        if (fa * fm < 0.0) {
            b = m;
            fb = fm;
        } else {
            a = m;
            fa = fm;
        }
    }
    Interval root(a, b);
    std::vector<Interval> xs{root};
    Interval image = eval_fn<Interval>(fn, xs, &pair);
    if (!image.contains(0.0))
        throw domain_error("bracketed interval's image does not contain zero");
    return root;
}

std::vector<Interval> find_roots(FnId fn, const Interval& range, const ExponentPair& pair,
                                 double tol, int n_cells) {
    auto f = [&](double x) {
        std::vector<double> xs{x};
        return eval_fn<double>(fn, xs, &pair);
    };
    std::vector<Interval> roots;
    double prev_x = range.lo, prev_v = f(prev_x);
    for (int i = 1; i <= n_cells; ++i) {
        double x = range.lo + range.width() * i / n_cells;
        double v = f(x);
        if (prev_v * v < 0.0)
            roots.push_back(bracket_root(fn, Interval(prev_x, x), pair, tol));
        prev_x = x;
        prev_v = v;
    }
    return roots;
}

std::vector<ExponentPair> default_grid() {
    std::vector<ExponentPair> grid;
    for (double p : {1.40, 1.50, 1.75, 1.90, 2.25, 2.50, 3.00, 3.75})
        grid.push_back(ExponentPair::conjugate_of(p));
    return grid;
}

std::vector<Certificate> verify_all(const std::vector<Claim>& catalog,
                                    const std::vector<ExponentPair>& grid,
                                    const CertifierConfig& config, int workers) {
    struct Instance {
        const Claim* claim;
        std::optional<ExponentPair> pair;
    };
    std::vector<Instance> instances;
    for (const auto& claim : catalog) {
        if (claim.range == PairRange::none) {
            instances.push_back({&claim, std::nullopt});
            continue;
        }
        for (const auto& pr : grid) {
            bool match = claim.range == PairRange::forward ? pr.forward_range()
                                                           : pr.reverse_range();
            if (match) instances.push_back({&claim, pr});
        }
    }
    std::stable_sort(instances.begin(), instances.end(), [](const Instance& a, const Instance& b) {
        if (a.claim->id != b.claim->id) return a.claim->id < b.claim->id;
        double ap = a.pair ? a.pair->p : -1.0, bp = b.pair ? b.pair->p : -1.0;
        if (ap != bp) return ap < bp;
        double as = a.pair ? a.pair->s : -1.0, bs = b.pair ? b.pair->s : -1.0;
        return as < bs;
    });

    std::vector<Certificate> out(instances.size());
    int n_workers = std::max(1, std::min<int>(workers, static_cast<int>(instances.size())));
    if (n_workers == 1) {
        for (std::size_t i = 0; i < instances.size(); ++i)
            out[i] = certify(*instances[i].claim, instances[i].pair, config);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(n_workers);
    for (int w = 0; w < n_workers; ++w) {
        pool.emplace_back([&] {
            while (true) {
                std::size_t i = next.fetch_add(1);
                if (i >= instances.size()) break;
                out[i] = certify(*instances[i].claim, instances[i].pair, config);
            }
        });
    }
    for (auto& t : pool) t.join();
    return out;
}

namespace {

nlohmann::json box_json(const Box& b) {
    nlohmann::json j = nlohmann::json::array();
    for (std::size_t i = 0; i < b.dim(); ++i) {
        nlohmann::json axis;
        if (!b.names.empty()) axis["name"] = b.names[i];
        axis["lo"] = b.axes[i].lo;
        axis["hi"] = b.axes[i].hi;
        j.push_back(axis);
    }
    return j;
}

nlohmann::json cert_json(const Certificate& c, bool stable) {
    nlohmann::json j;
    j["claim_id"] = c.claim_id;
    if (c.pair) {
        j["p"] = c.pair->p;
        j["s"] = c.pair->s;
        j["conjugate"] = c.pair->conjugate;
    } else {
        j["p"] = nullptr;
        j["s"] = nullptr;
    }
    j["domain"] = box_json(c.domain);
    j["verdict"] = to_string(c.verdict);
    j["boxes_processed"] = c.boxes_processed;
    j["max_depth_reached"] = c.max_depth_reached;
    if (c.counterexample) {
        j["counterexample"] = {{"point", c.counterexample->point},
                               {"value", c.counterexample->value}};
    } else {
        j["counterexample"] = nullptr;
    }
    if (c.min_enclosure)
        j["min_enclosure"] = {c.min_enclosure->lo, c.min_enclosure->hi};
    else
        j["min_enclosure"] = nullptr;
    j["tolerance"] = c.tolerance;
    if (!stable) {
        j["elapsed_ms"] = c.elapsed_ms;
        j["tool_version"] = kToolVersion;
    }
    if (!c.exceptions.empty()) j["exceptions"] = c.exceptions;
    if (!c.sub_certificates.empty()) {
        nlohmann::json subs = nlohmann::json::array();
        for (const auto& s : c.sub_certificates) subs.push_back(cert_json(s, stable));
        j["sub_certificates"] = subs;
    }
    return j;
}

}  // namespace

std::string certificate_json(const Certificate& cert, bool stable) {
    return cert_json(cert, stable).dump(2);
}

std::string certificates_json(const std::vector<Certificate>& certs, bool stable) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : certs) arr.push_back(cert_json(c, stable));
    return arr.dump(2);
}

int batch_exit_status(const std::vector<Certificate>& certs) {
    bool any_refuted = false, any_inconclusive = false;
    for (const auto& c : certs) {
        if (c.verdict == Verdict::refuted) any_refuted = true;
        if (c.verdict == Verdict::inconclusive) any_inconclusive = true;
    }
    if (any_refuted) return 1;
    if (any_inconclusive) return 2;
    return 0;
}

}  // namespace riesz
