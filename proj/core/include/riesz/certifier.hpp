#pragma once

#include <optional>
#include <string>
#include <vector>

#include "riesz/box.hpp"
#include "riesz/claims.hpp"
#include "riesz/exponent.hpp"

namespace riesz {

class no_sign_change_error : public domain_error {
public:
    explicit no_sign_change_error(const std::string& what) : domain_error(what) {}
};

enum class Verdict { proved, refuted, inconclusive };

const char* to_string(Verdict v);

struct Witness {
    std::vector<double> point;
    double value;
};

struct CertifierConfig {
    int max_depth = 40;
    long max_boxes = 10'000'000;
    double strictness_margin = 0.0;   // prove quantity >= margin (default: plain sign)
    int midpoint_sampling = 1;        // floating probes per box before bisection
    double refute_tolerance = 1e-12;  // witness must violate by more than this
    double anchor_tolerance = 1e-9;   // enclosure width allowed at declared-exact anchors
    double derived_shrink_delta = 1e-9;  // inward shrink at singular endpoints of derived claims
    bool use_mean_value = true;       // intersect naive enclosures with the centered form
};

/**
 * Verdict for one claim instance. min_enclosure bounds the extremum of the
 * asserted-sign quantity (the infimum for nonnegative-type claims, the
 * supremum for nonpositive-type), taken over the branch-and-bound region.
 * Exceptions record every declared-exact anchor, domain shrink and manifest
 * cofactor the verdict relies on.
 */
struct Certificate {
    std::string claim_id;
    std::optional<ExponentPair> pair;
    Box domain;
    Verdict verdict = Verdict::inconclusive;
    long boxes_processed = 0;
    int max_depth_reached = 0;
    std::optional<Witness> counterexample;
    std::optional<Interval> min_enclosure;
    double tolerance = 0.0;
    double elapsed_ms = 0.0;
    std::vector<std::string> exceptions;
    std::vector<Certificate> sub_certificates;
};

/// Certify a sign claim (nonneg/nonpos assertions).
Certificate certify_sign(const Claim& claim, const std::optional<ExponentPair>& pair,
                         const CertifierConfig& config = {});

/// Certify a monotonicity/convexity claim by lowering it to a sign claim on
/// the first or second derivative (inward-shrunk where endpoints are singular).
Certificate certify_derived(const Claim& claim, const std::optional<ExponentPair>& pair,
                            const CertifierConfig& config = {});

/// Dispatch on the claim's assertion.
Certificate certify(const Claim& claim, const std::optional<ExponentPair>& pair,
                    const CertifierConfig& config = {});

/**
 * Root bracketing by bisection. Endpoint floating evaluations must have
 * opposite signs (else no_sign_change_error). The returned interval has width
 * <= tol and its interval-mode image contains zero.
 */
Interval bracket_root(FnId fn, const Interval& bracket, const ExponentPair& pair, double tol);

/// Sign-change scan: subdivide `range` into n cells and bracket each root.
std::vector<Interval> find_roots(FnId fn, const Interval& range, const ExponentPair& pair,
                                 double tol, int n_cells = 512);

/// The acceptance grid: conjugate pairs on both theorem ranges.
std::vector<ExponentPair> default_grid();

/**
 * Run every claim of the catalog; pair-parameterized claims are instantiated
 * at each grid pair whose range tag matches. Output is ordered by
 * (claim_id, p, s) and is independent of the worker count.
 */
std::vector<Certificate> verify_all(const std::vector<Claim>& catalog,
                                    const std::vector<ExponentPair>& grid,
                                    const CertifierConfig& config = {}, int workers = 1);

/// Certificate serialization; `stable` omits elapsed_ms and tool_version.
std::string certificate_json(const Certificate& cert, bool stable = false);
std::string certificates_json(const std::vector<Certificate>& certs, bool stable = false);

/// Exit status for a batch: 0 ok, 1 unexpected refutation, 2 inconclusive.
int batch_exit_status(const std::vector<Certificate>& certs);

}  // namespace riesz
