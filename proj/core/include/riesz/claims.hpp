#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "riesz/box.hpp"
#include "riesz/exponent.hpp"
#include "riesz/functions.hpp"

namespace riesz {

/// Identifier of a catalog function (arity and pair usage in fn_info).
enum class FnId {
    square,
    phi,
    big_F,
    big_F_prime,
    stationary_residual,
    lemma_poly,
    lemma_phi_p2,
    lemma_psi_p2,
    lemma_dp_cofactor,
    psi_p2_rmono_a,
    psi_p2_rmono_b,
    case_F1,
    case_F2,
    varphi1,
    varphi1_second,
    aux_lemma,
    secant_gap,
    varphi2,
    varphi_sharp,
    omega1,
    omega2,
    g33,
    g33_incr_num,
    g33_slope_gap,
    g33_anchor_gap,
    conc34,
    ratio_log35,
    psi35,
    psi21,
    omega22,
    tangent_gap_221,
    secant_gap_221,
    reverse_main,
};

struct FnInfo {
    FnId id;
    const char* name;
    int arity;
    bool uses_pair;
};

const FnInfo& fn_info(FnId id);
FnId fn_by_name(const std::string& name);

/// Generic evaluation of a catalog function in any numeric mode.
template <class T>
T eval_fn(FnId id, std::span<const T> x, const ExponentPair* pair) {
    const FnInfo& info = fn_info(id);
    if (static_cast<int>(x.size()) != info.arity)
        throw std::invalid_argument(std::string("arity mismatch for ") + info.name);
    if (info.uses_pair && pair == nullptr)
        throw std::invalid_argument(std::string(info.name) + " requires an exponent pair");

    LiftedPair<T> e{};
    if (info.uses_pair) e = lift_pair<T>(*pair);

    using namespace fns;
    switch (id) {
        case FnId::square: return square_fn(x[0]);
        case FnId::phi: return fns::phi(x[0], x[1], e);
        case FnId::big_F: return big_F(x[0], e);
        case FnId::big_F_prime: return big_F_prime(x[0], e);
        case FnId::stationary_residual: return stationary_residual(x[0], e);
        case FnId::lemma_poly: return lemma_poly(x[0], x[1], x[2]);
        case FnId::lemma_phi_p2: return lemma_phi_p2(x[0], x[1]);
        case FnId::lemma_psi_p2: return lemma_psi_p2(x[0], x[1]);
        case FnId::lemma_dp_cofactor: return lemma_dp_cofactor(x[0], x[1]);
        case FnId::psi_p2_rmono_a: return psi_p2_rmono_a(x[0], x[1]);
        case FnId::psi_p2_rmono_b: return psi_p2_rmono_b(x[0], x[1]);
        case FnId::case_F1: return case_F1(x[0], e);
        case FnId::case_F2: return case_F2(x[0], e);
        case FnId::varphi1: return varphi1(x[0]);
        case FnId::varphi1_second: return varphi1_second(x[0]);
        case FnId::aux_lemma: return aux_lemma(x[0]);
        case FnId::secant_gap: return fns::secant_gap(x[0]);
        case FnId::varphi2: return varphi2(x[0]);
        case FnId::varphi_sharp: return varphi_sharp(x[0]);
        case FnId::omega1: return omega1(x[0]);
        case FnId::omega2: return omega2(x[0]);
        case FnId::g33: return g33(x[0]);
        case FnId::g33_incr_num: return g33_incr_num(x[0]);
        case FnId::g33_slope_gap: return g33_slope_gap(x[0]);
        case FnId::g33_anchor_gap: return g33(x[0]) - num<T>(12.5);
        case FnId::conc34: return conc34(x[0]);
        case FnId::ratio_log35: return ratio_log35(x[0]);
        case FnId::psi35: return psi35(x[0]);
        case FnId::psi21: return psi21(x[0]);
        case FnId::omega22: return omega22(x[0]);
        case FnId::tangent_gap_221: return tangent_gap_221(x[0]);
        case FnId::secant_gap_221: return secant_gap_221(x[0]);
        case FnId::reverse_main: return reverse_main(x[0], e);
    }
    throw std::logic_error("unknown function id");
}

enum class Assertion { nonneg, nonpos, increasing, decreasing, convex, concave };
enum class PairRange { none, forward, reverse };

/// How a claim is certified.
enum class Strategy {
    bnb,              // branch & bound, with declared boundary zeros handled by
                      // domain shrink + sliver derivative sign + exact anchor
    monotone_anchor,  // derivative sign over the full box (certified by the
                      // first sub-claim, possibly through a recorded manifest
                      // cofactor) plus an exactly-zero anchor face
    by_sub_claims,    // conjunction of sub-claims plus a recorded reduction
};

/// A declared exact zero of the certified quantity at a domain endpoint/face.
struct BoundaryZero {
    std::size_t axis = 0;
    bool at_upper = false;
    double delta = 1e-6;  // width of the sliver covered by the derivative-sign argument
    std::string note;     // closed-form reason the endpoint value is exactly zero
};

/**
 * Catalog entry: one inequality of the scalar layer, bound to its evaluable
 * function, domain box, asserted sign/shape and source citation.
 */
struct Claim {
    std::string id;
    FnId fn = FnId::square;
    int deriv_order = 0;  // certified quantity: fn, fn' or fn'' (1-D claims only for > 0)
    Box domain;
    Assertion assertion = Assertion::nonneg;
    PairRange range = PairRange::none;
    Strategy strategy = Strategy::bnb;
    std::vector<BoundaryZero> boundary_zeros;

    // monotone_anchor fields: sub_claims[0] certifies the derivative sign
    std::size_t anchor_axis = 0;
    bool anchor_at_upper = true;
    bool deriv_sign_flipped = false;  // sub-claim certifies the negated derivative sign
    std::string manifest_note;        // positive-cofactor factorization justifying the lowering

    std::vector<Claim> sub_claims;
    std::vector<std::string> notes;
    std::string citation;
};

/// The fixed claim catalog (C1 .. C17 plus compound-assertion sub-entries).
const std::vector<Claim>& claim_catalog();

/// Catalog entry by exact id; throws if absent.
const Claim& claim_by_id(const std::string& id);

/// All claims whose id equals `prefix` or starts with `prefix` + ".".
std::vector<const Claim*> claims_by_prefix(const std::string& prefix);

/// Claim catalog as a JSON document (id, citation, domain, assertion, ...).
std::string claim_catalog_json();

const char* to_string(Assertion a);
const char* to_string(PairRange r);

}  // namespace riesz
