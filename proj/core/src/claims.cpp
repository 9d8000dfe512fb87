#include "riesz/claims.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include <nlohmann/json.hpp>

namespace riesz {

namespace {

const FnInfo kFnTable[] = {
    {FnId::square, "square", 1, false},
    {FnId::phi, "phi", 2, true},
    {FnId::big_F, "big_F", 1, true},
    {FnId::big_F_prime, "big_F_prime", 1, true},
    {FnId::stationary_residual, "stationary_residual", 1, true},
    {FnId::lemma_poly, "lemma_poly", 3, false},
    {FnId::lemma_phi_p2, "lemma_phi_p2", 2, false},
    {FnId::lemma_psi_p2, "lemma_psi_p2", 2, false},
    {FnId::lemma_dp_cofactor, "lemma_dp_cofactor", 2, false},
    {FnId::psi_p2_rmono_a, "psi_p2_rmono_a", 2, false},
    {FnId::psi_p2_rmono_b, "psi_p2_rmono_b", 2, false},
    {FnId::case_F1, "case_F1", 1, true},
    {FnId::case_F2, "case_F2", 1, true},
    {FnId::varphi1, "varphi1", 1, false},
    {FnId::varphi1_second, "varphi1_second", 1, false},
    {FnId::aux_lemma, "aux_lemma", 1, false},
    {FnId::secant_gap, "secant_gap", 1, false},
    {FnId::varphi2, "varphi2", 1, false},
    {FnId::varphi_sharp, "varphi_sharp", 1, false},
    {FnId::omega1, "omega1", 1, false},
    {FnId::omega2, "omega2", 1, false},
    {FnId::g33, "g33", 1, false},
    {FnId::g33_incr_num, "g33_incr_num", 1, false},
    {FnId::g33_slope_gap, "g33_slope_gap", 1, false},
    {FnId::g33_anchor_gap, "g33_anchor_gap", 1, false},
    {FnId::conc34, "conc34", 1, false},
    {FnId::ratio_log35, "ratio_log35", 1, false},
    {FnId::psi35, "psi35", 1, false},
    {FnId::psi21, "psi21", 1, false},
    {FnId::omega22, "omega22", 1, false},
    {FnId::tangent_gap_221, "tangent_gap_221", 1, false},
    {FnId::secant_gap_221, "secant_gap_221", 1, false},
    {FnId::reverse_main, "reverse_main", 1, true},
};

Box box1(double lo, double hi, std::string name) {
    return Box({Interval(lo, hi)}, {std::move(name)});
}

Box box2(double lo0, double hi0, double lo1, double hi1, std::string n0, std::string n1) {
    return Box({Interval(lo0, hi0), Interval(lo1, hi1)}, {std::move(n0), std::move(n1)});
}

const double kFourThirds = 4.0 / 3.0;

// psi = lemma_psi_p2 <= / >= 0 certified by monotonicity in r anchored at the
// identically-zero face r = 1.
Claim make_psi_claim(bool upper_branch) {
    // upper branch: s in [2,4], psi <= 0; lower branch: s in [4/3,2], psi >= 0
    Claim deriv;
    deriv.id = upper_branch ? "C3a.psi.dr" : "C3b.psi.dr";
    deriv.fn = upper_branch ? FnId::psi_p2_rmono_a : FnId::psi_p2_rmono_b;
    deriv.domain = upper_branch ? box2(0, 1, 2, 4, "r", "s") : box2(0, 1, kFourThirds, 2, "r", "s");
    deriv.assertion = Assertion::nonneg;
    deriv.strategy = Strategy::bnb;
    deriv.citation = "Lemma 2.1 proof (sign of psi')";
    if (!upper_branch)
        deriv.notes = {"1 - r^(2-s) >= 0 is the reciprocal form of 1 - r^(s-2) <= 0"};

    Claim psi;
    psi.id = upper_branch ? "C3a.psi" : "C3b.psi";
    psi.fn = FnId::lemma_psi_p2;
    psi.domain = deriv.domain;
    psi.assertion = upper_branch ? Assertion::nonpos : Assertion::nonneg;
    psi.strategy = Strategy::monotone_anchor;
    psi.anchor_axis = 0;
    psi.anchor_at_upper = true;
    psi.deriv_sign_flipped = !upper_branch;
    psi.manifest_note = "d(psi)/dr = 2 s r (1 - r^(s-2)); the cofactor 2 s r is nonnegative";
    psi.notes = {"anchor: psi(1, s) = -2 + s - s + 2 = 0 exactly for every s"};
    psi.sub_claims = {deriv};
    psi.citation = "Lemma 2.1 proof (psi)";
    return psi;
}

// phi_p2 >= 0 (s in [2,4]) or <= 0 (s in [4/3,2]) via monotonicity in r
// anchored at phi_p2(1, s) = 0.
Claim make_phi_p2_claim(bool upper_branch) {
    Claim phi;
    phi.id = upper_branch ? "C3a.phi" : "C3b.phi";
    phi.fn = FnId::lemma_phi_p2;
    phi.domain = upper_branch ? box2(0, 1, 2, 4, "r", "s") : box2(0, 1, kFourThirds, 2, "r", "s");
    phi.assertion = upper_branch ? Assertion::nonneg : Assertion::nonpos;
    phi.strategy = Strategy::monotone_anchor;
    phi.anchor_axis = 0;
    phi.anchor_at_upper = true;
    phi.deriv_sign_flipped = false;
    phi.manifest_note =
        "d(phi_p2)/dr = (s-1) r^(s-3) psi; the cofactor (s-1) r^(s-3) is nonnegative on (0,1]";
    phi.notes = {"anchor: phi_p2(1, s) = 0 exactly for every s"};
    phi.sub_claims = {make_psi_claim(upper_branch)};
    phi.citation = "Lemma 2.1 proof (phi at p = 2)";
    return phi;
}

Claim make_c3(bool first_branch) {
    // first branch (C3a): lemma_poly <= 0 on [0,1] x [4/3,2] x [2,4]
    // second branch (C3b): lemma_poly >= 0 on [0,1] x [2,4] x [4/3,2]
    Claim dp;
    dp.id = first_branch ? "C3a.dp" : "C3b.dp";
    dp.fn = FnId::lemma_dp_cofactor;
    dp.domain = first_branch ? box2(0, 1, 2, 4, "r", "s") : box2(0, 1, kFourThirds, 2, "r", "s");
    dp.assertion = Assertion::nonneg;
    dp.strategy = Strategy::bnb;
    dp.citation = "Lemma 2.1 proof (monotonicity in p)";

    Claim c;
    c.id = first_branch ? "C3a" : "C3b";
    c.fn = FnId::lemma_poly;
    c.domain = first_branch
                   ? Box({Interval(0, 1), Interval(kFourThirds, 2), Interval(2, 4)},
                         {"r", "p", "s"})
                   : Box({Interval(0, 1), Interval(2, 4), Interval(kFourThirds, 2)},
                         {"r", "p", "s"});
    c.assertion = first_branch ? Assertion::nonpos : Assertion::nonneg;
    c.strategy = Strategy::by_sub_claims;
    c.sub_claims = {dp, make_phi_p2_claim(first_branch)};
    c.notes = {
        "d(lemma_poly)/dp = r (1-r) (1-r^s)(1-r^(s-1)) >= 0 by the dp sub-claim, so the "
        "extreme value over p is attained at p = 2",
        "lemma_poly(r, 2, s) = -2 r^2 lemma_phi_p2(r, s) identically (expanded check in tests)",
        "the r(1-r) and -2r^2 cofactors vanish exactly where lemma_poly does"};
    c.citation = first_branch ? "Lemma 2.1, first inequality" : "Lemma 2.1, second inequality";
    return c;
}

Claim make_c12_mono(bool f1) {
    Claim c;
    c.id = f1 ? "C12.f1m" : "C12.f2m";
    c.fn = f1 ? FnId::case_F1 : FnId::case_F2;
    c.domain = f1 ? box1(0, 0.5, "r") : box1(0.5, 1, "r");
    c.assertion = f1 ? Assertion::decreasing : Assertion::increasing;
    c.range = PairRange::forward;
    c.strategy = Strategy::by_sub_claims;
    c.sub_claims = {make_c3(true)};
    c.notes = {
        f1 ? "F1'(r) = (r^s+1)^(p/s-2) lemma_poly / (2^(p/s) (r-1)^2 r (r+1)^p); the cofactor "
             "is positive on (0,1), so F1' has the sign of lemma_poly, which is <= 0 for "
             "(p,s) in [4/3,2] x [2,4]"
           : "F2'(r) = -tan(pi/2p) r^(p/2-1) lemma_poly / (4 (r-r^s)^2 (1+r)^p); the cofactor "
             "-tan(pi/2p) r^(p/2-1) / (...) is negative on (0,1), so F2' = (-) x lemma_poly "
             ">= 0 for (p,s) in [4/3,2] x [2,4]"};
    c.citation = f1 ? "Section 2.1 (F1 monotone via Lemma 2.1)"
                    : "Section 2.2 (F2 monotone via Lemma 2.1)";
    return c;
}

std::vector<Claim> build_catalog() {
    std::vector<Claim> cat;
    const double pi_hi = pi_interval().hi;

    {
        Claim c;
        c.id = "C1";
        c.fn = FnId::phi;
        c.domain = box2(0, 1, -pi_hi, pi_hi, "r", "t");
        c.assertion = Assertion::nonneg;
        c.range = PairRange::forward;
        c.notes = {
            "Phi(1, pi/p) = 0 exactly: the certified enclosure of the infimum stays within "
            "the reported min_enclosure; equality makes a strict-sign proof unattainable and "
            "the verdict is reported as-is"};
        c.citation = "Section 2, two-variable reduction of the minorant inequality";
        cat.push_back(c);
    }
    {
        Claim c;
        c.id = "C2";
        c.fn = FnId::big_F;
        c.domain = box1(0, 1, "r");
        c.assertion = Assertion::nonneg;
        c.range = PairRange::forward;
        c.citation = "Section 2, inequality for F on the t = 0 boundary";
        cat.push_back(c);
    }
    cat.push_back(make_c3(true));
    cat.push_back(make_c3(false));
    {
        Claim c;
        c.id = "C4";
        c.fn = FnId::varphi1;
        c.domain = box1(2, 4, "s");
        c.assertion = Assertion::nonneg;
        c.boundary_zeros = {{0, false, 1e-6,
                             "varphi1(2) = -log 3 + 0 - 2 log sqrt(2) + log 6 = 0 exactly"}};
        c.citation = "Section 2.1, key form phi_1 >= 0 on [2,4]";
        cat.push_back(c);
    }
    {
        Claim c;
        c.id = "C5";
        c.fn = FnId::varphi1;
        c.domain = box1(kFourThirds, 2, "s");
        c.assertion = Assertion::nonpos;
        c.boundary_zeros = {{0, true, 1e-6,
                             "varphi1(2) = -log 3 + 0 - 2 log sqrt(2) + log 6 = 0 exactly"}};
        c.citation = "Section 3.1, key form phi_1 <= 0 on [4/3,2]";
        cat.push_back(c);
    }
    {
        Claim c;
        c.id = "C6";
        c.fn = FnId::aux_lemma;
        c.domain = box1(2, 4, "s");
        c.assertion = Assertion::nonpos;
        c.citation = "Lemma 2.2 (negativity)";
        cat.push_back(c);

        Claim m;
        m.id = "C6.mono";
        m.fn = FnId::aux_lemma;
        m.domain = box1(2, 4, "s");
        m.assertion = Assertion::decreasing;
        m.boundary_zeros = {{0, false, 1e-6,
                             "aux'(2) = 0 exactly: cot(pi/2) = 0 and omega(1/2) = 0"}};
        m.citation = "Lemma 2.2 (monotonicity)";
        cat.push_back(m);
    }
    {
        Claim c;
        c.id = "C7";
        c.fn = FnId::secant_gap;
        c.domain = box1(kFourThirds, 2, "p");
        c.assertion = Assertion::nonneg;
        c.boundary_zeros = {
            {0, false, 1e-6, "secant_gap(4/3) = 15/14 - 15/14 = 0 exactly (s = 4)"},
            {0, true, 1e-6, "secant_gap(2) = 3/2 - 3/2 = 0 exactly (s = 2)"}};
        c.citation = "Section 2.2, secant bound for (2^s-1)/(2^s-2)";
        cat.push_back(c);
    }
    {
        Claim c;
        c.id = "C8a";
        c.fn = FnId::varphi2;
        c.domain = box1(2, 2.5, "s");
        c.assertion = Assertion::nonneg;
        c.boundary_zeros = {{0, false, 1e-6,
                             "varphi2(2) = 0 exactly (cot(pi/4) = 1, sin(pi/4) = 2^(-1/2))"}};
        c.citation = "Section 2.2.1, second inequality for p in [5/3,2]";
        cat.push_back(c);
    }
    {
        Claim c;
        c.id = "C8b";
        c.fn = FnId::varphi_sharp;
        c.domain = box1(2.5, 4, "s");
        c.assertion = Assertion::nonneg;
        c.citation = "Section 2.2.2, second inequality for p in [4/3,5/3]";
        cat.push_back(c);
    }
    {
        Claim c;
        c.id = "C9a";
        c.fn = FnId::varphi1;
        c.domain = box1(2, 4, "s");
        c.assertion = Assertion::convex;
        c.citation = "Section 2.1, convexity of phi_1";
        cat.push_back(c);

        Claim d;
        d.id = "C9b";
        d.fn = FnId::varphi1;
        d.domain = box1(kFourThirds, 2, "s");
        d.assertion = Assertion::convex;
        d.citation = "Section 3.1, convexity of phi_1";
        cat.push_back(d);
    }
    {
        Claim c;
        c.id = "C10";
        c.fn = FnId::reverse_main;
        c.domain = box1(0, 1, "r");
        c.assertion = Assertion::nonpos;
        c.range = PairRange::reverse;
        c.citation = "Section 3, reverse scalar inequality";
        cat.push_back(c);
    }
    {
        Claim c;
        c.id = "C11.f1";
        c.fn = FnId::case_F1;
        c.domain = box1(0, 0.5, "r");
        c.assertion = Assertion::nonpos;
        c.range = PairRange::reverse;
        c.citation = "Section 3, F1 <= 0 on [0,1/2]";
        cat.push_back(c);

        Claim d;
        d.id = "C11.f2";
        d.fn = FnId::case_F2;
        d.domain = box1(0.5, 1, "r");
        d.assertion = Assertion::nonpos;
        d.range = PairRange::reverse;
        d.citation = "Section 3, F2 <= 0 on [1/2,1]";
        cat.push_back(d);
    }
    {
        Claim c;
        c.id = "C12.f1";
        c.fn = FnId::case_F1;
        c.domain = box1(0, 0.5, "r");
        c.assertion = Assertion::nonneg;
        c.range = PairRange::forward;
        c.citation = "Section 2.1, F1 >= 0 on [0,1/2]";
        cat.push_back(c);
        cat.push_back(make_c12_mono(true));

        Claim d;
        d.id = "C12.f2";
        d.fn = FnId::case_F2;
        d.domain = box1(0.5, 1, "r");
        d.assertion = Assertion::nonneg;
        d.range = PairRange::forward;
        d.citation = "Section 2.2, F2 >= 0 on [1/2,1]";
        cat.push_back(d);
        cat.push_back(make_c12_mono(false));
    }
    {
        Claim c;
        c.id = "C13a";
        c.fn = FnId::g33;
        c.domain = box1(2.5, 4, "t");
        c.assertion = Assertion::increasing;
        c.citation = "Lemma 3.3 (g increasing)";
        cat.push_back(c);

        Claim d;
        d.id = "C13b";
        d.fn = FnId::g33_slope_gap;
        d.domain = box1(2.5, 4, "t");
        d.assertion = Assertion::nonpos;
        d.notes = {"g33_slope_gap = (g'(t) - 1) (t-1)^2 t, so g' <= 1 on the domain"};
        d.citation = "Lemma 3.3 (g' <= 1)";
        cat.push_back(d);

        Claim e;
        e.id = "C13c";
        e.fn = FnId::g33_anchor_gap;
        e.domain = box1(2.5, 2.5, "t");
        e.assertion = Assertion::nonneg;
        e.citation = "Lemma 3.3 (g(5/2) >= 25/2)";
        cat.push_back(e);
    }
    {
        Claim c;
        c.id = "C14";
        c.fn = FnId::omega2;
        c.domain = box1(kFourThirds, 2, "s");
        c.assertion = Assertion::increasing;
        c.citation = "Lemma 3.2 (omega_2 increasing)";
        cat.push_back(c);
    }
    {
        Claim c;
        c.id = "C15";
        c.fn = FnId::conc34;
        c.domain = box1(kFourThirds, 2, "s");
        c.assertion = Assertion::concave;
        c.citation = "Lemma 3.4 (concavity)";
        cat.push_back(c);
    }
    {
        Claim c;
        c.id = "C16";
        c.fn = FnId::ratio_log35;
        c.domain = box1(kFourThirds, 2, "s");
        c.assertion = Assertion::convex;
        c.citation = "Lemma 3.5 (convexity)";
        cat.push_back(c);
    }
    {
        Claim c;
        c.id = "C17";
        c.fn = FnId::varphi2;
        c.domain = box1(kFourThirds, 2, "s");
        c.assertion = Assertion::nonpos;
        c.boundary_zeros = {{0, true, 1e-6,
                             "varphi2(2) = 0 exactly (cot(pi/4) = 1, sin(pi/4) = 2^(-1/2))"}};
        c.citation = "Section 3.2, phi_2 <= 0 on [4/3,2]";
        cat.push_back(c);
    }
    return cat;
}

}  // namespace

const FnInfo& fn_info(FnId id) {
    for (const auto& info : kFnTable)
        if (info.id == id) return info;
    throw std::logic_error("unknown function id");
}

FnId fn_by_name(const std::string& name) {
    for (const auto& info : kFnTable)
        if (name == info.name) return info.id;
    throw std::invalid_argument("unknown function name: " + name);
}

const std::vector<Claim>& claim_catalog() {
    static const std::vector<Claim> cat = build_catalog();
    return cat;
}

const Claim& claim_by_id(const std::string& id) {
    for (const auto& c : claim_catalog())
        if (c.id == id) return c;
    throw std::invalid_argument("unknown claim id: " + id);
}

std::vector<const Claim*> claims_by_prefix(const std::string& prefix) {
    std::vector<const Claim*> out;
    for (const auto& c : claim_catalog())
        if (c.id == prefix || c.id.rfind(prefix + ".", 0) == 0) out.push_back(&c);
    return out;
}

const char* to_string(Assertion a) {
    switch (a) {
        case Assertion::nonneg: return "nonnegative";
        case Assertion::nonpos: return "nonpositive";
        case Assertion::increasing: return "increasing";
        case Assertion::decreasing: return "decreasing";
        case Assertion::convex: return "convex";
        case Assertion::concave: return "concave";
    }
    return "?";
}

const char* to_string(PairRange r) {
    switch (r) {
        case PairRange::none: return "none";
        case PairRange::forward: return "forward";
        case PairRange::reverse: return "reverse";
    }
    return "?";
}

namespace {

nlohmann::json domain_json(const Box& b) {
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

}  // namespace

std::string claim_catalog_json() {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& c : claim_catalog()) {
        nlohmann::json e;
        e["id"] = c.id;
        e["function"] = fn_info(c.fn).name;
        e["assertion"] = to_string(c.assertion);
        e["domain"] = domain_json(c.domain);
        e["pair_range"] = to_string(c.range);
        e["citation"] = c.citation;
        if (!c.notes.empty()) e["notes"] = c.notes;
        j.push_back(e);
    }
    return j.dump(2);
}

}  // namespace riesz
