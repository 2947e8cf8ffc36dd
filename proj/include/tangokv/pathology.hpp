#pragma once

#include <optional>
#include <vector>

#include "tangokv/oracle.hpp"
#include "tangokv/surface.hpp"
#include "tangokv/tango.hpp"

namespace tangokv {

struct CheckLine {
    std::string name;
    std::string detail;
    bool pass = false;
};

/// Boundary component of a pair (X, B): a numeric class with a rational
/// coefficient and the geometric flags the constructions guarantee.
struct PairBoundary {
    SurfaceClass cls;
    Rat coeff;
    bool smooth = true;
    bool pairwise_disjoint = true;
};

struct PairData {
    SurfaceLattice lat;
    std::vector<PairBoundary> comps;
};

struct KltVerdict {
    bool ok = false;
    std::string reason;
};

/// KLT for the configurations the constructions produce: smooth ambient,
/// smooth pairwise-disjoint components, all coefficients in [0, 1).
/// Components without the smooth/disjoint flags are out of scope.
KltVerdict klt_check(const PairData& pair);

/// Structured record of a full counterexample construction: inputs, derived
/// classes, every check with operands, the certified h^1 lower bound and the
/// split-oracle shadow value.
struct KVCertificate {
    std::string curve_id;
    long p = 0;
    Rat c;
    long q = 0;
    long genus = 0;
    long deg_l = 0;
    SurfaceLattice lat;
    SurfaceClass Cprime, Bclass, Dclass, Hclass, KX;
    std::string base_divisor_text;
    std::vector<CheckLine> checks;
    long h1_lower_bound = 0;
    std::optional<long> oracle_h1;

    bool all_pass() const {
        for (auto& ch : checks)
            if (!ch.pass) return false;
        return true;
    }
};

/// The counterexample construction on a Tango curve: boundary B = c C',
/// divisor D = qE + f^*(K_C - qL) with q = floor(cp) - 1, and the checked
/// properties (H-class identity, ampleness via the two-ray cone, KLT,
/// h^1 >= 1 via the symmetric-power subsheaf chain, E disjoint from C').
/// Requires an exact Tango report and 1/p < c < 1 with cp not an integer.
KVCertificate certify_counterexample(const CurveModel& curve, const TangoReport& report,
                                     const Rat& c);

/// The standard boundary choices: (c, q) = (1/2, (p-3)/2) for p >= 5,
/// (2/3, 0) for p = 2, (5/6, 1) for p = 3.
std::pair<Rat, long> preset_for(long p);

struct BlowupStep {
    Rat multiplicity;  // of the current boundary at the blown-up point
    Rat discrepancy;   // a = 1 - multiplicity
    long ceil_a = 0;   // contribution to the transported divisor
    Rat delta;
    Rat new_coeff;     // {-a} + delta on the exceptional curve
    Rat margin_after;  // recorded ampleness margin
};

struct TransportedCertificate {
    KVCertificate base;
    std::vector<BlowupStep> steps;
    long h1_lower_bound = 0;
    std::vector<CheckLine> checks;

    bool all_pass() const {
        if (!base.all_pass()) return false;
        for (auto& ch : checks)
            if (!ch.pass) return false;
        return true;
    }
};

/// Transports a certificate through point blow-ups with the given boundary
/// multiplicities at the centers. Discrepancies a = 1 - m must stay > -1
/// (NotLogTerminal otherwise); exceptional coefficients {-a} + delta stay
/// below 1 and the recorded ampleness margin stays positive by the
/// deterministic delta rule; h^1 is inherited through the projection
/// formula.
TransportedCertificate transport_through_blowups(const KVCertificate& cert,
                                                 const std::vector<Rat>& center_multiplicities);

/// Divisor-class identities of the Picard-rank-one contraction on
/// Raynaud-Tango data (2g - 2 = p deg L, p >= 3): p(K_X + aC') = p(p-1)E and
/// p(D + bC') = p^2 E, plus the derived facts they carry (ample canonical
/// downstairs, contracted surface not KLT).
std::vector<CheckLine> contraction_identities(long p, long genus, long deg_l);

/// Branch data for the degree-2 (p >= 3) or degree-3 (p = 2) cyclic cover:
/// N = L/2 or L/3 (integral by the integral-type gate), M = (p+1)/2 E - p f^*N
/// or E - 2 f^*N, with 2M = E + C' resp. 3M = E + C' verified.
struct CoverPlan {
    Divisor N;
    SurfaceClass M;
    int degree = 0;
    std::vector<CheckLine> checks;

    bool all_pass() const {
        for (auto& ch : checks)
            if (!ch.pass) return false;
        return true;
    }
};

CoverPlan cover_plan(const TangoReport& report, const SurfaceLattice& lat);

/// Certified minimum degree of a quotient line bundle of S^n(E) for an
/// extension of L by O with deg L < 0: n * deg L.
long sym_power_quotient_min_degree(long n, long deg_l);

enum class VerdictKind { VanishingGuaranteed, PossibleCounterexample };

enum class VanishReason {
    SectionNonPositive,        // a section of self-intersection <= 0 exists
    NoTangoAndNonAmpleSection, // n(C) <= 0 and a non-ample section exists
    LowGenus,                  // g <= 1
    CaseATrace,                // boundary on the non-positive section: inequality chain
    AmpleIntegralTwist,        // boundary absorbed, D - K_X integral ample
};

enum class Hypothesis { TangoCurve, AllSectionsAmple };

struct Verdict {
    VerdictKind kind = VerdictKind::PossibleCounterexample;
    std::optional<VanishReason> reason;
    std::optional<Hypothesis> hypothesis;
    std::vector<std::string> trace;
};

std::string vanish_reason_name(VanishReason r);
std::string hypothesis_name(Hypothesis h);

/// Decision procedure for whether Kawamata-Viehweg vanishing is guaranteed
/// on the given input. Never claims a counterexample exists; the fall-through
/// verdict only says the necessary conditions are met. D must be integral,
/// the pair KLT, and H = D - K_X - B ample (InputNotInScope when the
/// ampleness test cannot decide).
Verdict classify_vanishing(const SurfaceLattice& lat, const PairData& pair, const SurfaceClass& D,
                           const TangoReport* report);

} // namespace tangokv
