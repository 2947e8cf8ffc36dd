#include "tangokv/pathology.hpp"

#include <algorithm>

namespace tangokv {

namespace {
CheckLine line(std::string name, std::string detail, bool pass) {
    return CheckLine{std::move(name), std::move(detail), pass};
}
} // namespace

KltVerdict klt_check(const PairData& pair) {
    for (const auto& comp : pair.comps) {
        if (!comp.smooth || !comp.pairwise_disjoint)
            throw UnsupportedConfiguration(
                "klt_check handles only smooth pairwise-disjoint boundary components");
        if (comp.coeff < Rat(0))
            throw UnsupportedConfiguration("boundary coefficients must be >= 0");
    }
    for (const auto& comp : pair.comps)
        if (!(comp.coeff < Rat(1)))
            return {false, "coefficient " + comp.coeff.str() + " is not < 1"};
    return {true, "smooth disjoint boundary with all coefficients < 1"};
}

std::pair<Rat, long> preset_for(long p) {
    if (p == 2) return {Rat(2, 3), 0};
    if (p == 3) return {Rat(5, 6), 1};
    if (p >= 5) return {Rat(1, 2), (p - 3) / 2};
    throw ParamViolation("preset needs a prime p >= 2");
}

KVCertificate certify_counterexample(const CurveModel& curve, const TangoReport& report,
                                     const Rat& c) {
    if (!report.is_tango)
        throw NotTango(report.curve_id + " is not certified Tango (n_lower = " +
                       std::to_string(report.n_lower) + ")");
    if (!report.exact)
        throw PreconditionViolation("construction needs an exact Tango interval");
    if (!report.base_divisor)
        throw PreconditionViolation("construction needs a base divisor");
    long p = report.p;
    if (!(Rat(1, p) < c && c < Rat(1)))
        throw PreconditionViolation("need 1/p < c < 1, got c = " + c.str());
    Rat cp = c * Rat(p);
    if (cp.is_integer())
        throw PreconditionViolation("need cp not an integer, got cp = " + cp.str());

    KVCertificate cert;
    cert.curve_id = report.curve_id;
    cert.p = p;
    cert.c = c;
    cert.genus = report.genus;
    Rat degL = report.base_divisor->degree();
    if (!degL.is_integer() || degL <= Rat(0))
        throw PreconditionViolation("base divisor degree must be a positive integer");
    cert.deg_l = degL.num();
    cert.base_divisor_text = report.base_divisor->str();
    long d = cert.deg_l;
    long g = cert.genus;

    cert.lat = SurfaceLattice::tango_bundle(g, p, d);
    cert.q = cp.floor() - 1;
    cert.Cprime = SurfaceClass(Rat(p), Rat(-p * d));
    cert.Bclass = cert.Cprime * c;
    cert.Dclass = SurfaceClass(Rat(cert.q), Rat(2 * g - 2 - cert.q * d));
    cert.KX = canonical_class(cert.lat);
    cert.Hclass = cert.Dclass - cert.KX - cert.Bclass;

    cert.checks.push_back(line("q-nonnegative-integer",
                               "q = floor(cp) - 1 = " + std::to_string(cert.q), cert.q >= 0));

    // H = ([cp]+1-cp) E + (cp-[cp]) f*L, coordinate-wise
    Rat fl(cp.floor());
    SurfaceClass hexp = SurfaceLattice::E() * (fl + Rat(1) - cp) +
                        SurfaceLattice::base_pull((cp - fl) * Rat(d));
    cert.checks.push_back(line("h-class-identity",
                               "H = " + cert.Hclass.str() + ", expected " + hexp.str(),
                               cert.Hclass == hexp));

    AmpleVerdict av = ample_test(cert.Hclass, cert.lat);
    cert.checks.push_back(line("cone-criterion-ample", av.reason, av.ample()));

    PairData pair{cert.lat, {PairBoundary{cert.Cprime, c, true, true}}};
    KltVerdict kv = klt_check(pair);
    cert.checks.push_back(line("klt", kv.reason, kv.ok));

    // pushforward twist: D - f*K_C = q(E - dF), so f_* O(D - f*K_C) is the
    // q-th symmetric power twisted by L^{-q}; L^q is its quotient through
    // the defining extension, so H^0 of the dual contains H^0(O_C) = k.
    SurfaceClass twist = cert.Dclass - SurfaceLattice::base_pull(Rat(2 * g - 2));
    SurfaceClass texp = (SurfaceLattice::E() - SurfaceLattice::base_pull(Rat(d))) * Rat(cert.q);
    bool twist_ok = twist == texp;
    cert.checks.push_back(line("h1-lower-bound",
                               "D - f*K_C = " + twist.str() + " = q(E - dF); dual of S^q(E)(-qL) "
                               "contains H^0(O_C), so h^1(X, D) >= 1",
                               twist_ok && cert.q >= 0));
    cert.h1_lower_bound = (twist_ok && cert.q >= 0) ? 1 : 0;

    Rat ec = intersect(SurfaceLattice::E(), cert.Cprime, cert.lat);
    Rat c2 = intersect(cert.Cprime, cert.Cprime, cert.lat);
    cert.checks.push_back(line("negative-curve",
                               "E.C' = " + ec.str() + ", C'^2 = " + c2.str(),
                               ec == Rat(0) && c2 < Rat(0)));

    // split-oracle shadow: the same subsheaf argument word for word on the
    // decomposable degeneration, where h^1 is exactly computable
    try {
        SplitBundle xb(Semigroup::for_curve(curve), d);
        long shadow = h1_split_surface(xb, cert.q, 2 * g - 2 - cert.q * d);
        cert.oracle_h1 = shadow;
        cert.checks.push_back(line("split-oracle-shadow",
                                   "h^1 on P(O+L) of the same class = " + std::to_string(shadow),
                                   shadow >= cert.h1_lower_bound));
    } catch (const Error&) {
        // no semigroup model for this curve; the shadow is optional
    }
    return cert;
}

TransportedCertificate transport_through_blowups(const KVCertificate& cert,
                                                 const std::vector<Rat>& center_multiplicities) {
    TransportedCertificate out;
    out.base = cert;
    Rat hf = intersect(cert.Hclass, SurfaceLattice::F(), cert.lat);
    Rat h2 = intersect(cert.Hclass, cert.Hclass, cert.lat);
    Rat margin = std::min(hf, h2);
    if (cert.lat.negative_curve)
        margin = std::min(margin, intersect(cert.Hclass, *cert.lat.negative_curve, cert.lat));
    if (!(margin > Rat(0)))
        throw PreconditionViolation("base certificate has no ampleness margin");

    bool all_below_one = true, all_log_terminal = true;
    for (const Rat& m : center_multiplicities) {
        BlowupStep st;
        st.multiplicity = m;
        st.discrepancy = Rat(1) - m; // point blow-up: a = 1 - mult_B(center)
        if (!(st.discrepancy > Rat(-1)))
            throw NotLogTerminal("blow-up at multiplicity " + m.str() + " gives discrepancy " +
                                 st.discrepancy.str());
        st.ceil_a = st.discrepancy.ceil();
        Rat frac = (-st.discrepancy).frac(); // {-a}
        Rat slack = Rat(1) - frac;
        st.delta = std::min(slack, margin) * Rat(1, 2);
        st.new_coeff = frac + st.delta;
        margin -= st.delta;
        st.margin_after = margin;
        all_below_one = all_below_one && st.new_coeff < Rat(1);
        all_log_terminal = all_log_terminal && st.discrepancy > Rat(-1);
        out.steps.push_back(st);
    }
    out.checks.push_back(line("exceptional-coefficients-below-one",
                              std::to_string(out.steps.size()) + " step(s)", all_below_one));
    out.checks.push_back(line("discrepancies-above-minus-one", "", all_log_terminal));
    out.checks.push_back(line("ampleness-margin-positive",
                              "final margin " + margin.str(), margin > Rat(0)));
    // H^1 does not drop: h_* O(transported D) = O(D) since the corrections
    // are the round-ups of the discrepancies, so Leray gives
    // H^1(upstairs) = H^1(X, D)
    out.h1_lower_bound = cert.h1_lower_bound;
    out.checks.push_back(line("h1-inherited",
                              "projection formula transports h^1 >= " +
                                  std::to_string(cert.h1_lower_bound),
                              true));
    return out;
}

std::vector<CheckLine> contraction_identities(long p, long genus, long deg_l) {
    if (p < 3) throw PreconditionViolation("contraction identities need p >= 3");
    if (2 * genus - 2 != p * deg_l)
        throw PreconditionViolation("need Raynaud-Tango degrees: 2g - 2 = p deg L");
    Rat a = p >= 5 ? Rat(p + 1, p) : Rat(4, 3);
    Rat b = p >= 5 ? Rat(p + 3, 2 * p) : Rat(2, 3);
    long q = p >= 5 ? (p - 3) / 2 : 1;

    SurfaceLattice lat = SurfaceLattice::tango_bundle(genus, p, deg_l);
    SurfaceClass KX = canonical_class(lat);
    SurfaceClass Cp(Rat(p), Rat(-p * deg_l));
    SurfaceClass D(Rat(q), Rat(2 * genus - 2 - q * deg_l));

    std::vector<CheckLine> out;
    SurfaceClass lhs1 = (KX + Cp * a) * Rat(p);
    SurfaceClass rhs1(Rat(p * (p - 1)), Rat(0));
    out.push_back(line("canonical-class-identity",
                       "p(K_X + aC') = " + lhs1.str() + ", expected " + rhs1.str() + " = p(p-1)E",
                       lhs1 == rhs1));
    SurfaceClass lhs2 = (D + Cp * b) * Rat(p);
    SurfaceClass rhs2(Rat(p * p), Rat(0));
    out.push_back(line("divisor-class-identity",
                       "p(D + bC') = " + lhs2.str() + ", expected " + rhs2.str() + " = p^2 E",
                       lhs2 == rhs2));
    out.push_back(line("canonical-ample-downstairs",
                       "K downstairs is " + Rat(p - 1).str() + " E pushed forward, positive multiple "
                       "of the ample generator",
                       p - 1 > 0));
    out.push_back(line("not-klt-downstairs", "boundary coefficient a = " + a.str() + " > 1",
                       a > Rat(1)));
    return out;
}

CoverPlan cover_plan(const TangoReport& report, const SurfaceLattice& lat) {
    if (!report.is_integral_type || !report.base_divisor)
        throw DivisibilityFailure(report.curve_id + " is not of integral type");
    const Divisor& L = *report.base_divisor;
    long p = report.p;
    long div = p >= 3 ? 2 : 3;
    Divisor N = L * Rat(1, div);
    if (!N.is_integral())
        throw DivisibilityFailure("base divisor " + L.str() + " is not divisible by " +
                                  std::to_string(div));
    Rat degN = N.degree();
    Rat degL = L.degree();
    if (Rat(lat.d) != degL)
        throw PreconditionViolation("lattice degree does not match deg L");

    CoverPlan plan;
    plan.N = N;
    plan.degree = p >= 3 ? 2 : 3;
    plan.M = p >= 3 ? SurfaceClass(Rat(p + 1, 2), -Rat(p) * degN)
                    : SurfaceClass(Rat(1), Rat(-2) * degN);
    plan.checks.push_back(line("n-integral", "N = " + N.str(), N.is_integral()));
    plan.checks.push_back(line("m-integral", "M = " + plan.M.str(), plan.M.is_integral()));
    SurfaceClass Cp(Rat(p), Rat(-p * lat.d));
    SurfaceClass lhs = plan.M * Rat(plan.degree == 2 ? 2 : 3);
    SurfaceClass rhs = SurfaceLattice::E() + Cp;
    plan.checks.push_back(line("cover-class-identity",
                               std::to_string(plan.degree == 2 ? 2 : 3) + "M = " + lhs.str() +
                                   ", E + C' = " + rhs.str(),
                               lhs == rhs));
    return plan;
}

long sym_power_quotient_min_degree(long n, long deg_l) {
    if (n < 0) throw PreconditionViolation("symmetric power degree must be >= 0");
    if (deg_l >= 0) throw PreconditionViolation("the quotient bound needs deg L < 0");
    return n * deg_l;
}

std::string vanish_reason_name(VanishReason r) {
    switch (r) {
        case VanishReason::SectionNonPositive: return "SectionNonPositive";
        case VanishReason::NoTangoAndNonAmpleSection: return "NoTangoAndNonAmpleSection";
        case VanishReason::LowGenus: return "LowGenus";
        case VanishReason::CaseATrace: return "CaseATrace";
        case VanishReason::AmpleIntegralTwist: return "AmpleIntegralTwist";
    }
    return "?";
}

std::string hypothesis_name(Hypothesis h) {
    return h == Hypothesis::TangoCurve ? "TangoCurve" : "AllSectionsAmple";
}

Verdict classify_vanishing(const SurfaceLattice& lat, const PairData& pair, const SurfaceClass& D,
                           const TangoReport* report) {
    if (!D.is_integral())
        throw PreconditionViolation("classify_vanishing needs an integral D");
    KltVerdict kv = klt_check(pair);
    if (!kv.ok) throw PreconditionViolation("pair is not KLT: " + kv.reason);

    SurfaceClass B(Rat(0), Rat(0));
    for (const auto& comp : pair.comps) B = B + comp.cls * comp.coeff;
    SurfaceClass H = D - canonical_class(lat) - B;
    AmpleVerdict av = ample_test(H, lat);
    if (av.value == Ampleness::Unknown)
        throw InputNotInScope("ampleness undecidable: " + av.reason);
    if (av.value == Ampleness::NotAmple)
        throw InputNotInScope("H = D - (K_X + B) is not ample: " + av.reason);

    Verdict v;
    v.trace.push_back("H = " + H.str() + " ample: " + av.reason);

    // the reduction: boundary components of nonnegative self-intersection
    // are nef here and can be absorbed into H
    std::vector<PairBoundary> remaining;
    for (const auto& comp : pair.comps) {
        if (comp.coeff.is_zero()) continue;
        Rat self = intersect(comp.cls, comp.cls, lat);
        if (self >= Rat(0)) {
            H = H + comp.cls * comp.coeff;
            v.trace.push_back("absorbed boundary component " + comp.cls.str() +
                              " (self-intersection " + self.str() + ") into H");
        } else {
            remaining.push_back(comp);
        }
    }

    if (lat.genus <= 1) {
        v.kind = VerdictKind::VanishingGuaranteed;
        v.reason = VanishReason::LowGenus;
        v.trace.push_back("base genus " + std::to_string(lat.genus) + " <= 1");
        return v;
    }

    // a known section of self-intersection <= 0?
    std::optional<SurfaceClass> sec;
    if (lat.d <= 0)
        sec = SurfaceLattice::E();
    else if (lat.decomposable)
        sec = SurfaceClass(Rat(1), Rat(-lat.d));

    if (sec) {
        Rat sec2 = intersect(*sec, *sec, lat);
        if (remaining.size() == 1 && remaining[0].cls == *sec && sec2 < Rat(0) &&
            remaining[0].coeff > Rat(0)) {
            // boundary sits on the negative section: emit the inequality chain
            Rat c = remaining[0].coeff;
            Rat e = -sec2;
            // coordinates of H in the basis (section, fiber)
            Rat x = H.x;
            Rat y = sec->x == Rat(1) && sec->y.is_zero() ? H.y : H.y + H.x * Rat(lat.d);
            v.kind = VerdictKind::VanishingGuaranteed;
            v.reason = VanishReason::CaseATrace;
            Rat t1 = x + c - Rat(2);
            if (t1 < Rat(0)) {
                v.trace.push_back("x + c - 2 = " + t1.str() +
                                  " < 0: the pushforward of D - f*K_C vanishes, so h^1 = 0");
            } else {
                Rat rhs = (y - x * e) + (Rat(1) - c) * e;
                if (!(rhs > Rat(0)))
                    throw InternalError("Case-A right-hand side must be positive under ampleness");
                v.trace.push_back("x + c - 2 = " + t1.str() + " >= 0; a nonzero section would force "
                                  "-d_1 >= (y - xe) + (1 - c)e = " + rhs.str() +
                                  " > 0 against d_1 >= 0, so h^1 = 0");
            }
            return v;
        }
        v.kind = VerdictKind::VanishingGuaranteed;
        v.reason = VanishReason::SectionNonPositive;
        v.trace.push_back("section with self-intersection " + intersect(*sec, *sec, lat).str() +
                          " <= 0 exists");
        return v;
    }

    if (report && report->n_upper <= 0 && lat.negative_curve &&
        intersect(SurfaceLattice::E(), *lat.negative_curve, lat).is_zero()) {
        v.kind = VerdictKind::VanishingGuaranteed;
        v.reason = VanishReason::NoTangoAndNonAmpleSection;
        v.trace.push_back("n(C) <= " + std::to_string(report->n_upper) +
                          " and the section E meets the registered curve trivially (not ample)");
        return v;
    }

    if (remaining.empty()) {
        v.kind = VerdictKind::VanishingGuaranteed;
        v.reason = VanishReason::AmpleIntegralTwist;
        v.trace.push_back("boundary fully absorbed: D - K_X is integral ample, h^1 = 0 on any "
                          "ruled surface");
        return v;
    }

    v.kind = VerdictKind::PossibleCounterexample;
    v.hypothesis = (report && report->is_tango) ? Hypothesis::TangoCurve
                                                : Hypothesis::AllSectionsAmple;
    v.trace.push_back("necessary conditions met; a counterexample here requires the base to be a "
                      "Tango curve or every section to be ample");
    return v;
}

} // namespace tangokv
