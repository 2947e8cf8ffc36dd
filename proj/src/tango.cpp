#include "tangokv/tango.hpp"

#include <algorithm>

namespace tangokv {

long tango_n(const CurveModel& curve, const Fn2& f) {
    Divisor df = divisor_of_differential(curve, f);
    Rat n = df.p_floor(curve.p()).degree();
    if (!n.is_integer()) throw InternalError("n(f) came out non-integral");
    return n.num();
}

std::vector<Fn2> candidate_functions(const CurveModel& curve, int budget) {
    long p = curve.p();
    std::vector<Fn2> out;
    if (auto w = curve.family_witness()) out.push_back(*w);

    // monomials x^i y^j ordered by pole order at the infinity place
    long px = curve.pole_x(), py = curve.pole_y();
    int jmax = py > 0 ? std::max(1, curve.equation().deg_y() - 1) : 0;
    struct Mono { long pole; int i, j; };
    std::vector<Mono> monos;
    for (int i = 0; i <= 40; ++i)
        for (int j = 0; j <= jmax; ++j) {
            if (i == 0 && j == 0) continue;
            monos.push_back({px * i + py * j, i, j});
        }
    std::sort(monos.begin(), monos.end(), [](const Mono& a, const Mono& b) {
        if (a.pole != b.pole) return a.pole < b.pole;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    });
    size_t nmono = std::min(monos.size(), (size_t)budget);
    for (size_t k = 0; k < nmono && (int)out.size() < budget; ++k)
        out.push_back(Fn2::monomial(p, monos[k].i, monos[k].j));

    // two-term combinations m1 + c*m2 over the leading monomials
    size_t head = std::min(monos.size(), (size_t)24);
    for (size_t a = 0; a < head && (int)out.size() < budget; ++a)
        for (size_t b = a + 1; b < head && (int)out.size() < budget; ++b)
            for (long c = 1; c < p && (int)out.size() < budget; ++c) {
                Poly2 f = Poly2::mono(p, 1, monos[a].i, monos[a].j) +
                          Poly2::mono(p, c, monos[b].i, monos[b].j);
                Fn2 m1 = Fn2::monomial(p, monos[a].i, monos[a].j);
                Fn2 m2 = Fn2::monomial(p, monos[b].i, monos[b].j);
                std::string label = m1.label + (c == 1 ? " + " : " + " + std::to_string(c) + "*") +
                                    m2.label;
                out.push_back(Fn2::polynomial(std::move(f), label));
            }
    return out;
}

TangoReport tango_search(const CurveModel& curve, int budget) {
    TangoReport r;
    r.curve_id = curve.id();
    r.p = curve.p();
    r.genus = curve.genus();
    // floor with exact rational semantics (negative for genus 0)
    r.n_upper = Rat(2 * (curve.genus() - 1), curve.p()).floor();

    bool have = false;
    long best = 0;
    for (const Fn2& f : candidate_functions(curve, budget)) {
        Divisor df;
        try {
            df = divisor_of_differential(curve, f);
        } catch (const FrobeniusKernel&) {
            continue; // p-th powers carry no information
        } catch (const PreconditionViolation&) {
            continue; // candidate degenerates on this curve (e.g. y on the line)
        }
        Rat nr = df.p_floor(curve.p()).degree();
        long n = nr.num();
        if (!have || n > best) {
            have = true;
            best = n;
            r.witness = f;
            r.witness_differential = df;
        }
        if (have && best == r.n_upper) break; // upper bound attained
    }
    if (have) {
        r.n_lower = best;
        r.base_divisor = r.witness_differential->p_floor(curve.p());
    } else {
        r.n_lower = r.n_upper; // vacuous; no witness found at all
    }
    r.exact = have && r.n_lower == r.n_upper;
    classify(r);
    return r;
}

void classify(TangoReport& r) {
    r.classified_from_lower_bound_only = !r.exact;
    r.is_tango = r.witness.has_value() && r.n_lower > 0;
    r.is_raynaud_tango = false;
    r.is_integral_type = false;
    if (!r.witness || !r.base_divisor) return;
    const Divisor& L = *r.base_divisor;
    const Divisor& df = *r.witness_differential;
    if (r.is_tango) {
        // Raynaud-Tango: (df0) = p L exactly with deg L > 0
        if (df == L * Rat(r.p) && L.degree() > Rat(0)) r.is_raynaud_tango = true;
        // integral type: L/2 integral when p >= 3, L/3 integral when p = 2
        long div = r.p >= 3 ? 2 : 3;
        if ((L * Rat(1, div)).is_integral()) r.is_integral_type = true;
    }
}

std::optional<Fn2> b1_section_witness(const CurveModel& curve, const Divisor& L, int budget) {
    if (!L.is_integral()) throw PreconditionViolation("b1_section_witness: L must be integral");
    Rat pl_deg = L.degree() * Rat(curve.p());
    if (pl_deg > Rat(2 * (curve.genus() - 1)))
        return std::nullopt; // degree obstruction: (df) has degree 2g-2 < deg pL
    Divisor target = L * Rat(curve.p());
    for (const Fn2& f : candidate_functions(curve, budget)) {
        try {
            Divisor df = divisor_of_differential(curve, f);
            if (df.geq(target)) return f;
        } catch (const FrobeniusKernel&) {
        } catch (const PreconditionViolation&) {
        }
    }
    return std::nullopt;
}

} // namespace tangokv
