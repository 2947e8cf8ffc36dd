#pragma once

#include <optional>

#include "tangokv/divisor.hpp"

namespace tangokv {

/// Certified interval for the Tango invariant plus the classification flags.
/// n_lower comes from the best witness found, n_upper = floor(2(g-1)/p); the
/// maximum defining n(C) ranges over an infinite set, so only exact == true
/// reports pin n(C) itself. is_tango is sound from the lower bound alone
/// (n(C) >= n(f) for any witness).
struct TangoReport {
    std::string curve_id;
    long p = 0;
    long genus = 0;
    long n_lower = 0;
    long n_upper = 0;
    bool exact = false;
    std::optional<Fn2> witness;
    std::optional<Divisor> witness_differential; // (df0)
    std::optional<Divisor> base_divisor;         // L = floor((df0)/p)
    bool is_tango = false;
    bool is_integral_type = false;
    bool is_raynaud_tango = false;
    bool classified_from_lower_bound_only = false;
};

/// n(f) = deg floor((df)/p). Propagates FrobeniusKernel for p-th powers.
long tango_n(const CurveModel& curve, const Fn2& f);

/// Candidate enumeration: the family's closed-form witness first, then
/// monomials x^i y^j by increasing pole order at the infinity place, then
/// two-term F_p-combinations of the leading monomials.
std::vector<Fn2> candidate_functions(const CurveModel& curve, int budget);

TangoReport tango_search(const CurveModel& curve, int budget = 500);

/// Recomputes the Definition-2.6-style flags from the stored witness data.
void classify(TangoReport& report);

/// Bounded search for f with (df) >= p*L (a nonzero section of B^1(-L)).
/// L must be integral. A degree obstruction (deg pL > 2g-2) returns nullopt
/// without searching; nullopt is never a proof of emptiness otherwise.
std::optional<Fn2> b1_section_witness(const CurveModel& curve, const Divisor& L, int budget = 500);

} // namespace tangokv
