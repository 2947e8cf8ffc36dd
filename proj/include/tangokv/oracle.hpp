#pragma once

#include <vector>

#include "tangokv/curve.hpp"
#include "tangokv/surface.hpp"

namespace tangokv {

/// Weierstrass semigroup at the infinity place: the pole orders of functions
/// regular elsewhere. The gap count must equal the genus (checked at
/// construction), which is what makes one-point Riemann-Roch exact.
class Semigroup {
  public:
    Semigroup(std::vector<long> generators, long expected_genus);
    static Semigroup for_curve(const CurveModel& c) {
        return Semigroup(c.semigroup_generators(), c.genus());
    }
    /// Standard model of genus g in {0, 1, 2}: <1>, <2,3>, <2,5>.
    static Semigroup standard(long genus);

    long genus() const { return genus_; }
    bool contains(long m) const;
    /// Number of semigroup elements in [0, m].
    long count_upto(long m) const;

  private:
    std::vector<long> gens_;
    long genus_;
    std::vector<char> member_; // membership table, exact beyond its length
    long conductor_;
};

/// h^0(C, m * zinf) by semigroup count; for m > 2g-2 the Riemann-Roch value
/// m - g + 1 is asserted.
long h0_one_point(const Semigroup& sg, long m);

/// h^1(C, m * zinf) by Serre duality h^0((2g-2-m) * zinf); the Riemann-Roch
/// identity h^0 - h^1 = m - g + 1 is asserted.
long h1_curve(const Semigroup& sg, long m);

/// Decomposable bundle P(O + L) over a supported curve, deg L = d, with all
/// base divisors multiples of the infinity place. The ground truth for every
/// vanishing verdict.
struct SplitBundle {
    Semigroup sg;
    long d;

    SplitBundle(Semigroup s, long dd) : sg(std::move(s)), d(dd) {}
    SurfaceLattice lattice() const { return SurfaceLattice::split_bundle(sg.genus(), d); }
};

/// h^1(X, aE + mF): direct sum over the split symmetric power for a >= 0,
/// zero at a = -1, Serre duality on X for a <= -2.
long h1_split_surface(const SplitBundle& xb, long a, long m);

struct GridReport {
    long cells_checked = 0;
    std::vector<std::string> violations;
    bool clean() const { return violations.empty(); }
};

/// Checks h^1(X, -H) = 0 for every integral ample H with |x|,|y| <= bound.
GridReport kodaira_vanishing_grid(const SplitBundle& xb, long bound);

} // namespace tangokv
