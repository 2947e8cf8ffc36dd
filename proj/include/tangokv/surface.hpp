#pragma once

#include <optional>
#include <string>

#include "tangokv/rational.hpp"

namespace tangokv {

/// Numeric divisor class x*E + y*F on the rank-2 lattice of a P^1-bundle.
struct SurfaceClass {
    Rat x, y;

    SurfaceClass() = default;
    SurfaceClass(Rat xx, Rat yy) : x(xx), y(yy) {}

    SurfaceClass operator+(const SurfaceClass& o) const { return {x + o.x, y + o.y}; }
    SurfaceClass operator-(const SurfaceClass& o) const { return {x - o.x, y - o.y}; }
    SurfaceClass operator*(const Rat& s) const { return {x * s, y * s}; }
    SurfaceClass operator-() const { return {-x, -y}; }
    bool operator==(const SurfaceClass& o) const { return x == o.x && y == o.y; }
    bool operator!=(const SurfaceClass& o) const { return !(*this == o); }

    bool is_integral() const { return x.is_integer() && y.is_integer(); }
    std::string str() const { return "(" + x.str() + ", " + y.str() + ")"; }
};

/// The numeric class lattice of X = P(E) over a curve of genus g, with
/// section class E of self-intersection d (O_X(E) = O_X(1)), fiber class F,
/// pairing E.E = d, E.F = 1, F.F = 0. An irreducible negative curve may be
/// registered (it spans the second boundary ray of the cone when present);
/// decomposable lattices model P(O + L) with deg L = d.
struct SurfaceLattice {
    long genus = 0;
    long d = 0;
    std::optional<SurfaceClass> negative_curve;
    bool decomposable = false;

    static SurfaceClass E() { return {Rat(1), Rat(0)}; }
    static SurfaceClass F() { return {Rat(0), Rat(1)}; }
    /// Pullback of a base divisor class of the given degree.
    static SurfaceClass base_pull(const Rat& deg) { return {Rat(0), deg}; }

    /// Lattice of the Tango counterexample construction: E^2 = deg L > 0
    /// with the disjoint curve C' = pE - p(deg L)F registered.
    static SurfaceLattice tango_bundle(long genus, long p, long deg_l);
    /// Decomposable P(O + L), deg L = d; the section of self-intersection
    /// -|d| is registered as the negative curve when d > 0.
    static SurfaceLattice split_bundle(long genus, long d);
};

Rat intersect(const SurfaceClass& a, const SurfaceClass& b, const SurfaceLattice& lat);

/// K_X = -2E + f^*(K_C + det E), coordinates (-2, 2g - 2 + d).
SurfaceClass canonical_class(const SurfaceLattice& lat);

enum class Ampleness { Ample, NotAmple, Unknown };

struct AmpleVerdict {
    Ampleness value = Ampleness::Unknown;
    std::string reason;
    bool ample() const { return value == Ampleness::Ample; }
};

/// Three-valued ampleness test. Decidable when a negative curve is
/// registered (two-ray cone: H.F > 0, H.C' > 0, H^2 > 0) or on a normalized
/// decomposable lattice with d <= 0 (x > 0 and y > x e, e = -d). Everything
/// else reports Unknown rather than guessing.
AmpleVerdict ample_test(const SurfaceClass& H, const SurfaceLattice& lat);

} // namespace tangokv
