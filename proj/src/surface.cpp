#include "tangokv/surface.hpp"

namespace tangokv {

SurfaceLattice SurfaceLattice::tango_bundle(long genus, long p, long deg_l) {
    SurfaceLattice lat;
    lat.genus = genus;
    lat.d = deg_l;
    lat.negative_curve = SurfaceClass(Rat(p), Rat(-p * deg_l));
    return lat;
}

SurfaceLattice SurfaceLattice::split_bundle(long genus, long d) {
    SurfaceLattice lat;
    lat.genus = genus;
    lat.d = d;
    lat.decomposable = true;
    if (d > 0) lat.negative_curve = SurfaceClass(Rat(1), Rat(-d)); // the other section
    return lat;
}

Rat intersect(const SurfaceClass& a, const SurfaceClass& b, const SurfaceLattice& lat) {
    return a.x * b.x * Rat(lat.d) + a.x * b.y + b.x * a.y;
}

SurfaceClass canonical_class(const SurfaceLattice& lat) {
    return {Rat(-2), Rat(2 * lat.genus - 2 + lat.d)};
}

AmpleVerdict ample_test(const SurfaceClass& H, const SurfaceLattice& lat) {
    if (lat.negative_curve) {
        Rat hf = intersect(H, SurfaceLattice::F(), lat);
        Rat hc = intersect(H, *lat.negative_curve, lat);
        Rat h2 = intersect(H, H, lat);
        if (hf > Rat(0) && hc > Rat(0) && h2 > Rat(0))
            return {Ampleness::Ample, "H.F = " + hf.str() + ", H.C' = " + hc.str() +
                                          ", H^2 = " + h2.str() + " all positive"};
        return {Ampleness::NotAmple, "H.F = " + hf.str() + ", H.C' = " + hc.str() +
                                         ", H^2 = " + h2.str()};
    }
    if (lat.d <= 0 && lat.decomposable) {
        Rat e(-lat.d);
        if (H.x > Rat(0) && H.y > H.x * e)
            return {Ampleness::Ample,
                    "x = " + H.x.str() + " > 0 and y = " + H.y.str() + " > x*e = " + (H.x * e).str()};
        return {Ampleness::NotAmple,
                "needs x > 0 and y > x*e; got x = " + H.x.str() + ", y = " + H.y.str()};
    }
    return {Ampleness::Unknown, "no registered negative curve and not a normalized split lattice"};
}

} // namespace tangokv
