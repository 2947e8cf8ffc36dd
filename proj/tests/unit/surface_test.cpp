#include <doctest.h>

#include "tangokv/surface.hpp"

using namespace tangokv;

TEST_CASE("defining intersection numbers") {
    SurfaceLattice lat = SurfaceLattice::tango_bundle(2, 2, 1);
    CHECK(intersect(SurfaceLattice::E(), SurfaceLattice::F(), lat) == Rat(1));
    CHECK(intersect(SurfaceLattice::F(), SurfaceLattice::F(), lat) == Rat(0));
    CHECK(intersect(SurfaceLattice::E(), SurfaceLattice::E(), lat) == Rat(1));
    // C' = pE - p(deg L)F misses the section
    SurfaceClass Cp = *lat.negative_curve;
    CHECK(intersect(SurfaceLattice::E(), Cp, lat) == Rat(0));
    CHECK(intersect(Cp, Cp, lat) == Rat(-4)); // -p^2 d
}

TEST_CASE("canonical class") {
    SurfaceLattice quadric = SurfaceLattice::split_bundle(0, 0);
    CHECK(canonical_class(quadric) == SurfaceClass(Rat(-2), Rat(-2)));
    CHECK(intersect(canonical_class(quadric), canonical_class(quadric), quadric) == Rat(8));

    SurfaceLattice g2d1 = SurfaceLattice::tango_bundle(2, 2, 1);
    CHECK(canonical_class(g2d1) == SurfaceClass(Rat(-2), Rat(3)));
    CHECK(intersect(canonical_class(g2d1), canonical_class(g2d1), g2d1) == Rat(-8));

    SurfaceLattice g7d4 = SurfaceLattice::tango_bundle(7, 3, 4);
    CHECK(canonical_class(g7d4) == SurfaceClass(Rat(-2), Rat(16)));
}

TEST_CASE("ampleness with a registered negative curve") {
    // the p = 2 preset class H = (2/3)E + (1/3) f*L on deg L = 1
    SurfaceLattice lat = SurfaceLattice::tango_bundle(2, 2, 1);
    SurfaceClass H{Rat(2, 3), Rat(1, 3)};
    CHECK(ample_test(H, lat).ample());
    CHECK(intersect(H, *lat.negative_curve, lat) == Rat(2, 3));
    CHECK(intersect(H, H, lat) == Rat(8, 9));
    // the fiber class is nef but not ample
    CHECK(ample_test(SurfaceLattice::F(), lat).value == Ampleness::NotAmple);
}

TEST_CASE("ampleness on normalized split lattices") {
    SurfaceLattice lat = SurfaceLattice::split_bundle(2, -2); // e = 2
    CHECK(ample_test({Rat(1), Rat(3)}, lat).ample());
    CHECK(ample_test({Rat(1), Rat(2)}, lat).value == Ampleness::NotAmple);
    CHECK(ample_test({Rat(-1), Rat(5)}, lat).value == Ampleness::NotAmple);
    // e = 0: x > 0, y > 0
    SurfaceLattice prod = SurfaceLattice::split_bundle(2, 0);
    CHECK(ample_test({Rat(1), Rat(1)}, prod).ample());
    CHECK(ample_test({Rat(1), Rat(0)}, prod).value == Ampleness::NotAmple);
}

TEST_CASE("the undecided regime reports Unknown") {
    SurfaceLattice lat; // d > 0, no negative curve, not decomposable
    lat.genus = 2;
    lat.d = 1;
    CHECK(ample_test({Rat(1), Rat(1)}, lat).value == Ampleness::Unknown);
}

TEST_CASE("ample classes meet every registered curve positively") {
    SurfaceLattice lat = SurfaceLattice::tango_bundle(4, 3, 2);
    for (long x = -3; x <= 3; ++x)
        for (long y = -3; y <= 3; ++y) {
            SurfaceClass H{Rat(x), Rat(y)};
            if (!ample_test(H, lat).ample()) continue;
            CHECK(intersect(H, SurfaceLattice::F(), lat) > Rat(0));
            CHECK(intersect(H, SurfaceLattice::E(), lat) > Rat(0));
            CHECK(intersect(H, *lat.negative_curve, lat) > Rat(0));
        }
}
