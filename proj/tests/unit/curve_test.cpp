#include <doctest.h>

#include "tangokv/curve.hpp"
#include "tangokv/divisor.hpp"

using namespace tangokv;

TEST_CASE("family constraints") {
    CHECK_THROWS_AS(CurveModel::make(Family::HyperellipticOdd, 3, 2), ParamViolation);
    CHECK_THROWS_AS(CurveModel::make(Family::HyperellipticOdd, 2, 3), ParamViolation);
    CHECK_THROWS_AS(CurveModel::make(Family::Superelliptic, 3, 2), ParamViolation);
    CHECK_THROWS_AS(CurveModel::make(Family::PlaneProjective, 2, 0), ParamViolation);
    CHECK_THROWS_AS(CurveModel::make(Family::RationalLine, 4, 0), ParamViolation);
}

TEST_CASE("genus values") {
    CHECK(CurveModel::make(Family::HyperellipticOdd, 3, 3).genus() == 4);
    CHECK(CurveModel::make(Family::Superelliptic, 2, 3).genus() == 2);
    CHECK(CurveModel::make(Family::Superelliptic, 3, 3).genus() == 7);
    CHECK(CurveModel::make(Family::PlaneProjective, 3, 0).genus() == 3);
    CHECK(CurveModel::make(Family::RationalLine, 5, 0).genus() == 0);
    CHECK(CurveModel::make(Family::EllipticWeierstrass, 7, 0).genus() == 1);
}

TEST_CASE("genus is consistent with deg(df) = 2g - 2") {
    for (auto fam : {Family::HyperellipticOdd, Family::Superelliptic, Family::PlaneProjective,
                     Family::RationalLine, Family::EllipticWeierstrass}) {
        long p = fam == Family::Superelliptic ? 2 : 3;
        long h = 3;
        CurveModel c = CurveModel::make(fam, p, h);
        Divisor df = divisor_of_differential(c, *c.family_witness());
        CHECK(df.degree() == Rat(2 * (c.genus() - 1)));
        CHECK(df.is_integral());
    }
}

TEST_CASE("smoothness of the example curves, singularity detection otherwise") {
    CHECK(CurveModel::make(Family::HyperellipticOdd, 3, 3).smoothness_check().smooth);
    CHECK(CurveModel::make(Family::PlaneProjective, 3, 0).smoothness_check().smooth);
    CHECK(CurveModel::make(Family::Superelliptic, 2, 5).smoothness_check().smooth);
    // y^2 = x^2 over F_3: node at the origin
    Poly2 bad = Poly2::mono(3, 1, 0, 2) - Poly2::mono(3, 1, 2, 0);
    auto sm = check_smooth_affine(bad);
    CHECK_FALSE(sm.smooth);
    CHECK(sm.witness == "(x=0,y=0)");
}

TEST_CASE("pole orders of the coordinates at infinity") {
    // hyperelliptic (3,3): v(x) = -2, v(y) = -9
    CurveModel c1 = CurveModel::make(Family::HyperellipticOdd, 3, 3);
    auto [x1, y1] = c1.parametrize(c1.infinity_place(), 40);
    CHECK(x1.valuation() == -2);
    CHECK(y1.valuation() == -9);
    // superelliptic (2,3): v(x) = -5, v(y) = -2
    CurveModel c2 = CurveModel::make(Family::Superelliptic, 2, 3);
    auto [x2, y2] = c2.parametrize(c2.infinity_place(), 40);
    CHECK(x2.valuation() == -5);
    CHECK(y2.valuation() == -2);
    // the parametrization satisfies the equation past the requested precision
    Series r1 = c1.equation().eval_series(x1, y1);
    CHECK((r1.is_zero_to_prec() || r1.valuation() > 36));
    Series r2 = c2.equation().eval_series(x2, y2);
    CHECK((r2.is_zero_to_prec() || r2.valuation() > 36));
}

TEST_CASE("plane curve infinity sits under the second chart") {
    CurveModel c = CurveModel::make(Family::PlaneProjective, 3, 0);
    auto [x, y] = c.parametrize(c.infinity_place(), 36);
    CHECK(x.valuation() == -3);  // -p
    CHECK(y.valuation() == -4);  // -(p+1)
    Series r = c.equation().eval_series(x, y);
    CHECK((r.is_zero_to_prec() || r.valuation() > 30));
}

TEST_CASE("finite places use a coordinate uniformizer at non-ramified points") {
    CurveModel c = CurveModel::make(Family::HyperellipticOdd, 3, 3);
    // the fiber over x = 0 has the two smooth points (0, 1), (0, 2)
    auto places = places_on(c.equation(), Poly2::mono(3, 1, 1, 0));
    REQUIRE(places.size() == 2);
    for (const auto& pl : places) {
        auto [x, y] = c.parametrize(pl, 24);
        CHECK(x.valuation() == 1); // v(x - x0) = 1 with x0 = 0
        CHECK(x.coeff(1) == pl.K->one());
    }
}

TEST_CASE("elliptic models are smooth at every acceptance prime") {
    for (long p : {2L, 3L, 5L, 7L, 13L}) {
        CurveModel c = CurveModel::make(Family::EllipticWeierstrass, p, 0);
        CHECK(c.smoothness_check().smooth);
        auto [x, y] = c.parametrize(c.infinity_place(), 30);
        CHECK(x.valuation() == -2);
        CHECK(y.valuation() == -3);
    }
}

TEST_CASE("places carry canonical keys and residue degrees") {
    CurveModel c = CurveModel::make(Family::PlaneProjective, 3, 0);
    Fn2 w = *c.family_witness();
    // zeros of the numerator x on the curve: (0,0), (0,1), (0,2)
    auto zeros = places_on(c.equation(), w.num);
    CHECK(zeros.size() == 3);
    for (auto& pl : zeros) CHECK(pl.residue_deg == 1);
    // rediscovery produces identical keys
    auto again = places_on(c.equation(), w.num);
    for (size_t i = 0; i < zeros.size(); ++i) CHECK(zeros[i].key == again[i].key);
}
