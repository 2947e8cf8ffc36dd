#include <doctest.h>

#include <random>

#include "tangokv/divisor.hpp"

using namespace tangokv;

namespace {
Divisor inf_divisor(const CurveModel& c, long n) {
    Divisor d(c.id());
    d.add(c.infinity_place(), Rat(n));
    return d;
}
} // namespace

TEST_CASE("round-down and p-division") {
    CurveModel c = CurveModel::make(Family::HyperellipticOdd, 3, 3);
    Place inf = c.infinity_place();
    Place pt = places_on(c.equation(), Poly2::mono(3, 1, 1, 0)).front();

    Divisor d(c.id());
    d.add(inf, Rat(7, 3));
    d.add(pt, Rat(-1, 2));
    Divisor rd = d.round_down();
    CHECK(rd.coeff(inf.key) == Rat(2));
    CHECK(rd.coeff(pt.key) == Rat(-1));

    // integral divisors are fixed points
    CHECK(rd.round_down() == rd);
    // exact division
    Divisor e(c.id());
    e.add(inf, Rat(6, 3));
    CHECK(e.round_down().coeff(inf.key) == Rat(2));

    // p-division examples
    CHECK(inf_divisor(c, 6).p_floor(3) == inf_divisor(c, 2));
    CHECK(inf_divisor(c, 12).p_floor(5) == inf_divisor(c, 2));
    CurveModel line = CurveModel::make(Family::RationalLine, 2, 0);
    CHECK(inf_divisor(line, -2).p_floor(2) == inf_divisor(line, -1));
}

TEST_CASE("divisors of differentials match the closed forms") {
    // (d(y/x^p)) = (ph - 3) zinf
    CurveModel c1 = CurveModel::make(Family::HyperellipticOdd, 3, 3);
    CHECK(divisor_of_differential(c1, *c1.family_witness()) == inf_divisor(c1, 6));
    // (dy) = p (h(p-1) - 2) zinf
    CurveModel c2 = CurveModel::make(Family::Superelliptic, 2, 3);
    CHECK(divisor_of_differential(c2, *c2.family_witness()) == inf_divisor(c2, 2));
}

TEST_CASE("p-th powers have vanishing differential") {
    CurveModel c = CurveModel::make(Family::HyperellipticOdd, 3, 3);
    CHECK_THROWS_AS(divisor_of_differential(c, Fn2::monomial(3, 3, 0)), FrobeniusKernel);
    CurveModel line = CurveModel::make(Family::RationalLine, 5, 0);
    CHECK_THROWS_AS(divisor_of_differential(line, Fn2::monomial(5, 5, 0)), FrobeniusKernel);
}

TEST_CASE("divisors of functions") {
    // x on the rational line: one zero, one pole
    CurveModel line = CurveModel::make(Family::RationalLine, 5, 0);
    Divisor dx = divisor_of_function(line, Fn2::monomial(5, 1, 0));
    CHECK(dx.degree() == Rat(0));
    CHECK(dx.coeff(line.infinity_place().key) == Rat(-1));
    CHECK(dx.support_size() == 2);

    // x on the hyperelliptic curve: pole of order 2 at infinity
    CurveModel c = CurveModel::make(Family::HyperellipticOdd, 3, 3);
    Divisor d = divisor_of_function(c, Fn2::monomial(3, 1, 0));
    CHECK(d.degree() == Rat(0));
    CHECK(d.coeff(c.infinity_place().key) == Rat(-2));

    // constants have the zero divisor
    Fn2 two(Poly2::mono(3, 2, 0, 0), Poly2::mono(3, 1, 0, 0), "2");
    CHECK(divisor_of_function(c, two).is_zero());
}

TEST_CASE("chain rule: d(f g^p) = g^p df as divisors") {
    std::mt19937_64 rng(31);
    CurveModel c = CurveModel::make(Family::Superelliptic, 2, 3);
    long p = 2;
    for (int trial = 0; trial < 6; ++trial) {
        Fn2 f = Fn2::monomial(p, 1 + (int)(rng() % 2), (int)(rng() % 3));
        int gi = 1 + (int)(rng() % 2);
        Fn2 g = Fn2::monomial(p, gi, 0);
        // f * g^p as a single polynomial function
        Poly2 gp = Poly2::mono(p, 1, gi * (int)p, 0);
        Fn2 fgp = Fn2::polynomial(f.num * gp, "f*g^p");
        Divisor lhs = divisor_of_differential(c, fgp);
        Divisor rhs = divisor_of_differential(c, f) + divisor_of_function(c, g) * Rat(p);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("divisor text form") {
    CurveModel c = CurveModel::make(Family::HyperellipticOdd, 3, 3);
    Divisor d(c.id());
    d.add(c.infinity_place(), Rat(7, 3));
    CHECK(d.str() == "7/3*zinf");
    Place pt = places_on(c.equation(), Poly2::mono(3, 1, 1, 0)).front();
    d.add(pt, Rat(-1, 2));
    CHECK(d.str() == "7/3*zinf - 1/2*" + pt.display);
}
