#include <doctest.h>

#include "tangokv/laurent.hpp"
#include "tangokv/poly2.hpp"

using namespace tangokv;

TEST_CASE("valuation basics") {
    const Field* F5 = Field::prime(5);
    // t^-3 + 1
    Series s = Series::monomial(F5, F5->one(), -3, 10) + Series::constant(F5, F5->one(), 10);
    CHECK(s.valuation() == -3);
    // zero to precision signals the caller
    Series z = Series::zero_to(F5, 10);
    CHECK_THROWS_AS(z.valuation(), PrecisionExhausted);
    // differentiation drops the valuation by one when p does not divide it
    CHECK(s.derivative().valuation() == -4);
    Series t2 = Series::monomial(F5, F5->from_int(2), -2, 10);
    CHECK(t2.derivative().valuation() == -3);
}

TEST_CASE("series arithmetic tracks precision") {
    const Field* F5 = Field::prime(5);
    Series a = Series::monomial(F5, F5->one(), -2, 8);
    Series b = Series::monomial(F5, F5->one(), 3, 12);
    Series prod = a * b;
    CHECK(prod.valuation() == 1);
    CHECK(prod.prec_abs() == 11); // min(8 + 3, 12 - 2)
    Series inv = a.inverse();
    CHECK(inv.valuation() == 2);
    CHECK((a * inv).coeff(0) == F5->one());
}

TEST_CASE("square root of 1 + t over F_5 by Newton") {
    const Field* F5 = Field::prime(5);
    Poly2 eq = Poly2::mono(5, 1, 0, 2) - Poly2::mono(5, 1, 0, 0) - Poly2::mono(5, 1, 1, 0);
    Series x = Series::monomial(F5, F5->one(), 1, 48);
    Series y = series_solve_curve(eq, x, Series::constant(F5, F5->one(), 48), 30);
    CHECK(y.coeff(0) == F5->one());
    CHECK(y.coeff(1) == F5->from_int(3)); // 1/2 = 3 mod 5
    // independent check: square it back against 1 + t, term by term
    Series residue = y * y - (Series::constant(F5, F5->one(), 48) + x);
    bool ok = residue.is_zero_to_prec();
    if (!ok) ok = residue.valuation() >= 30;
    CHECK(ok);
}

TEST_CASE("identity and exact-root solves") {
    const Field* F7 = Field::prime(7);
    // y - x with x(t) = t
    Poly2 eq = Poly2::mono(7, 1, 0, 1) - Poly2::mono(7, 1, 1, 0);
    Series x = Series::monomial(F7, F7->one(), 1, 20);
    Series y = series_solve_curve(eq, x, Series::zero_to(F7, 20), 16);
    CHECK(y.valuation() == 1);
    CHECK(y.coeff(1) == F7->one());
    // y^2 - x with x(t) = t^2: y = t from the seed branch
    Poly2 eq2 = Poly2::mono(7, 1, 0, 2) - Poly2::mono(7, 1, 1, 0);
    Series x2 = Series::monomial(F7, F7->one(), 2, 20);
    Series y2 = series_solve_curve(eq2, x2, Series::monomial(F7, F7->one(), 1, 20), 16);
    CHECK(y2.valuation() == 1);
    Series y2m = series_solve_curve(eq2, x2, Series::monomial(F7, F7->from_int(-1), 1, 20), 16);
    CHECK(y2m.coeff(1) == F7->from_int(-1));
}

TEST_CASE("Hensel failure is reported") {
    const Field* F2 = Field::prime(2);
    // y^2 - x has a vanishing y-derivative in characteristic 2
    Poly2 eq = Poly2::mono(2, 1, 0, 2) - Poly2::mono(2, 1, 1, 0);
    Series x = Series::monomial(F2, F2->one(), 1, 20);
    CHECK_THROWS_AS(series_solve_curve(eq, x, Series::constant(F2, F2->one(), 20), 16),
                    NoConvergence);
}
