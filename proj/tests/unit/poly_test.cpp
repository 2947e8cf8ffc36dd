#include <doctest.h>

#include <random>

#include "tangokv/poly.hpp"
#include "tangokv/poly2.hpp"

using namespace tangokv;

TEST_CASE("formal derivative in characteristic p") {
    const Field* F3 = Field::prime(3);
    // d/dx (x^3 + x + 1) = 1 over F_3
    Poly f = Poly::from_ints(F3, {1, 1, 0, 1});
    CHECK(formal_derivative(f) == Poly::from_ints(F3, {1}));
    // d/dx x^p = 0
    Poly xp = Poly::from_ints(F3, {0, 0, 0, 1});
    CHECK(formal_derivative(xp).is_zero());
    // d/dx (x^4 + x^2) = 0 over F_2
    const Field* F2 = Field::prime(2);
    Poly g = Poly::from_ints(F2, {0, 0, 1, 0, 1});
    CHECK(formal_derivative(g).is_zero());
}

TEST_CASE("derivative of p-th powers vanishes on random polynomials") {
    std::mt19937_64 rng(11);
    for (long p : {2L, 3L, 5L}) {
        const Field* K = Field::prime(p);
        for (int trial = 0; trial < 30; ++trial) {
            std::vector<FE> c;
            int deg = 1 + (int)(rng() % 5);
            for (int i = 0; i <= deg; ++i) c.push_back(K->from_int((long long)(rng() % p)));
            Poly f(K, c);
            if (f.is_zero()) continue;
            Poly fp = Poly::constant(K, K->one());
            for (long i = 0; i < p; ++i) fp = fp * f;
            CHECK(formal_derivative(fp).is_zero());
        }
    }
}

TEST_CASE("division and gcd") {
    const Field* F5 = Field::prime(5);
    Poly a = Poly::from_ints(F5, {1, 0, 2, 0, 1});
    Poly b = Poly::from_ints(F5, {2, 3, 1});
    auto [q, r] = a.divrem(b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
    Poly g = Poly::from_ints(F5, {1, 1});
    CHECK(gcd(a * g, b * g) % g == Poly(F5));
}

TEST_CASE("factor reassembles the input") {
    std::mt19937_64 rng(23);
    for (long p : {2L, 3L}) {
        for (int k : {1, 2}) {
            const Field* K = Field::canonical(p, k);
            long long q = 1;
            for (int i = 0; i < k; ++i) q *= p;
            for (int trial = 0; trial < 25; ++trial) {
                std::vector<FE> c;
                int deg = 2 + (int)(rng() % 9);
                for (int i = 0; i <= deg; ++i) c.push_back(K->element((long long)(rng() % q)));
                Poly f(K, c);
                if (f.degree() < 1) continue;
                Poly prod = Poly::constant(K, f.lc());
                for (const auto& pf : factor(f)) {
                    CHECK(pf.factor.lc() == K->one());
                    for (int i = 0; i < pf.multiplicity; ++i) prod = prod * pf.factor;
                }
                CHECK(prod == f);
            }
        }
    }
}

TEST_CASE("inseparable polynomials factor correctly") {
    const Field* F3 = Field::prime(3);
    // x^3 - 1 = (x - 1)^3
    Poly f = Poly::from_ints(F3, {-1, 0, 0, 1});
    auto fs = factor(f);
    REQUIRE(fs.size() == 1);
    CHECK(fs[0].multiplicity == 3);
    CHECK(fs[0].factor == Poly::from_ints(F3, {-1, 1}));
}

TEST_CASE("roots in field") {
    const Field* F9 = Field::canonical(3, 2);
    // x^2 + 1 splits over F_9 but not F_3
    Poly f(F9, {F9->one(), F9->zero(), F9->one()});
    auto roots = roots_in_field(f);
    REQUIRE(roots.size() == 2);
    for (const auto& r : roots) CHECK((r * r + F9->one()).is_zero());
    const Field* F3 = Field::prime(3);
    CHECK(roots_in_field(Poly::from_ints(F3, {1, 0, 1})).empty());
}

TEST_CASE("bivariate resultant vanishes exactly on common zeros") {
    // F = y^2 - x^3 - 1, G = y - x over F_5; res_y = (x)^2 - x^3 - 1... the
    // resultant's roots are the x with a common y
    Poly2 F = Poly2::mono(5, 1, 0, 2) - Poly2::mono(5, 1, 3, 0) - Poly2::mono(5, 1, 0, 0);
    Poly2 G = Poly2::mono(5, 1, 0, 1) - Poly2::mono(5, 1, 1, 0);
    Poly R = resultant_y(F, G);
    const Field* F5 = Field::prime(5);
    // substitute y = x: x^2 - x^3 - 1 up to sign
    Poly expect = Poly::from_ints(F5, {-1, 0, 1, -1});
    CHECK((R == expect || R == -expect));
}
