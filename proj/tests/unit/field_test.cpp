#include <doctest.h>

#include <random>

#include "tangokv/finite_field.hpp"
#include "tangokv/poly.hpp"

using namespace tangokv;

TEST_CASE("field axioms hold on random triples") {
    std::mt19937_64 rng(7);
    for (long p : {2L, 3L, 5L, 7L})
        for (int k : {1, 2, 3}) {
            const Field* K = Field::canonical(p, k);
            long long q = 1;
            for (int i = 0; i < k; ++i) q *= p;
            for (int trial = 0; trial < 60; ++trial) {
                FE a = K->element((long long)(rng() % q));
                FE b = K->element((long long)(rng() % q));
                FE c = K->element((long long)(rng() % q));
                CHECK((a + b) + c == a + (b + c));
                CHECK((a * b) * c == a * (b * c));
                CHECK(a * (b + c) == a * b + a * c);
                CHECK(a + (-a) == K->zero());
                if (!a.is_zero()) {
                    CHECK(a * a.inverse() == K->one());
                }
            }
        }
}

TEST_CASE("canonical towers are deterministic and irreducible") {
    const Field* F9 = Field::canonical(3, 2);
    // first monic irreducible of degree 2 over F_3 in lex coefficient order
    // is x^2 + 1
    REQUIRE(F9->defpoly_low().size() == 2);
    CHECK(F9->defpoly_low()[0] == Field::prime(3)->one());
    CHECK(F9->defpoly_low()[1].is_zero());
    CHECK(Field::canonical(3, 2) == F9); // interned

    for (long p : {2L, 3L, 5L})
        for (int k : {2, 3, 4}) {
            const Field* K = Field::canonical(p, k);
            const Field* Fp = Field::prime(p);
            std::vector<FE> c(K->defpoly_low());
            c.push_back(Fp->one());
            CHECK(is_irreducible(Poly(Fp, c)));
        }
}

TEST_CASE("reducible defining polynomials are rejected") {
    const Field* F3 = Field::prime(3);
    // x^2 - 1 = (x-1)(x+1)
    CHECK_THROWS_AS(Field::extension(F3, {F3->from_int(-1), F3->zero()}), ParamViolation);
    CHECK_THROWS_AS(Field::prime(6), ParamViolation);
}

TEST_CASE("frobenius fixes exactly the prime field") {
    const Field* K = Field::canonical(5, 3);
    int fixed = 0;
    for (long long i = 0; i < 125; ++i)
        if (K->element(i).frobenius() == K->element(i)) ++fixed;
    CHECK(fixed == 5);
    // x^(p^k) = x for everyone
    FE g = K->generator();
    CHECK(g.pow(125) == g);
}

TEST_CASE("tower extensions work over non-prime bases") {
    const Field* F4 = Field::canonical(2, 2);
    // adjoin a root of y^2 + y + g where g generates F_4 (irreducible: the
    // trace of g over F_2 is 1)
    const Field* F16 = Field::extension(F4, {F4->generator(), F4->one()});
    CHECK(F16->absolute_degree() == 4);
    FE t = F16->generator();
    FE val = t * t + t + F16->make({F4->generator()});
    CHECK(val.is_zero());
    if (!t.is_zero()) CHECK(t * t.inverse() == F16->one());
}
