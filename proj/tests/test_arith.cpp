#include <random>

#include "doctest.h"
#include "qsa/bivariate.hpp"
#include "qsa/cyclotomic.hpp"
#include "qsa/errors.hpp"
#include "qsa/laurent.hpp"
#include "qsa/prime_field.hpp"
#include "qsa/rational_function.hpp"
#include "qsa/specialize.hpp"

using namespace qsa;

namespace {

LaurentPoly v_pow(int k) { return LaurentPoly::term(Rat(1), k); }

LaurentPoly random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(0, 4), exp(-5, 5), num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    LaurentPoly p;
    int k = nterms(rng);
    for (int i = 0; i < k; ++i) p.add_term(make_rat(num(rng), den(rng)), exp(rng));
    return p;
}

LaurentPoly random_int_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(0, 4), exp(-4, 4), num(-6, 6);
    LaurentPoly p;
    int k = nterms(rng);
    for (int i = 0; i < k; ++i) p.add_term(Rat(num(rng)), exp(rng));
    return p;
}

} // namespace

TEST_CASE("bar involution examples") {
    CHECK((v_pow(1) + v_pow(-1)).bar() == v_pow(1) + v_pow(-1));
    CHECK(LaurentPoly::one().bar() == LaurentPoly::one());
    LaurentPoly p = LaurentPoly::term(Rat(2), 2) - v_pow(-1);
    CHECK(p.bar() == LaurentPoly::term(Rat(2), -2) - v_pow(1));
}

TEST_CASE("bar is an involutive ring homomorphism") {
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        LaurentPoly p = random_poly(rng), q = random_poly(rng);
        CHECK(p.bar().bar() == p);
        CHECK((p * q).bar() == p.bar() * q.bar());
        CHECK((p + q).bar() == p.bar() + q.bar());
    }
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937 rng(11);
    for (int i = 0; i < 150; ++i) {
        LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("exact_divide examples") {
    CHECK(exact_divide(v_pow(2) - v_pow(-2), v_pow(1) - v_pow(-1)) == v_pow(1) + v_pow(-1));
    LaurentPoly p = LaurentPoly::term(Rat(3), 4) - v_pow(0);
    CHECK(exact_divide(p, LaurentPoly::one()) == p);
    CHECK(exact_divide(v_pow(1), v_pow(2)) == v_pow(-1));
    CHECK_THROWS_AS(exact_divide(v_pow(1) + LaurentPoly::one(), v_pow(1) - LaurentPoly::one()),
                    NotDivisible);
}

TEST_CASE("exact_divide round-trip on random pairs") {
    std::mt19937 rng(13);
    for (int i = 0; i < 200; ++i) {
        LaurentPoly a = random_poly(rng), b = random_poly(rng);
        if (b.is_zero()) continue;
        CHECK(exact_divide(a * b, b) == a);
    }
}

TEST_CASE("rational function canonical form") {
    RationalFunction half(v_pow(2) - v_pow(-2), v_pow(1) - v_pow(-1));
    CHECK(half.is_polynomial());
    CHECK(half.num() == v_pow(1) + v_pow(-1));

    std::mt19937 rng(17);
    for (int i = 0; i < 120; ++i) {
        LaurentPoly a = random_poly(rng), b = random_poly(rng);
        LaurentPoly c = random_poly(rng), d = random_poly(rng);
        if (b.is_zero() || d.is_zero()) continue;
        RationalFunction x(a, b), y(c, d);
        // a/b = c/d iff ad = cb
        CHECK((x == y) == (a * d == c * b));
        // normalization idempotent
        CHECK(RationalFunction(x.num(), x.den()) == x);
        if (!y.is_zero()) CHECK(x / y * y == x);
        CHECK((x + y) - y == x);
    }
}

TEST_CASE("cyclotomic polynomials") {
    CHECK((cyclotomic_polynomial(1) == std::vector<Int>{-1, 1}));
    CHECK((cyclotomic_polynomial(4) == std::vector<Int>{1, 0, 1}));
    CHECK((cyclotomic_polynomial(6) == std::vector<Int>{1, -1, 1}));
    CHECK((cyclotomic_polynomial(12) == std::vector<Int>{1, 0, -1, 0, 1}));
}

TEST_CASE("cyclotomic field arithmetic") {
    auto z = CyclotomicNumber::zeta(4);
    CHECK(z * z == -CyclotomicNumber::one(4));
    CHECK(z.zeta_power(-1) * z == CyclotomicNumber::one(4));
    auto x = CyclotomicNumber::from_rational(6, make_rat(2, 3)) + CyclotomicNumber::zeta(6);
    CHECK(x * x.inv() == CyclotomicNumber::one(6));
}

TEST_CASE("specialize examples") {
    PrimeFieldElement two(5, 2);
    CHECK(specialize(v_pow(1) + v_pow(-1), two).is_zero()); // 2 + 3 = 0 in F_5
    CHECK(specialize(LaurentPoly::one(), two).is_one());
    CHECK(specialize(v_pow(2), 4u) == -CyclotomicNumber::one(4)); // zeta_4^2 = -1
    LaurentPoly bad = LaurentPoly::constant(make_rat(1, 5));
    CHECK_THROWS_AS(specialize(bad, two), DenominatorVanishes);
}

TEST_CASE("specialize is a ring homomorphism") {
    std::mt19937 rng(19);
    PrimeFieldElement t(7, 3);
    for (int i = 0; i < 150; ++i) {
        LaurentPoly p = random_int_poly(rng), q = random_int_poly(rng);
        CHECK(specialize(p * q, t) == specialize(p, t) * specialize(q, t));
        CHECK(specialize(p + q, t) == specialize(p, t) + specialize(q, t));
        CHECK(specialize(p * q, 6u) == specialize(p, 6u) * specialize(q, 6u));
        CHECK(specialize(p + q, 6u) == specialize(p, 6u) + specialize(q, 6u));
    }
}

TEST_CASE("bivariate substitution commutes with multiplication") {
    std::mt19937 rng(23);
    using BV = BivariatePoly;
    for (int i = 0; i < 150; ++i) {
        LaurentPoly p = random_int_poly(rng), q = random_int_poly(rng);
        BV bp = BV::from_laurent(p, BV::Var::v);
        BV bq = BV::from_laurent(q, BV::Var::vprime);
        CHECK((bp * bq).substitute_diagonal() == p * q);
        CHECK((bp + bq).substitute_diagonal() == p + q);
    }
}

TEST_CASE("prime field basics") {
    CHECK(is_prime(13));
    CHECK_FALSE(is_prime(12));
    PrimeFieldElement x(13, -5);
    CHECK(x.value() == 8);
    CHECK((x * x.inv()).is_one());
    CHECK(multiplicative_order(PrimeFieldElement(7, 3)) == 6);
    CHECK_THROWS_AS(PrimeFieldElement(10, 1), Error);
}

TEST_CASE("laurent rendering") {
    CHECK((v_pow(1) + v_pow(-1)).str() == "v^-1 + v");
    CHECK(LaurentPoly().str() == "0");
    CHECK((LaurentPoly::term(Rat(2), 2) - v_pow(-1)).str() == "-v^-1 + 2*v^2");
    CHECK(LaurentPoly::constant(make_rat(-3, 2)).str() == "-3/2");
}
